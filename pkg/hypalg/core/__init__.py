"""Cross-cutting primitives shared by every hypalg service."""

from hypalg.core.errors import (
    DivisionByZero,
    HypalgError,
    InvalidSelector,
    NotComplexLinear,
    ParseError,
    ShapeMismatch,
    SingularSystem,
    UnsupportedCarrier,
    UnsupportedMetric,
)

__all__ = [
    "DivisionByZero",
    "HypalgError",
    "InvalidSelector",
    "NotComplexLinear",
    "ParseError",
    "ShapeMismatch",
    "SingularSystem",
    "UnsupportedCarrier",
    "UnsupportedMetric",
]
