"""Exception hierarchy for hypalg.

Every domain failure raised by the services derives from ``HypalgError`` so
the CLI and the FastAPI exception handler can report it uniformly. A few
subclasses also inherit from the matching builtin (``ZeroDivisionError``,
``ValueError``) so plain Python callers can catch them the usual way.
"""


class HypalgError(Exception):
    """Base class for all hypalg domain errors."""


class DivisionByZero(HypalgError, ZeroDivisionError):
    """Raised when inverting a zero quaternion or octonion."""


class InvalidSelector(HypalgError, ValueError):
    """Raised for an out-of-range selector (conjugation index, composite name)."""


class NotComplexLinear(HypalgError, ValueError):
    """Raised when an operator outside the complex-linear class is supplied.

    Examples are asking for the complex trace of a general real-linear barred
    quaternion, or reading a 4x4 complex matrix off an octonionic operator
    that does not commute with right multiplication by e1.
    """


class UnsupportedCarrier(HypalgError, ValueError):
    """Raised for group family / carrier combinations that are not defined."""


class UnsupportedMetric(HypalgError, ValueError):
    """Raised for metric / projection combinations that are not defined."""


class SingularSystem(HypalgError, ArithmeticError):
    """Raised when an exact linear solve has no unique solution."""


class ParseError(HypalgError, ValueError):
    """Raised when algebra text cannot be parsed."""


class ShapeMismatch(HypalgError, ValueError):
    """Raised when matrix or vector dimensions do not agree."""
