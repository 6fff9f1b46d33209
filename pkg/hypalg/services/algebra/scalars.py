"""Exact rational scalars.

All algebra in hypalg is carried out over ``fractions.Fraction``. This module
centralizes coercion and the canonical string form ("3", "-1/2").
"""

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Tuple, Union

from hypalg.core.errors import ParseError

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction.

    Floats are rejected.

    Args:
        value: integer, Fraction or text such as "-3/4"

    Returns:
        Fraction: the exact value

    Raises:
        ParseError: if the value is not an exact rational
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"Not a rational scalar: {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"Not a rational scalar: {value!r}") from exc
    raise ParseError(f"Not a rational scalar: {value!r}")


def to_scalars(values: Iterable[ScalarLike]) -> Tuple[Fraction, ...]:
    """Coerce an iterable of values with ``to_scalar``."""
    return tuple(to_scalar(v) for v in values)


def format_scalar(value: Fraction) -> str:
    """Render a Fraction as "n" or "n/d"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
