"""Exact complex numbers living in span{1, e1}.

The "complex" values of the barred-operator formalism are quaternions (or
octonions) with only the 1 and e1 components; ``ComplexValue`` stores them
directly and converts back and forth.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from hypalg.core.errors import DivisionByZero, NotComplexLinear
from hypalg.services.algebra.quaternion import Quaternion
from hypalg.services.algebra.scalars import ScalarLike, format_scalar, to_scalar


@dataclass(frozen=True)
class ComplexValue:
    """Complex number re + e1 im with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", to_scalar(self.re))
        object.__setattr__(self, "im", to_scalar(self.im))

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "ComplexValue":
        """Convert a quaternion with y = z = 0.

        Raises:
            NotComplexLinear: if the e2 or e3 part is nonzero
        """
        if q.y or q.z:
            raise NotComplexLinear(f"Quaternion {q} is not in span(1, e1)")
        return cls(q.w, q.x)

    def to_quaternion(self) -> Quaternion:
        return Quaternion(self.re, self.im, 0, 0)

    def is_zero(self) -> bool:
        return not (self.re or self.im)

    def conjugate(self) -> "ComplexValue":
        return ComplexValue(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other: "ComplexValue") -> "ComplexValue":
        if not isinstance(other, ComplexValue):
            return NotImplemented
        return ComplexValue(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexValue") -> "ComplexValue":
        if not isinstance(other, ComplexValue):
            return NotImplemented
        return ComplexValue(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexValue":
        return ComplexValue(-self.re, -self.im)

    def __mul__(self, other: Union["ComplexValue", ScalarLike]) -> "ComplexValue":
        if isinstance(other, ComplexValue):
            return ComplexValue(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return ComplexValue(self.re * other, self.im * other)
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> "ComplexValue":
        if isinstance(other, (int, Fraction)):
            return ComplexValue(other * self.re, other * self.im)
        return NotImplemented

    def __truediv__(self, other: ScalarLike) -> "ComplexValue":
        divisor = to_scalar(other)
        if divisor == 0:
            raise DivisionByZero("Division of a complex value by zero")
        return ComplexValue(self.re / divisor, self.im / divisor)

    def __str__(self) -> str:
        from hypalg.utils.text_format import format_complex

        return format_complex(self)

    def as_strings(self):
        return [format_scalar(self.re), format_scalar(self.im)]


C_ZERO = ComplexValue()
C_ONE = ComplexValue(1)
C_I = ComplexValue(0, 1)
