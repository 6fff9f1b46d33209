"""Exact quaternion arithmetic.

Quaternions are immutable values q = w + x e1 + y e2 + z e3 with rational
coefficients. Besides the product and the usual conjugate this module
provides the transpose (only e2 flips), the star conjugation (e1 and e2
flip) and the six sign-pattern conjugations obtained by sandwiching with an
imaginary unit.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from hypalg.core.errors import DivisionByZero, InvalidSelector
from hypalg.services.algebra.scalars import ScalarLike, to_scalar
from hypalg.services.algebra.tables import QUATERNION_TABLE, multiply_coefficients


@dataclass(frozen=True)
class Quaternion:
    """Quaternion w + x e1 + y e2 + z e3 over the rationals."""

    w: Fraction = Fraction(0)
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))

    @classmethod
    def from_coefficients(cls, coefficients) -> "Quaternion":
        """Build from a length-4 sequence of scalars."""
        w, x, y, z = coefficients
        return cls(w, x, y, z)

    @classmethod
    def basis(cls, index: int) -> "Quaternion":
        """Return the basis element 1, e1, e2 or e3 for index 0..3."""
        if not 0 <= index <= 3:
            raise InvalidSelector(f"Quaternion basis index out of range: {index}")
        coefficients = [0, 0, 0, 0]
        coefficients[index] = 1
        return cls.from_coefficients(coefficients)

    @classmethod
    def scalar(cls, value: ScalarLike) -> "Quaternion":
        return cls(value)

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_real(self) -> bool:
        return not (self.x or self.y or self.z)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: Union["Quaternion", ScalarLike]) -> "Quaternion":
        if isinstance(other, Quaternion):
            return qmul(self, other)
        if isinstance(other, (int, Fraction)):
            return Quaternion(*(c * other for c in self.coefficients))
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> "Quaternion":
        if isinstance(other, (int, Fraction)):
            return Quaternion(*(other * c for c in self.coefficients))
        return NotImplemented

    def __truediv__(self, other: ScalarLike) -> "Quaternion":
        divisor = to_scalar(other)
        if divisor == 0:
            raise DivisionByZero("Division of a quaternion by zero")
        return Quaternion(*(c / divisor for c in self.coefficients))

    def __str__(self) -> str:
        from hypalg.utils.text_format import format_quaternion

        return format_quaternion(self)


Q_ZERO = Quaternion()
Q_ONE = Quaternion(1)
E1 = Quaternion.basis(1)
E2 = Quaternion.basis(2)
E3 = Quaternion.basis(3)
UNITS: Tuple[Quaternion, Quaternion, Quaternion, Quaternion] = (Q_ONE, E1, E2, E3)


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product generated from the signed product table."""
    return Quaternion.from_coefficients(
        multiply_coefficients(QUATERNION_TABLE, a.coefficients, b.coefficients)
    )


def qconj(q: Quaternion) -> Quaternion:
    """Dagger conjugate: all three imaginary parts change sign."""
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def qnorm2(q: Quaternion) -> Fraction:
    """Squared norm w^2 + x^2 + y^2 + z^2."""
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z


def qinv(q: Quaternion) -> Quaternion:
    """Multiplicative inverse q^dagger / N(q).

    Raises:
        DivisionByZero: if q is zero
    """
    norm = qnorm2(q)
    if norm == 0:
        raise DivisionByZero("Zero quaternion has no inverse")
    return qconj(q) / norm


def qtranspose(q: Quaternion) -> Quaternion:
    """Transpose conjugate: only e2 changes sign, so (qp)^t = p^t q^t."""
    return Quaternion(q.w, q.x, -q.y, q.z)


def qstar(q: Quaternion) -> Quaternion:
    """Star conjugate: e1 and e2 change sign; a homomorphism, (qp)* = q* p*."""
    return Quaternion(q.w, -q.x, -q.y, q.z)


def real_part(q: Quaternion) -> Fraction:
    return q.w


def imag_part(q: Quaternion) -> Quaternion:
    return Quaternion(0, q.x, q.y, q.z)


def hamilton_float(a: Sequence[float], b: Sequence[float]) -> List[float]:
    """Hamilton product of float coefficient 4-vectors, same signed table."""
    return [float(v) for v in multiply_coefficients(QUATERNION_TABLE, a, b)]


# selector -> signs applied to (e1, e2, e3)
CONJUGATION_PATTERNS: Dict[int, Tuple[int, int, int]] = {
    1: (-1, 1, 1),
    2: (1, -1, 1),
    3: (1, 1, -1),
    4: (1, -1, -1),
    5: (-1, 1, -1),
    6: (-1, -1, 1),
}

# selector -> (unit index, daggered) for the closed form -e_i q^(dagger) e_i
CONJUGATION_CLOSED_FORMS: Dict[int, Tuple[int, bool]] = {
    1: (1, True),
    2: (2, True),
    3: (3, True),
    4: (1, False),
    5: (2, False),
    6: (3, False),
}


def six_conjugations(q: Quaternion, which: int) -> Quaternion:
    """Apply one of the six sign-pattern conjugations.

    Selectors 1-3 flip a single imaginary part and equal -e_i q^dagger e_i;
    selectors 4-6 flip two parts and equal -e_i q e_i (see
    ``conjugation_closed_form``).

    Args:
        q: quaternion to conjugate
        which: selector 1..6

    Returns:
        Quaternion: conjugated value

    Raises:
        InvalidSelector: if ``which`` is not in 1..6
    """
    if which not in CONJUGATION_PATTERNS:
        raise InvalidSelector(f"Conjugation selector must be 1..6, got {which}")
    s1, s2, s3 = CONJUGATION_PATTERNS[which]
    return Quaternion(q.w, s1 * q.x, s2 * q.y, s3 * q.z)


def conjugation_closed_form(q: Quaternion, which: int) -> Quaternion:
    """Evaluate the sandwich form paired with selector ``which``."""
    if which not in CONJUGATION_CLOSED_FORMS:
        raise InvalidSelector(f"Conjugation selector must be 1..6, got {which}")
    index, daggered = CONJUGATION_CLOSED_FORMS[which]
    unit = UNITS[index]
    middle = qconj(q) if daggered else q
    return -qmul(qmul(unit, middle), unit)
