"""Exact octonion arithmetic.

Octonions are immutable 8-tuples of rationals over the basis 1, e1..e7 with
the product generated from the seven oriented triples in
``hypalg.services.algebra.tables``. The product is not associative, so no
helper here ever regroups a product; every derived expression spells out
its grouping.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple, Union

from hypalg.core.errors import DivisionByZero, InvalidSelector, ShapeMismatch
from hypalg.services.algebra.quaternion import Quaternion
from hypalg.services.algebra.scalars import ScalarLike, to_scalar
from hypalg.services.algebra.tables import (
    OCTONION_QUADRUPLES,
    OCTONION_TABLE,
    OCTONION_TRIPLES,
    multiply_coefficients,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Octonion:
    """Octonion r0 + r1 e1 + ... + r7 e7 over the rationals."""

    c: Tuple[Fraction, ...] = (Fraction(0),) * 8

    def __post_init__(self):
        coefficients = tuple(to_scalar(v) for v in self.c)
        if len(coefficients) != 8:
            raise ShapeMismatch(f"Octonion needs 8 coefficients, got {len(coefficients)}")
        object.__setattr__(self, "c", coefficients)

    @classmethod
    def basis(cls, index: int) -> "Octonion":
        """Return 1 (index 0) or the unit e_index."""
        if not 0 <= index <= 7:
            raise InvalidSelector(f"Octonion basis index out of range: {index}")
        coefficients = [0] * 8
        coefficients[index] = 1
        return cls(tuple(coefficients))

    @classmethod
    def scalar(cls, value: ScalarLike) -> "Octonion":
        return cls((value,) + (0,) * 7)

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "Octonion":
        """Embed a quaternion into the e1, e2, e3 subalgebra."""
        return cls(q.coefficients + (0, 0, 0, 0))

    def is_zero(self) -> bool:
        return not any(self.c)

    def __getitem__(self, index: int) -> Fraction:
        return self.c[index]

    def __add__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.c))

    def __mul__(self, other: Union["Octonion", ScalarLike]) -> "Octonion":
        if isinstance(other, Octonion):
            return omul(self, other)
        if isinstance(other, (int, Fraction)):
            return Octonion(tuple(a * other for a in self.c))
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> "Octonion":
        if isinstance(other, (int, Fraction)):
            return Octonion(tuple(other * a for a in self.c))
        return NotImplemented

    def __truediv__(self, other: ScalarLike) -> "Octonion":
        divisor = to_scalar(other)
        if divisor == 0:
            raise DivisionByZero("Division of an octonion by zero")
        return Octonion(tuple(a / divisor for a in self.c))

    def __str__(self) -> str:
        from hypalg.utils.text_format import format_octonion

        return format_octonion(self)


O_ZERO = Octonion()
O_ONE = Octonion.basis(0)
OCTONION_UNITS: Tuple[Octonion, ...] = tuple(Octonion.basis(i) for i in range(8))


def omul(a: Octonion, b: Octonion) -> Octonion:
    """Binary octonion product from the signed product table."""
    return Octonion(tuple(multiply_coefficients(OCTONION_TABLE, a.c, b.c)))


def omul_chain(factors: Sequence[Octonion], group_left: bool = True) -> Octonion:
    """Multiply several octonions with an explicit grouping.

    ``group_left`` gives ((ab)c)d, otherwise a(b(cd)).
    """
    if not factors:
        return O_ONE
    if group_left:
        result = factors[0]
        for factor in factors[1:]:
            result = omul(result, factor)
        return result
    result = factors[-1]
    for factor in reversed(factors[:-1]):
        result = omul(factor, result)
    return result


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """Return {x, y, z} = (xy)z - x(yz)."""
    return omul(omul(x, y), z) - omul(x, omul(y, z))


def oconj(o: Octonion) -> Octonion:
    """Dagger conjugate: every imaginary coefficient changes sign."""
    return Octonion((o.c[0],) + tuple(-a for a in o.c[1:]))


def onorm2(o: Octonion) -> Fraction:
    """Squared norm, the sum of squared coefficients."""
    return sum((a * a for a in o.c), Fraction(0))


def oinv(o: Octonion) -> Octonion:
    """Inverse o^dagger / N(o)^2.

    Raises:
        DivisionByZero: if o is zero
    """
    norm = onorm2(o)
    if norm == 0:
        raise DivisionByZero("Zero octonion has no inverse")
    return oconj(o) / norm


def from_split(q1: Quaternion, q2: Quaternion) -> Octonion:
    """Build q1 + e4 q2 for quaternions q1, q2.

    With e5 = e1 e4, e6 = e2 e4 and e7 = e3 e4, the product e4 e_k equals
    -e_{k+4} for k = 1, 2, 3, which fixes the signs below.
    """
    return Octonion((q1.w, q1.x, q1.y, q1.z, q2.w, -q2.x, -q2.y, -q2.z))


def eps3(m: int, n: int, p: int) -> int:
    """Totally antisymmetric structure constant from the oriented triples."""
    return _permutation_sign_lookup(_EPS3, (m, n, p))


def eps4(m: int, n: int, p: int, s: int) -> int:
    """Totally antisymmetric associator constant from the oriented quadruples."""
    return _permutation_sign_lookup(_EPS4, (m, n, p, s))


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    items = list(perm)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def _antisymmetric_table(tuples) -> Dict[Tuple[int, ...], int]:
    table: Dict[Tuple[int, ...], int] = {}
    for base in tuples:
        for order in itertools.permutations(range(len(base))):
            key = tuple(base[k] for k in order)
            table[key] = _permutation_sign(order)
    return table


def _permutation_sign_lookup(table: Dict[Tuple[int, ...], int], key: Tuple[int, ...]) -> int:
    return table.get(key, 0)


_EPS3 = _antisymmetric_table(OCTONION_TRIPLES)
_EPS4 = _antisymmetric_table(OCTONION_QUADRUPLES)


@lru_cache(maxsize=1)
def associator_constants() -> Dict[Tuple[int, int, int], Tuple[int, Optional[int]]]:
    """Derive the associator constants from basis associators.

    For every ordered triple of imaginary units the associator is either zero
    or +-2 e_s. The result maps (m, n, p) to (sign, s), with (0, None) for a
    vanishing associator.

    Raises:
        ValueError: if some basis associator is not of the form +-2 e_s
    """
    constants: Dict[Tuple[int, int, int], Tuple[int, Optional[int]]] = {}
    for m, n, p in itertools.product(range(1, 8), repeat=3):
        value = associator(OCTONION_UNITS[m], OCTONION_UNITS[n], OCTONION_UNITS[p])
        nonzero = [(k, a) for k, a in enumerate(value.c) if a]
        if not nonzero:
            constants[(m, n, p)] = (0, None)
            continue
        if len(nonzero) != 1 or abs(nonzero[0][1]) != 2:
            raise ValueError(f"Unexpected associator for e{m}, e{n}, e{p}: {value}")
        s, coefficient = nonzero[0]
        constants[(m, n, p)] = (1 if coefficient > 0 else -1, s)
    logger.debug("Derived associator constants from the product table")
    return constants


def quaternionic_triples() -> Tuple[Tuple[int, int, int], ...]:
    """The seven triples spanning quaternionic subalgebras."""
    return OCTONION_TRIPLES


def is_associative_triple(triple: Tuple[int, int, int]) -> bool:
    """Check that span{1, e_a, e_b, e_c} is closed and associative."""
    units = [O_ONE] + [OCTONION_UNITS[i] for i in triple]
    allowed = {0, *triple}
    for x in units:
        for y in units:
            product = omul(x, y)
            if any(a for k, a in enumerate(product.c) if k not in allowed):
                return False
            for z in units:
                if not associator(x, y, z).is_zero():
                    return False
    return True
