"""Barred quaternionic operators.

A barred operator q0 + q1|e1 + q2|e2 + q3|e3 acts on a quaternion state as
q0 psi + q1 psi e1 + q2 psi e2 + q3 psi e3. Real-linear operators (Q_r) use
all four slots; complex-linear ones (Q_c) only q0 and q1, and are handled as
a predicate on the same type.

Composition convention: ``compose(A, B)`` applies B first, so that
``apply(compose(A, B), q) == apply(A, apply(B, q))``. With this convention
compose(1|e1, 1|e2) is -1|e3.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from hypalg.core.errors import InvalidSelector, NotComplexLinear, ShapeMismatch
from hypalg.services.algebra.complex_value import ComplexValue
from hypalg.services.algebra.quaternion import (
    Q_ONE,
    Q_ZERO,
    UNITS,
    Quaternion,
    qconj,
    qmul,
    qtranspose,
)
from hypalg.services.algebra.scalars import ScalarLike, to_scalar
from hypalg.services.algebra.tables import QUATERNION_TABLE

logger = logging.getLogger(__name__)

# sign picked up by the slot-m coefficient under the transpose
_TRANSPOSE_SLOT_SIGNS = (1, 1, -1, 1)


@dataclass(frozen=True)
class BarredQuaternion:
    """Operator q0 + q1|e1 + q2|e2 + q3|e3 (16 real parameters)."""

    q0: Quaternion = Q_ZERO
    q1: Quaternion = Q_ZERO
    q2: Quaternion = Q_ZERO
    q3: Quaternion = Q_ZERO

    @classmethod
    def from_slots(cls, slots) -> "BarredQuaternion":
        q0, q1, q2, q3 = slots
        return cls(q0, q1, q2, q3)

    @classmethod
    def left(cls, q: Quaternion) -> "BarredQuaternion":
        """Left multiplication by q."""
        return cls(q0=q)

    @classmethod
    def term(cls, q: Quaternion, m: int) -> "BarredQuaternion":
        """The single term q|e_m (m = 0 means plain left multiplication)."""
        if not 0 <= m <= 3:
            raise InvalidSelector(f"Barred slot must be 0..3, got {m}")
        slots = [Q_ZERO] * 4
        slots[m] = q
        return cls.from_slots(slots)

    @classmethod
    def right_unit(cls, m: int) -> "BarredQuaternion":
        """The operator 1|e_m, right multiplication by e_m."""
        return cls.term(Q_ONE, m)

    @classmethod
    def identity(cls) -> "BarredQuaternion":
        return cls(q0=Q_ONE)

    @classmethod
    def zero(cls) -> "BarredQuaternion":
        return cls()

    @classmethod
    def from_vector(cls, vector) -> "BarredQuaternion":
        """Build from 16 reals ordered slot-major, then component."""
        if len(vector) != 16:
            raise ShapeMismatch(f"Barred quaternion needs 16 parameters, got {len(vector)}")
        return cls.from_slots(
            [Quaternion.from_coefficients(vector[4 * m:4 * m + 4]) for m in range(4)]
        )

    @property
    def slots(self) -> Tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return (self.q0, self.q1, self.q2, self.q3)

    def to_vector(self) -> Tuple[Fraction, ...]:
        return tuple(c for q in self.slots for c in q.coefficients)

    def is_zero(self) -> bool:
        return all(q.is_zero() for q in self.slots)

    def is_complex_linear(self) -> bool:
        """Q_c predicate: no |e2 or |e3 terms."""
        return self.q2.is_zero() and self.q3.is_zero()

    def __add__(self, other: "BarredQuaternion") -> "BarredQuaternion":
        if not isinstance(other, BarredQuaternion):
            return NotImplemented
        return BarredQuaternion.from_slots([a + b for a, b in zip(self.slots, other.slots)])

    def __sub__(self, other: "BarredQuaternion") -> "BarredQuaternion":
        if not isinstance(other, BarredQuaternion):
            return NotImplemented
        return BarredQuaternion.from_slots([a - b for a, b in zip(self.slots, other.slots)])

    def __neg__(self) -> "BarredQuaternion":
        return BarredQuaternion.from_slots([-a for a in self.slots])

    def __mul__(self, other: Union["BarredQuaternion", ScalarLike]) -> "BarredQuaternion":
        if isinstance(other, BarredQuaternion):
            return compose(self, other)
        if isinstance(other, (int, Fraction)):
            return BarredQuaternion.from_slots([a * other for a in self.slots])
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> "BarredQuaternion":
        if isinstance(other, (int, Fraction)):
            return BarredQuaternion.from_slots([other * a for a in self.slots])
        return NotImplemented

    def __truediv__(self, other: ScalarLike) -> "BarredQuaternion":
        divisor = to_scalar(other)
        return BarredQuaternion.from_slots([a / divisor for a in self.slots])

    def __str__(self) -> str:
        from hypalg.utils.text_format import format_slots

        return format_slots([q.coefficients for q in self.slots], "|")


def apply(operator: BarredQuaternion, q: Quaternion) -> Quaternion:
    """Act on a quaternion: q0 q + q1 q e1 + q2 q e2 + q3 q e3."""
    result = Q_ZERO
    for m, coefficient in enumerate(operator.slots):
        if coefficient.is_zero():
            continue
        product = qmul(coefficient, q)
        if m:
            product = qmul(product, UNITS[m])
        result = result + product
    return result


def compose(a: BarredQuaternion, b: BarredQuaternion) -> BarredQuaternion:
    """Operator product, B applied first.

    (a_i|u_i)(b_j|u_j) psi = a_i b_j psi (u_j u_i), so the coefficient lands
    in the slot of u_j u_i with that product's sign.
    """
    slots = [Q_ZERO] * 4
    for i, a_i in enumerate(a.slots):
        if a_i.is_zero():
            continue
        for j, b_j in enumerate(b.slots):
            if b_j.is_zero():
                continue
            sign, k = QUATERNION_TABLE[j][i]
            product = qmul(a_i, b_j)
            slots[k] = slots[k] + (product if sign > 0 else -product)
    return BarredQuaternion.from_slots(slots)


def commutator(a: BarredQuaternion, b: BarredQuaternion) -> BarredQuaternion:
    return compose(a, b) - compose(b, a)


def dagger(operator: BarredQuaternion) -> BarredQuaternion:
    """Adjoint under the real inner product: q0^dag - sum q_m^dag|e_m."""
    q0, q1, q2, q3 = operator.slots
    return BarredQuaternion(qconj(q0), -qconj(q1), -qconj(q2), -qconj(q3))


def btranspose(operator: BarredQuaternion) -> BarredQuaternion:
    """Transpose: q0^t + q1^t|e1 - q2^t|e2 + q3^t|e3."""
    return BarredQuaternion.from_slots(
        [sign * qtranspose(q) for sign, q in zip(_TRANSPOSE_SLOT_SIGNS, operator.slots)]
    )


def complex_trace(operator: BarredQuaternion) -> ComplexValue:
    """Complex trace Re q0 + e1 Re q1 of a complex-linear operator.

    Raises:
        NotComplexLinear: if the operator has |e2 or |e3 terms
    """
    if not operator.is_complex_linear():
        raise NotComplexLinear(f"Complex trace needs a Q_c operator, got {operator}")
    return ComplexValue(operator.q0.w, operator.q1.w)


def _extended_complex_trace(operator: BarredQuaternion) -> ComplexValue:
    # Re q0 + e1 Re q1 on any Q_r operator; not cyclic, used only for witnesses
    return ComplexValue(operator.q0.w, operator.q1.w)


def real_trace(operator: BarredQuaternion) -> Fraction:
    """Real trace Re q0, cyclic on all of Q_r."""
    return operator.q0.w


def complex_projection(q: Quaternion) -> ComplexValue:
    """(q - e1 q e1)/2, the span{1, e1} part of q."""
    return ComplexValue(q.w, q.x)


def real_projection(q: Quaternion) -> Fraction:
    return q.w


def g_operator() -> BarredQuaternion:
    """g = -(1 + e1|e1 + e2|e2 + e3|e3)/2, which acts as the dagger conjugate."""
    total = BarredQuaternion.identity()
    for m in (1, 2, 3):
        total = total + BarredQuaternion.term(UNITS[m], m)
    return total * Fraction(-1, 2)


def search_noncyclic_witness(
    seed: int, trials: int = 1000, bound: int = 2
) -> Optional[Tuple[BarredQuaternion, BarredQuaternion]]:
    """Find A, B in Q_r with Tr(AB) != Tr(BA) for the extended complex trace.

    Operators are single terms q|e_m with small integer coefficients drawn
    from a seeded generator, so the search is reproducible.

    Returns:
        tuple or None: the first witness pair found
    """
    rng = random.Random(seed)
    for _ in range(trials):
        a = _random_term(rng, bound)
        b = _random_term(rng, bound)
        if _extended_complex_trace(compose(a, b)) != _extended_complex_trace(compose(b, a)):
            logger.info(f"Non-cyclic trace witness: A={a}, B={b}")
            return a, b
    return None


def _random_term(rng: random.Random, bound: int) -> BarredQuaternion:
    q = Quaternion(*(rng.randint(-bound, bound) for _ in range(4)))
    return BarredQuaternion.term(q, rng.randint(0, 3))


def random_operator(rng: random.Random, bound: int = 3, complex_linear: bool = False) -> BarredQuaternion:
    """Random operator with integer coefficients in [-bound, bound]."""
    slots = [Quaternion(*(rng.randint(-bound, bound) for _ in range(4))) for _ in range(4)]
    if complex_linear:
        slots[2] = slots[3] = Q_ZERO
    return BarredQuaternion.from_slots(slots)


def noncyclic_trace_values(a: BarredQuaternion, b: BarredQuaternion) -> Tuple[ComplexValue, ComplexValue]:
    """Extended complex traces of AB and BA."""
    return _extended_complex_trace(compose(a, b)), _extended_complex_trace(compose(b, a))
