"""Left- and right-barred octonionic operators.

Because octonions are not associative, a barred octonionic term must say how
it groups with the state:

* left-barred  o)e_m acts as (o psi) e_m;
* right-barred o(e_m acts as o (psi e_m).

Left-barred combinations o0 + sum o_m)e_m form the canonical 64-parameter
carrier. Right-barred terms are reduced to it eagerly with an exact solve
in the regular representation, and composite units such as "e2" are stored
in reduced form. A bare o|e_m with o outside the safe cases is never
constructed.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from hypalg.core.errors import InvalidSelector, ParseError, ShapeMismatch
from hypalg.services.algebra.complex_value import ComplexValue
from hypalg.services.algebra.octonion import (
    O_ONE,
    O_ZERO,
    OCTONION_UNITS,
    Octonion,
    oconj,
    omul,
)
from hypalg.services.algebra.scalars import ScalarLike, to_scalar
from hypalg.services.bridge.regular import (
    octonion_left,
    octonion_unit_left,
    octonion_unit_right,
)
from hypalg.services.linalg.exact import RealMatrix, matmul, solve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeftBarredOctonion:
    """Operator o0 + sum_m o_m)e_m acting as o0 psi + sum (o_m psi) e_m."""

    o0: Octonion = O_ZERO
    om: Tuple[Octonion, ...] = (O_ZERO,) * 7

    def __post_init__(self):
        om = tuple(self.om)
        if len(om) != 7:
            raise ShapeMismatch(f"Left-barred octonion needs 7 barred slots, got {len(om)}")
        object.__setattr__(self, "om", om)

    @classmethod
    def left(cls, o: Octonion) -> "LeftBarredOctonion":
        return cls(o0=o)

    @classmethod
    def term(cls, o: Octonion, m: int) -> "LeftBarredOctonion":
        """The term o)e_m, or plain left multiplication for m = 0."""
        if m == 0:
            return cls(o0=o)
        if not 1 <= m <= 7:
            raise InvalidSelector(f"Barred slot must be 0..7, got {m}")
        om = [O_ZERO] * 7
        om[m - 1] = o
        return cls(om=tuple(om))

    @classmethod
    def identity(cls) -> "LeftBarredOctonion":
        return cls(o0=O_ONE)

    @classmethod
    def from_vector(cls, vector) -> "LeftBarredOctonion":
        """Build from 64 reals ordered slot-major, then component."""
        if len(vector) != 64:
            raise ShapeMismatch(f"Left-barred octonion needs 64 parameters, got {len(vector)}")
        slots = [Octonion(tuple(vector[8 * s:8 * s + 8])) for s in range(8)]
        return cls(o0=slots[0], om=tuple(slots[1:]))

    @property
    def slots(self) -> Tuple[Octonion, ...]:
        return (self.o0,) + self.om

    def to_vector(self) -> Tuple[Fraction, ...]:
        return tuple(c for o in self.slots for c in o.c)

    def is_zero(self) -> bool:
        return all(o.is_zero() for o in self.slots)

    def __add__(self, other: "LeftBarredOctonion") -> "LeftBarredOctonion":
        if not isinstance(other, LeftBarredOctonion):
            return NotImplemented
        return LeftBarredOctonion.from_vector(
            [a + b for a, b in zip(self.to_vector(), other.to_vector())]
        )

    def __sub__(self, other: "LeftBarredOctonion") -> "LeftBarredOctonion":
        if not isinstance(other, LeftBarredOctonion):
            return NotImplemented
        return LeftBarredOctonion.from_vector(
            [a - b for a, b in zip(self.to_vector(), other.to_vector())]
        )

    def __neg__(self) -> "LeftBarredOctonion":
        return self * -1

    def __mul__(self, other: ScalarLike) -> "LeftBarredOctonion":
        if isinstance(other, (int, Fraction)):
            return LeftBarredOctonion.from_vector([a * other for a in self.to_vector()])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "LeftBarredOctonion":
        return self * (1 / to_scalar(other))

    def __str__(self) -> str:
        from hypalg.utils.text_format import format_slots

        return format_slots([o.c for o in self.slots], ")")


@dataclass(frozen=True)
class RightBarredTerm:
    """Term o(e_m acting as o (psi e_m)."""

    o: Octonion
    m: int

    def __post_init__(self):
        if not 1 <= self.m <= 7:
            raise InvalidSelector(f"Right-barred unit must be 1..7, got {self.m}")

    def __str__(self) -> str:
        from hypalg.utils.text_format import format_octonion

        body = format_octonion(self.o)
        if " " in body:
            body = f"({body})"
        return f"{body}(e{self.m}"


OctonionOperator = Union[LeftBarredOctonion, RightBarredTerm]


@dataclass(frozen=True)
class OctonionicState:
    """Symplectic components of o = c1 + e2 c2 + e4 c3 + e6 c4."""

    c1: ComplexValue
    c2: ComplexValue
    c3: ComplexValue
    c4: ComplexValue

    @property
    def components(self) -> Tuple[ComplexValue, ComplexValue, ComplexValue, ComplexValue]:
        return (self.c1, self.c2, self.c3, self.c4)

    @classmethod
    def from_components(cls, components) -> "OctonionicState":
        c1, c2, c3, c4 = components
        return cls(c1, c2, c3, c4)


def apply_left(operator: LeftBarredOctonion, psi: Octonion) -> Octonion:
    """Act with a left-barred operator, grouping each term as (o_m psi) e_m."""
    result = omul(operator.o0, psi)
    for m, o in enumerate(operator.om, start=1):
        if o.is_zero():
            continue
        result = result + omul(omul(o, psi), OCTONION_UNITS[m])
    return result


def apply_right(term: RightBarredTerm, psi: Octonion) -> Octonion:
    """Act with a right-barred term, grouping as o (psi e_m)."""
    return omul(term.o, omul(psi, OCTONION_UNITS[term.m]))


def apply_operator(operator: OctonionOperator, psi: Octonion) -> Octonion:
    if isinstance(operator, RightBarredTerm):
        return apply_right(operator, psi)
    return apply_left(operator, psi)


def left_basis_operator(slot: int, component: int) -> LeftBarredOctonion:
    """Basis element e_c)e_s of the 64-dimensional left-barred space."""
    return LeftBarredOctonion.term(OCTONION_UNITS[component], slot)


@lru_cache(maxsize=None)
def _left_basis_matrix() -> RealMatrix:
    # column k = flattened 8x8 image of the k-th left-barred basis operator
    columns = []
    for slot in range(8):
        for component in range(8):
            image = matmul(octonion_unit_right(slot), octonion_unit_left(component))
            columns.append(image.flatten())
    return RealMatrix.from_columns(columns)


@lru_cache(maxsize=None)
def reduce_right(term: RightBarredTerm) -> LeftBarredOctonion:
    """Rewrite o(e_m as a left-barred combination with the same action.

    Solves exactly for the 64 coefficients whose regular-representation
    image equals L_o R_m.

    Raises:
        SingularSystem: never for a complete left-barred basis
    """
    target = matmul(octonion_left(term.o), octonion_unit_right(term.m))
    coefficients = solve(_left_basis_matrix(), target.flatten())
    logger.debug(f"Reduced {term} to left-barred form")
    return LeftBarredOctonion.from_vector(coefficients)


def to_left_barred(operator: OctonionOperator) -> LeftBarredOctonion:
    if isinstance(operator, RightBarredTerm):
        return reduce_right(operator)
    return operator


def _correction(k: int, sign: int) -> LeftBarredOctonion:
    # ((e_k)e1 +- e_k(e1))/2 in reduced form
    left = LeftBarredOctonion.term(OCTONION_UNITS[k], 1)
    right = reduce_right(RightBarredTerm(OCTONION_UNITS[k], 1))
    return (left + right * sign) / 2


# name -> (plain unit, correction unit k, correction sign, correction weight)
_COMPOSITES: Dict[str, Tuple[Optional[int], int, int, int]] = {
    "e2": (2, 3, -1, 1),
    "e4": (4, 5, -1, 1),
    "e6": (6, 7, -1, -1),
    "h2": (None, 3, 1, 1),
    "h4": (None, 5, 1, 1),
    "h6": (None, 7, 1, 1),
}

COMPOSITE_NAMES = tuple(_COMPOSITES)


def correction_term(k: int) -> LeftBarredOctonion:
    """((e_k)e1 - e_k(e1))/2, which vanishes on the quaternions for k = 3."""
    return _correction(k, -1)


@lru_cache(maxsize=None)
def composite_unit(name: str) -> LeftBarredOctonion:
    """Complex-linear counterparts of e2, e4, e6 and their hermitian partners.

    ``"e2"`` is e2 + ((e3)e1 - e3(e1))/2, ``"e4"`` is e4 + ((e5)e1 - e5(e1))/2,
    ``"e6"`` is e6 - ((e7)e1 - e7(e1))/2; ``"h2"``, ``"h4"``, ``"h6"`` are
    ((e_k)e1 + e_k(e1))/2 for k = 3, 5, 7.

    Raises:
        InvalidSelector: for an unknown name
    """
    key = name.strip('"').lower()
    if key not in _COMPOSITES:
        raise InvalidSelector(f"Unknown composite unit {name!r}; expected one of {COMPOSITE_NAMES}")
    unit, k, sign, weight = _COMPOSITES[key]
    result = _correction(k, sign) * weight
    if unit is not None:
        result = result + LeftBarredOctonion.left(OCTONION_UNITS[unit])
    return result


def octonion_complex_projection(o: Octonion) -> ComplexValue:
    """(o - e1 o e1)/2, the span{1, e1} part of an octonion."""
    return ComplexValue(o.c[0], o.c[1])


def state_decompose(o: Octonion) -> OctonionicState:
    """Split o into (c1, c2, c3, c4) with o = c1 + e2 c2 + e4 c3 + e6 c4."""
    r = o.c
    return OctonionicState(
        ComplexValue(r[0], r[1]),
        ComplexValue(r[2], -r[3]),
        ComplexValue(r[4], -r[5]),
        ComplexValue(r[6], r[7]),
    )


def state_compose(state: OctonionicState) -> Octonion:
    """Inverse of ``state_decompose``."""
    c1, c2, c3, c4 = state.components
    return Octonion((c1.re, c1.im, c2.re, -c2.im, c3.re, -c3.im, c4.re, c4.im))


def state_inner_product(psi: Octonion, phi: Octonion) -> ComplexValue:
    """Complex projection of the binary product psi^dagger phi."""
    return octonion_complex_projection(omul(oconj(psi), phi))


@dataclass(frozen=True)
class Witness:
    """Basis pair where an (anti)hermiticity check fails."""

    psi: Octonion
    phi: Octonion
    lhs: ComplexValue
    rhs: ComplexValue


@dataclass(frozen=True)
class HermiticityVerdict:
    """Outcome of an exhaustive (anti)hermiticity check."""

    holds: bool
    witness: Optional[Witness] = None

    @property
    def antihermitian(self) -> bool:
        return self.holds


def _hermiticity_check(operator: OctonionOperator, sign: int) -> HermiticityVerdict:
    left_barred = to_left_barred(operator)
    images = [apply_left(left_barred, u) for u in OCTONION_UNITS]
    for i, psi in enumerate(OCTONION_UNITS):
        for j, phi in enumerate(OCTONION_UNITS):
            lhs = state_inner_product(images[i], phi)
            rhs = state_inner_product(psi, images[j]) * sign
            if lhs != rhs:
                return HermiticityVerdict(False, Witness(psi, phi, lhs, rhs))
    return HermiticityVerdict(True)


def antihermiticity_test(operator: OctonionOperator) -> HermiticityVerdict:
    """Check P((A psi)^dagger phi) = -P(psi^dagger (A phi)) on all basis pairs.

    Both sides are real-bilinear in (psi, phi), so the 64 basis pairs decide
    the question exactly.

    Returns:
        HermiticityVerdict: ``holds`` plus the first failing pair, if any
    """
    return _hermiticity_check(operator, -1)


def hermiticity_test(operator: OctonionOperator) -> HermiticityVerdict:
    """Check P((A psi)^dagger phi) = P(psi^dagger (A phi)) on all basis pairs."""
    return _hermiticity_check(operator, 1)


_SYMBOL = re.compile(r"^(?:(1|e[1-7])(?:([|)(])e([1-7]))?)$")


def parse_operator_symbol(text: str) -> OctonionOperator:
    """Parse an octonionic operator symbol.

    Accepted forms: ``1``, ``e3``, ``1|e6``, ``e2|e2``, ``e3)e1``, ``e3(e1``
    and the composite names ``"e2"``, ``"e4"``, ``"e6"``, ``h2``, ``h4``,
    ``h6``. A bar is only accepted where both groupings agree (left factor 1
    or e_m|e_m).

    Raises:
        ParseError: for anything else
    """
    compact = text.strip()
    if compact.startswith('"') or compact.lower() in ("h2", "h4", "h6"):
        try:
            return composite_unit(compact)
        except InvalidSelector as exc:
            raise ParseError(str(exc)) from exc
    match = _SYMBOL.match(compact)
    if not match:
        raise ParseError(f"Unknown octonionic operator symbol {text!r}")
    factor, marker, unit = match.groups()
    factor_index = 0 if factor == "1" else int(factor[1])
    base = OCTONION_UNITS[factor_index]
    if marker is None:
        return LeftBarredOctonion.left(base)
    m = int(unit)
    if marker == "|":
        if factor_index not in (0, m):
            raise ParseError(f"{text!r} is ambiguous: use e_m)e_n or e_m(e_n")
        return LeftBarredOctonion.term(base, m)
    if marker == ")":
        return LeftBarredOctonion.term(base, m)
    return RightBarredTerm(base, m)


def operator_family() -> List[Tuple[str, OctonionOperator]]:
    """The 106 symbols {1, e_m, 1|e_m}, {e_m|e_m}, {e_m)e_n}, {e_m(e_n}."""
    family: List[Tuple[str, OctonionOperator]] = [("1", LeftBarredOctonion.identity())]
    for m in range(1, 8):
        family.append((f"e{m}", LeftBarredOctonion.left(OCTONION_UNITS[m])))
    for m in range(1, 8):
        family.append((f"1|e{m}", LeftBarredOctonion.term(O_ONE, m)))
    for m in range(1, 8):
        family.append((f"e{m}|e{m}", LeftBarredOctonion.term(OCTONION_UNITS[m], m)))
    for m in range(1, 8):
        for n in range(1, 8):
            if m != n:
                family.append((f"e{m})e{n}", LeftBarredOctonion.term(OCTONION_UNITS[m], n)))
    for m in range(1, 8):
        for n in range(1, 8):
            if m != n:
                family.append((f"e{m}(e{n}", RightBarredTerm(OCTONION_UNITS[m], n)))
    return family
