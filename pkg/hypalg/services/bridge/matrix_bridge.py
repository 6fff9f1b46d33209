"""Translations between barred operators and real/complex matrices.

* quaternions -> 2x2 complex matrices (symplectic representation);
* complex-linear barred quaternions -> 2x2 complex matrices;
* barred quaternions -> 4x4 real matrices;
* left-barred octonions and right-barred terms -> 8x8 real matrices;
* complex-linear octonionic operators -> 4x4 complex matrices.

All matrices act on coefficient columns, so translating then multiplying the
column equals applying the operator then decomposing. Complex matrices embed
into real ones with the [[a, -b], [b, a]] block convention.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from hypalg.core.errors import NotComplexLinear, ShapeMismatch
from hypalg.services.algebra.complex_value import C_I, C_ONE, C_ZERO, ComplexValue
from hypalg.services.algebra.quaternion import UNITS, Quaternion
from hypalg.services.bridge.generator_rules import BlockSpec
from hypalg.services.bridge.regular import (
    octonion_left,
    octonion_unit_right,
    quaternion_left,
    quaternion_unit_right,
)
from hypalg.services.groups.operator_matrix import OperatorMatrix
from hypalg.services.linalg.exact import (
    RealMatrix,
    RowSpace,
    determinant,
    matmul,
    nullspace,
    rank,
)
from hypalg.services.operators.barred_octonion import (
    LeftBarredOctonion,
    OctonionicState,
    OctonionOperator,
    RightBarredTerm,
    apply_operator,
    left_basis_operator,
    state_compose,
    state_decompose,
)
from hypalg.services.operators.barred_quaternion import BarredQuaternion

logger = logging.getLogger(__name__)

__all__ = [
    "BlockSpec",
    "ComplexMatrix",
    "complex_linear_operators",
    "complex_linear_subalgebra",
    "complex_to_real",
    "det",
    "left_barred_rank",
    "oc_to_c4",
    "operator_matrix_to_real",
    "or_to_r8",
    "q_to_c2",
    "qc_to_c2",
    "qr_to_r4",
    "right_term_to_r8",
]


@dataclass(frozen=True)
class ComplexMatrix:
    """Exact complex matrix with ``ComplexValue`` entries."""

    rows: int
    cols: int
    data: Tuple[Tuple[ComplexValue, ...], ...]

    def __post_init__(self):
        data = tuple(tuple(row) for row in self.data)
        if len(data) != self.rows or any(len(row) != self.cols for row in data):
            raise ShapeMismatch(f"Complex matrix data does not match {self.rows}x{self.cols}")
        object.__setattr__(self, "data", data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ComplexValue]]) -> "ComplexMatrix":
        return cls(len(rows), len(rows[0]) if rows else 0, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, size: int) -> "ComplexMatrix":
        return cls.from_rows([[C_ONE if i == j else C_ZERO for j in range(size)] for i in range(size)])

    def scale(self, factor: ComplexValue) -> "ComplexMatrix":
        return ComplexMatrix(self.rows, self.cols, tuple(tuple(factor * v for v in row) for row in self.data))

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatch("Complex matrices must have the same shape")
        return ComplexMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)
        ))

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch("Complex matrix shapes do not chain")
        data = []
        for row in self.data:
            out = []
            for j in range(other.cols):
                total = C_ZERO
                for k, value in enumerate(row):
                    if not value.is_zero():
                        total = total + value * other.data[k][j]
                out.append(total)
            data.append(tuple(out))
        return ComplexMatrix(self.rows, other.cols, tuple(data))

    def real_parts(self) -> List[List[Fraction]]:
        return [[v.re for v in row] for row in self.data]

    def imag_parts(self) -> List[List[Fraction]]:
        return [[v.im for v in row] for row in self.data]


def complex_to_real(matrix: ComplexMatrix) -> RealMatrix:
    """Embed with each entry a + ib becoming the block [[a, -b], [b, a]]."""
    rows = [[Fraction(0)] * (2 * matrix.cols) for _ in range(2 * matrix.rows)]
    for i, row in enumerate(matrix.data):
        for j, value in enumerate(row):
            rows[2 * i][2 * j] = value.re
            rows[2 * i][2 * j + 1] = -value.im
            rows[2 * i + 1][2 * j] = value.im
            rows[2 * i + 1][2 * j + 1] = value.re
    return RealMatrix.from_rows(rows)


def q_to_c2(q: Quaternion) -> ComplexMatrix:
    """2x2 complex matrix of left multiplication in the basis q = c1 + e2 c2.

    e1 -> diag(i, -i), e2 -> [[0, -1], [1, 0]], e3 -> [[0, -i], [-i, 0]];
    the state components are c1 = w + i x and c2 = y - i z.
    """
    return ComplexMatrix.from_rows([
        [ComplexValue(q.w, q.x), ComplexValue(-q.y, -q.z)],
        [ComplexValue(q.y, -q.z), ComplexValue(q.w, -q.x)],
    ])


def qc_to_c2(operator: BarredQuaternion) -> ComplexMatrix:
    """2x2 complex matrix of a complex-linear operator; 1|e1 becomes i.

    Raises:
        NotComplexLinear: if the operator has |e2 or |e3 terms
    """
    if not operator.is_complex_linear():
        raise NotComplexLinear(f"{operator} is not complex linear")
    return q_to_c2(operator.q0) + q_to_c2(operator.q1).scale(C_I)


def qr_to_r4(operator: BarredQuaternion) -> RealMatrix:
    """4x4 real matrix: sum over slots of L(q_m) R(e_m)."""
    total = RealMatrix.zeros(4, 4)
    for m, q in enumerate(operator.slots):
        if q.is_zero():
            continue
        total = total + matmul(quaternion_left(q), quaternion_unit_right(m))
    return total


def or_to_r8(operator: LeftBarredOctonion) -> RealMatrix:
    """8x8 real matrix: L(o0) + sum R_m L(o_m)."""
    total = octonion_left(operator.o0)
    for m, o in enumerate(operator.om, start=1):
        if o.is_zero():
            continue
        total = total + matmul(octonion_unit_right(m), octonion_left(o))
    return total


def right_term_to_r8(term: RightBarredTerm) -> RealMatrix:
    """8x8 real matrix L(o) R_m of the right-barred term o(e_m."""
    return matmul(octonion_left(term.o), octonion_unit_right(term.m))


def octonion_operator_to_r8(operator: OctonionOperator) -> RealMatrix:
    if isinstance(operator, RightBarredTerm):
        return right_term_to_r8(operator)
    return or_to_r8(operator)


def operator_matrix_to_real(matrix: OperatorMatrix) -> RealMatrix:
    """4n x 4n real matrix with block (r, s) equal to qr_to_r4(M_rs)."""
    size = 4 * matrix.n
    rows = [[Fraction(0)] * size for _ in range(size)]
    for r, s, entry in matrix.cells():
        if entry.is_zero():
            continue
        block = qr_to_r4(entry)
        for i in range(4):
            for j in range(4):
                rows[4 * r + i][4 * s + j] = block.data[i][j]
    return RealMatrix.from_rows(rows)


def left_barred_basis() -> List[LeftBarredOctonion]:
    """The 64 basis operators e_c)e_s, slot-major."""
    return [left_basis_operator(slot, component) for slot in range(8) for component in range(8)]


def left_barred_rank(operators: Sequence[OctonionOperator] = None) -> int:
    """Exact rank of the 8x8 images viewed as 64-vectors (64 for the full basis)."""
    if operators is None:
        operators = left_barred_basis()
    return rank([octonion_operator_to_r8(op).flatten() for op in operators])


@lru_cache(maxsize=1)
def _commutant_vectors() -> Tuple[Tuple[Fraction, ...], ...]:
    r1 = octonion_unit_right(1)
    columns = []
    for op in left_barred_basis():
        image = or_to_r8(op)
        columns.append((matmul(image, r1) - matmul(r1, image)).flatten())
    constraint_rows = RealMatrix.from_columns(columns).data
    basis = nullspace(constraint_rows, 64)
    logger.info(f"Complex-linear subalgebra has dimension {len(basis)}")
    return tuple(basis)


def complex_linear_operators() -> List[LeftBarredOctonion]:
    """Left-barred operators commuting with right multiplication by e1."""
    return [LeftBarredOctonion.from_vector(v) for v in _commutant_vectors()]


def complex_linear_subalgebra() -> List[RealMatrix]:
    """8x8 real matrices X with X R1 = R1 X, as a kernel basis (32 elements)."""
    return [or_to_r8(op) for op in complex_linear_operators()]


def is_product_closed(matrices: Sequence[RealMatrix]) -> bool:
    """Check that all pairwise products stay in the span of ``matrices``."""
    if not matrices:
        return True
    space = RowSpace([m.flatten() for m in matrices], matrices[0].rows * matrices[0].cols)
    return all(space.contains(matmul(a, b).flatten()) for a in matrices for b in matrices)


def commutes_with_r1(operator: OctonionOperator) -> bool:
    image = octonion_operator_to_r8(operator)
    r1 = octonion_unit_right(1)
    return matmul(image, r1) == matmul(r1, image)


def _unit_state(index: int) -> OctonionicState:
    components = [C_ZERO] * 4
    components[index] = C_ONE
    return OctonionicState.from_components(components)


def oc_to_c4(operator: OctonionOperator) -> ComplexMatrix:
    """4x4 complex matrix of a complex-linear octonionic operator.

    Column j is the decomposed image of the unit state with c_j = 1.

    Raises:
        NotComplexLinear: if the operator does not commute with 1|e1
    """
    if not commutes_with_r1(operator):
        raise NotComplexLinear(f"{operator} does not commute with 1|e1")
    columns = []
    for j in range(4):
        image = apply_operator(operator, state_compose(_unit_state(j)))
        columns.append(state_decompose(image).components)
    return ComplexMatrix.from_rows([[columns[j][i] for j in range(4)] for i in range(4)])


def det(operator: Union[BarredQuaternion, OperatorMatrix, LeftBarredOctonion]) -> Fraction:
    """Determinant of the real regular-representation image."""
    if isinstance(operator, BarredQuaternion):
        return determinant(qr_to_r4(operator))
    if isinstance(operator, OperatorMatrix):
        return determinant(operator_matrix_to_real(operator))
    if isinstance(operator, (LeftBarredOctonion, RightBarredTerm)):
        return determinant(octonion_operator_to_r8(operator))
    raise TypeError(f"Cannot take the determinant of {type(operator).__name__}")


def quaternion_images_rank(quaternions: Sequence[Quaternion]) -> int:
    """Real rank of the 2x2 complex images, viewed as 8-vectors."""
    return rank([complex_to_real(q_to_c2(q)).flatten() for q in quaternions])


def qc_completion_rank() -> int:
    """Rank of the images of 1, e1, e2, e3 and their |e1 partners (8 = all of M2(C))."""
    operators = [BarredQuaternion.left(u) for u in UNITS]
    operators.append(BarredQuaternion.right_unit(1))
    operators += [BarredQuaternion.term(u, 1) for u in UNITS[1:]]
    return rank([complex_to_real(qc_to_c2(op)).flatten() for op in operators])
