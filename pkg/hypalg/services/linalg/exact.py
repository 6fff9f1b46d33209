"""Exact rational linear algebra.

Gaussian elimination over ``fractions.Fraction`` for everything the algebra
needs: reduced row-echelon form, rank, kernel bases, unique solves,
determinants, the inertia of symmetric forms and row-space membership.
Rows are stored sparsely (column -> value dicts) during elimination because
the constraint systems assembled by the group lab are mostly zeros.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from hypalg.core.errors import ShapeMismatch, SingularSystem
from hypalg.services.algebra.scalars import format_scalar, to_scalar

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
SparseRow = Dict[int, Fraction]


@dataclass(frozen=True)
class RealMatrix:
    """Immutable exact rational matrix."""

    rows: int
    cols: int
    data: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        data = tuple(tuple(to_scalar(v) for v in row) for row in self.data)
        if len(data) != self.rows or any(len(row) != self.cols for row in data):
            raise ShapeMismatch(f"Matrix data does not match shape {self.rows}x{self.cols}")
        object.__setattr__(self, "data", data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RealMatrix":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RealMatrix":
        columns = [list(c) for c in columns]
        n_rows = len(columns[0]) if columns else 0
        return cls.from_rows([[column[i] for column in columns] for i in range(n_rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RealMatrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> "RealMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, index: int) -> Vector:
        return tuple(row[index] for row in self.data)

    def flatten(self) -> Vector:
        return tuple(v for row in self.data for v in row)

    def transpose(self) -> "RealMatrix":
        return RealMatrix.from_columns(self.data) if self.rows else self

    def is_zero(self) -> bool:
        return not any(self.flatten())

    def __add__(self, other: "RealMatrix") -> "RealMatrix":
        _check_same_shape(self, other)
        return RealMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)
        ))

    def __sub__(self, other: "RealMatrix") -> "RealMatrix":
        _check_same_shape(self, other)
        return RealMatrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)
        ))

    def __neg__(self) -> "RealMatrix":
        return self.scale(-1)

    def scale(self, factor) -> "RealMatrix":
        factor = to_scalar(factor)
        return RealMatrix(self.rows, self.cols, tuple(tuple(factor * v for v in row) for row in self.data))

    def __matmul__(self, other):
        if isinstance(other, RealMatrix):
            return matmul(self, other)
        return matvec(self, other)

    def to_numpy(self) -> np.ndarray:
        """Float copy for the numeric (Lorentz) code paths."""
        return np.array([[float(v) for v in row] for row in self.data], dtype=float)

    def as_strings(self) -> List[List[str]]:
        return [[format_scalar(v) for v in row] for row in self.data]


def _check_same_shape(a: RealMatrix, b: RealMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeMismatch(f"Shapes differ: {a.shape} vs {b.shape}")


def matmul(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ShapeMismatch(f"Cannot multiply {a.shape} by {b.shape}")
    b_columns = [b.column(j) for j in range(b.cols)]
    data = []
    for row in a.data:
        nonzero = [(k, v) for k, v in enumerate(row) if v]
        data.append(tuple(
            sum((v * column[k] for k, v in nonzero), Fraction(0)) for column in b_columns
        ))
    return RealMatrix(a.rows, b.cols, tuple(data))


def matvec(a: RealMatrix, vector: Sequence) -> Vector:
    """Exact matrix-vector product."""
    if a.cols != len(vector):
        raise ShapeMismatch(f"Cannot apply {a.shape} matrix to length-{len(vector)} vector")
    return tuple(sum((v * vector[k] for k, v in enumerate(row) if v), Fraction(0)) for row in a.data)


def _to_sparse(rows: Iterable[Sequence]) -> List[SparseRow]:
    return [{k: to_scalar(v) for k, v in enumerate(row) if v} for row in rows]


def _rref_sparse(rows: List[SparseRow], ncols: int) -> Tuple[List[SparseRow], List[int]]:
    """Reduce sparse rows in place order to RREF; returns (rows, pivot columns)."""
    pending = [dict(r) for r in rows if r]
    reduced: List[SparseRow] = []
    pivots: List[int] = []
    for column in range(ncols):
        pivot_index = next((i for i, r in enumerate(pending) if column in r), None)
        if pivot_index is None:
            continue
        pivot_row = pending.pop(pivot_index)
        inverse = 1 / pivot_row[column]
        pivot_row = {k: v * inverse for k, v in pivot_row.items()}
        for target in pending + reduced:
            factor = target.get(column)
            if factor:
                for k, v in pivot_row.items():
                    value = target.get(k, 0) - factor * v
                    if value:
                        target[k] = value
                    else:
                        target.pop(k, None)
        pending = [r for r in pending if r]
        reduced.append(pivot_row)
        pivots.append(column)
        if not pending:
            break
    return reduced, pivots


def rref(rows: Sequence[Sequence], ncols: int = None) -> Tuple[List[Vector], List[int]]:
    """Reduced row-echelon form of a dense matrix given as rows.

    Args:
        rows: matrix rows of rational-like values
        ncols: column count, inferred from the first row when omitted

    Returns:
        tuple: (nonzero RREF rows as dense tuples, pivot column indices)
    """
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    reduced, pivots = _rref_sparse(_to_sparse(rows), ncols)
    dense = [tuple(r.get(k, Fraction(0)) for k in range(ncols)) for r in reduced]
    return dense, pivots


def rank(vectors: Sequence[Sequence]) -> int:
    """Exact rank of a set of vectors (rows)."""
    vectors = list(vectors)
    if not vectors:
        return 0
    _, pivots = _rref_sparse(_to_sparse(vectors), len(vectors[0]))
    return len(pivots)


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[Vector]:
    """Canonical kernel basis of the matrix with the given rows.

    One basis vector per free column, ordered by free column: it has a 1 in
    that column, zeros in the other free columns, and the back-substituted
    pivot values. The result is deterministic for a fixed column ordering.
    """
    reduced, pivots = _rref_sparse(_to_sparse(rows), ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        basis.append(tuple(vector))
    logger.debug(f"Kernel of {len(rows)}x{ncols} system has dimension {len(basis)}")
    return basis


def canonical_basis(vectors: Sequence[Sequence]) -> List[Vector]:
    """RREF rows spanning the same space as ``vectors``."""
    vectors = list(vectors)
    if not vectors:
        return []
    return rref(vectors)[0]


def solve(matrix: RealMatrix, rhs: Sequence) -> Vector:
    """Solve ``matrix @ x = rhs`` exactly for the unique x.

    Raises:
        SingularSystem: if the system is inconsistent or underdetermined
    """
    if len(rhs) != matrix.rows:
        raise ShapeMismatch("Right-hand side length does not match matrix rows")
    augmented = [list(row) + [to_scalar(b)] for row, b in zip(matrix.data, rhs)]
    reduced, pivots = _rref_sparse(_to_sparse(augmented), matrix.cols + 1)
    if matrix.cols in pivots:
        raise SingularSystem("Linear system is inconsistent")
    if len(pivots) != matrix.cols:
        raise SingularSystem(f"Linear system has {matrix.cols - len(pivots)} free variables")
    solution = [Fraction(0)] * matrix.cols
    for row, pivot in zip(reduced, pivots):
        solution[pivot] = row.get(matrix.cols, Fraction(0))
    return tuple(solution)


def determinant(matrix: RealMatrix) -> Fraction:
    """Exact determinant by fraction-preserving elimination."""
    if matrix.rows != matrix.cols:
        raise ShapeMismatch(f"Determinant needs a square matrix, got {matrix.shape}")
    work = [list(row) for row in matrix.data]
    size = matrix.rows
    result = Fraction(1)
    for column in range(size):
        pivot = next((r for r in range(column, size) if work[r][column]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != column:
            work[column], work[pivot] = work[pivot], work[column]
            result = -result
        pivot_value = work[column][column]
        result *= pivot_value
        for r in range(column + 1, size):
            factor = work[r][column]
            if factor:
                ratio = factor / pivot_value
                for c in range(column, size):
                    work[r][c] -= ratio * work[column][c]
    return result


def inertia(symmetric: RealMatrix) -> Tuple[int, int, int]:
    """Sylvester inertia (positive, negative, zero) of a symmetric matrix.

    Diagonalizes by congruence: a nonzero diagonal pivot is eliminated from
    its row and column; if the remaining diagonal is zero but some
    off-diagonal entry a_ij is not, row/column j is added to row/column i
    first, which makes a_ii = 2 a_ij nonzero.

    Raises:
        ShapeMismatch: if the matrix is not square and symmetric
    """
    if symmetric.rows != symmetric.cols or symmetric.transpose() != symmetric:
        raise ShapeMismatch("Inertia needs a square symmetric matrix")
    work = [list(row) for row in symmetric.data]
    active = list(range(symmetric.rows))
    positive = negative = 0
    while active:
        pivot = next((i for i in active if work[i][i]), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i != j and work[i][j]), None)
            if pair is None:
                break
            i, j = pair
            for k in range(len(work)):
                work[i][k] += work[j][k]
            for k in range(len(work)):
                work[k][i] += work[k][j]
            pivot = i
        d = work[pivot][pivot]
        if d > 0:
            positive += 1
        else:
            negative += 1
        active.remove(pivot)
        row = list(work[pivot])
        for r in active:
            if row[r]:
                factor = row[r] / d
                for c in active:
                    work[r][c] -= factor * row[c]
    return positive, negative, len(active)


class RowSpace:
    """Span of a set of vectors with an exact membership test."""

    def __init__(self, vectors: Sequence[Sequence], dimension: int):
        """Reduce ``vectors`` (each of length ``dimension``) to RREF."""
        self.dimension = dimension
        self._rows, self._pivots = _rref_sparse(_to_sparse(vectors), dimension)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def residual(self, vector: Sequence) -> SparseRow:
        """Remainder of ``vector`` after reduction against the span."""
        remainder = {k: to_scalar(v) for k, v in enumerate(vector) if v}
        for row, pivot in zip(self._rows, self._pivots):
            factor = remainder.get(pivot)
            if factor:
                for k, v in row.items():
                    value = remainder.get(k, 0) - factor * v
                    if value:
                        remainder[k] = value
                    else:
                        remainder.pop(k, None)
        return remainder

    def contains(self, vector: Sequence) -> bool:
        if len(vector) != self.dimension:
            raise ShapeMismatch(f"Vector length {len(vector)} != {self.dimension}")
        return not self.residual(vector)

    def same_span(self, other: "RowSpace") -> bool:
        """Exact equality of two spans."""
        return self.rank == other.rank and all(
            other.contains([row.get(k, 0) for k in range(self.dimension)]) for row in self._rows
        )
