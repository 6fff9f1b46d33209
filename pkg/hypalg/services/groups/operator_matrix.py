"""Square matrices whose entries are barred quaternionic operators.

An n x n ``OperatorMatrix`` acts on columns of n quaternions. Products
compose entries with the "apply the right factor first" convention of
``barred_quaternion.compose``. The dagger and transpose act entrywise and
swap indices: (M^dag)_rs = (M_sr)^dag and (M^t)_rs = (M_sr)^t, which makes
both anti-automorphisms; ``naive_transpose`` only swaps indices and is kept
to exhibit why the entry conjugation is needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple, Union

from hypalg.core.errors import ShapeMismatch
from hypalg.services.algebra.quaternion import Q_ZERO, Quaternion, qconj
from hypalg.services.algebra.scalars import ScalarLike
from hypalg.services.operators.barred_quaternion import (
    BarredQuaternion,
    apply,
    btranspose,
    compose,
    dagger,
)


@dataclass(frozen=True)
class OperatorMatrix:
    """n x n matrix of ``BarredQuaternion`` entries."""

    n: int
    entries: Tuple[Tuple[BarredQuaternion, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != self.n or any(len(row) != self.n for row in entries):
            raise ShapeMismatch(f"Operator matrix entries do not form a {self.n}x{self.n} grid")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[BarredQuaternion]]) -> "OperatorMatrix":
        return cls(len(rows), tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, n: int) -> "OperatorMatrix":
        return cls(n, tuple((BarredQuaternion.zero(),) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "OperatorMatrix":
        return cls.diagonal([BarredQuaternion.identity()] * n)

    @classmethod
    def diagonal(cls, values: Sequence[BarredQuaternion]) -> "OperatorMatrix":
        n = len(values)
        zero = BarredQuaternion.zero()
        return cls(n, tuple(tuple(values[r] if r == s else zero for s in range(n)) for r in range(n)))

    @classmethod
    def scalar(cls, value: BarredQuaternion) -> "OperatorMatrix":
        """1x1 matrix holding a single operator."""
        return cls(1, ((value,),))

    @classmethod
    def from_quaternions(cls, rows: Sequence[Sequence[Quaternion]]) -> "OperatorMatrix":
        """Matrix of left-multiplication entries."""
        return cls.from_rows([[BarredQuaternion.left(q) for q in row] for row in rows])

    @classmethod
    def from_vector(cls, n: int, vector: Sequence) -> "OperatorMatrix":
        """Inverse of ``to_vector``: 16 reals per entry, entries row-major."""
        if len(vector) != 16 * n * n:
            raise ShapeMismatch(f"Expected {16 * n * n} parameters, got {len(vector)}")
        flat = [BarredQuaternion.from_vector(vector[16 * k:16 * k + 16]) for k in range(n * n)]
        return cls(n, tuple(tuple(flat[r * n:(r + 1) * n]) for r in range(n)))

    def to_vector(self) -> Tuple[Fraction, ...]:
        """All 16 n^2 real parameters: entry, then slot, then component."""
        return tuple(v for row in self.entries for entry in row for v in entry.to_vector())

    def __getitem__(self, index: Tuple[int, int]) -> BarredQuaternion:
        r, s = index
        return self.entries[r][s]

    def cells(self) -> Iterator[Tuple[int, int, BarredQuaternion]]:
        for r, row in enumerate(self.entries):
            for s, entry in enumerate(row):
                yield r, s, entry

    def is_zero(self) -> bool:
        return all(entry.is_zero() for _, _, entry in self.cells())

    def map(self, function) -> "OperatorMatrix":
        return OperatorMatrix(self.n, tuple(tuple(function(e) for e in row) for row in self.entries))

    def _check(self, other: "OperatorMatrix") -> None:
        if not isinstance(other, OperatorMatrix) or other.n != self.n:
            raise ShapeMismatch("Operator matrices must have the same size")

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check(other)
        return OperatorMatrix(self.n, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check(other)
        return OperatorMatrix(self.n, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __neg__(self) -> "OperatorMatrix":
        return self.map(lambda e: -e)

    def __mul__(self, other: Union["OperatorMatrix", ScalarLike]) -> "OperatorMatrix":
        if isinstance(other, OperatorMatrix):
            return matrix_compose(self, other)
        if isinstance(other, (int, Fraction)):
            return self.map(lambda e: e * other)
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> "OperatorMatrix":
        if isinstance(other, (int, Fraction)):
            return self.map(lambda e: e * other)
        return NotImplemented

    def __str__(self) -> str:
        if self.n == 1:
            return str(self.entries[0][0])
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.entries) + "]"


def matrix_compose(m: OperatorMatrix, n: OperatorMatrix) -> OperatorMatrix:
    """(MN)_rs = sum_t M_rt N_ts with N applied first."""
    m._check(n)
    size = m.n
    rows: List[Tuple[BarredQuaternion, ...]] = []
    for r in range(size):
        row = []
        for s in range(size):
            total = BarredQuaternion.zero()
            for t in range(size):
                left, right = m.entries[r][t], n.entries[t][s]
                if left.is_zero() or right.is_zero():
                    continue
                total = total + compose(left, right)
            row.append(total)
        rows.append(tuple(row))
    return OperatorMatrix(size, tuple(rows))


def matrix_commutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    return matrix_compose(a, b) - matrix_compose(b, a)


def matrix_dagger(m: OperatorMatrix) -> OperatorMatrix:
    return OperatorMatrix(m.n, tuple(
        tuple(dagger(m.entries[s][r]) for s in range(m.n)) for r in range(m.n)
    ))


def matrix_transpose(m: OperatorMatrix) -> OperatorMatrix:
    return OperatorMatrix(m.n, tuple(
        tuple(btranspose(m.entries[s][r]) for s in range(m.n)) for r in range(m.n)
    ))


def naive_transpose(m: OperatorMatrix) -> OperatorMatrix:
    """Index swap without transposing the entries."""
    return OperatorMatrix(m.n, tuple(
        tuple(m.entries[s][r] for s in range(m.n)) for r in range(m.n)
    ))


def apply_matrix(m: OperatorMatrix, column: Sequence[Quaternion]) -> Tuple[Quaternion, ...]:
    """Act on a column of n quaternions."""
    if len(column) != m.n:
        raise ShapeMismatch(f"Column of length {len(column)} for a {m.n}x{m.n} matrix")
    result = []
    for row in m.entries:
        total = Q_ZERO
        for entry, q in zip(row, column):
            if not entry.is_zero() and not q.is_zero():
                total = total + apply(entry, q)
        result.append(total)
    return tuple(result)


def column_dagger(column: Sequence[Quaternion]) -> Tuple[Quaternion, ...]:
    return tuple(qconj(q) for q in column)
