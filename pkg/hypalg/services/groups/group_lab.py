"""Generator derivation for hypercomplex groups.

Each group family is defined by a linear condition on its generators A
(n x n matrices of barred operators over a carrier):

    U, SU   A + A^dag = 0        (SU adds a trace condition)
    O       A + A^t = 0
    O~      G A + A^dag G = 0    with G = diag(g, ..., g)
    Sp      J A + A^t J = 0

The condition is evaluated on every unit parameter matrix to assemble an
exact constraint system whose rational kernel is the generator basis. The
basis is returned in reduced row-echelon form over the fixed parameter
ordering (entry, then barred slot, then quaternion component), so results
are deterministic.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from hypalg.core.errors import UnsupportedCarrier, UnsupportedMetric
from hypalg.services.algebra.quaternion import (
    E1,
    E2,
    Q_ONE,
    Q_ZERO,
    UNITS,
    Quaternion,
    qconj,
    qmul,
    qstar,
    qtranspose,
)
from hypalg.services.groups.operator_matrix import (
    OperatorMatrix,
    apply_matrix,
    matrix_commutator,
    matrix_compose,
    matrix_dagger,
    matrix_transpose,
    naive_transpose,
)
from hypalg.services.groups.specs import (
    CARRIER_PARAMETERS,
    DIMENSION_TABLE_ROWS,
    Carrier,
    Family,
    GroupSpec,
    MetricKind,
    MetricSpec,
    Projection,
    default_metric,
    dimension_formula,
    partner,
)
from hypalg.services.linalg.exact import (
    RealMatrix,
    RowSpace,
    canonical_basis,
    inertia,
    nullspace,
)
from hypalg.services.operators.barred_quaternion import BarredQuaternion, g_operator

logger = logging.getLogger(__name__)


class TraceCondition(Enum):
    """Trace-zero condition added for special groups."""

    REAL = "real"
    COMPLEX = "complex"


@dataclass
class Constraint:
    """Linear defining condition of a group spec.

    ``evaluate`` returns the flattened residual followed by any trace values;
    an operator matrix satisfies the condition iff all of them vanish.
    """

    spec: GroupSpec
    residual: Callable[[OperatorMatrix], OperatorMatrix]
    trace: Optional[TraceCondition] = None
    notice: Optional[str] = None

    def trace_values(self, matrix: OperatorMatrix) -> Tuple[Fraction, ...]:
        if self.trace is None:
            return ()
        diagonal = [matrix[r, r] for r in range(matrix.n)]
        real = sum((d.q0.w for d in diagonal), Fraction(0))
        if self.trace is TraceCondition.REAL:
            return (real,)
        if self.spec.carrier is Carrier.C:
            return (real, sum((d.q0.x for d in diagonal), Fraction(0)))
        return (real, sum((d.q1.w for d in diagonal), Fraction(0)))

    def evaluate(self, matrix: OperatorMatrix) -> Tuple[Fraction, ...]:
        return self.residual(matrix).to_vector() + self.trace_values(matrix)

    def __call__(self, matrix: OperatorMatrix) -> bool:
        return not any(self.evaluate(matrix))


@dataclass
class GeneratorBasis:
    """Exact generator basis of a group spec."""

    spec: GroupSpec
    basis: List[OperatorMatrix]
    constraint: Constraint
    notice: Optional[str] = None
    alternatives: Dict[str, int] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ClosureVerdict:
    closed: bool
    pair: Optional[Tuple[int, int]] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class Signature:
    """Inertia of a real quadratic form."""

    positive: int
    negative: int
    radical: int = 0

    def as_pair(self) -> Tuple[int, int]:
        return (self.positive, self.negative)


@dataclass(frozen=True)
class InvarianceViolation:
    generator: int
    psi: Tuple[Quaternion, ...]
    phi: Tuple[Quaternion, ...]
    value: object


@dataclass(frozen=True)
class InvarianceVerdict:
    invariant: bool
    violation: Optional[InvarianceViolation] = None


def g_matrix(n: int, twist: Optional[BarredQuaternion] = None) -> OperatorMatrix:
    """G = diag(g, ..., g), g applied entrywise on the diagonal."""
    return OperatorMatrix.diagonal([twist or g_operator()] * n)


def symplectic_J(n: int, carrier: Carrier = Carrier.Q) -> OperatorMatrix:
    """Non-singular antisymmetric metric J.

    Even n = 2k: [[0, 1_k], [-1_k, 0]]. Odd n = 2k + 1 (quaternionic carriers
    only): [[0, 0, 1_k], [0, e2, 0], [-1_k, 0, 0]], so J = (e2) for n = 1.

    Raises:
        UnsupportedCarrier: for odd n over r or c
    """
    if n % 2 and carrier in (Carrier.R, Carrier.C):
        raise UnsupportedCarrier("Odd symplectic metric needs a quaternionic carrier")
    k = n // 2
    one = BarredQuaternion.identity()
    zero = BarredQuaternion.zero()
    rows = [[zero] * n for _ in range(n)]
    offset = n - k
    for i in range(k):
        rows[i][offset + i] = one
        rows[offset + i][i] = -one
    if n % 2:
        rows[k][k] = BarredQuaternion.left(E2)
    return OperatorMatrix.from_rows(rows)


def defining_constraint(spec: GroupSpec, trace: Optional[TraceCondition] = None) -> Constraint:
    """Linear defining condition of a group spec.

    SU over q, Q_r and r resolves to U with a notice, because the real trace
    of an antihermitian matrix already vanishes there. SU over Q_c and c uses
    the complex trace unless ``trace`` says otherwise.
    """
    family = spec.family
    notice = None
    if family is Family.SU:
        if spec.carrier in (Carrier.Q, Carrier.QR, Carrier.R) and trace is None:
            notice = f"SU({spec.n},{spec.carrier.value}) coincides with U({spec.n},{spec.carrier.value})"
            logger.warning(notice)
        elif trace is None:
            trace = TraceCondition.COMPLEX

    if family in (Family.U, Family.SU):
        def residual(a: OperatorMatrix) -> OperatorMatrix:
            return a + matrix_dagger(a)
    elif family is Family.O:
        def residual(a: OperatorMatrix) -> OperatorMatrix:
            return a + matrix_transpose(a)
    elif family is Family.O_TILDE:
        g = g_matrix(spec.n)

        def residual(a: OperatorMatrix) -> OperatorMatrix:
            return matrix_compose(g, a) + matrix_compose(matrix_dagger(a), g)
    else:
        j = symplectic_J(spec.n, spec.carrier)

        def residual(a: OperatorMatrix) -> OperatorMatrix:
            return matrix_compose(j, a) + matrix_compose(matrix_transpose(a), j)

    return Constraint(spec, residual, trace, notice)


def _full_index(n: int, r: int, s: int, slot: int, component: int) -> int:
    return 16 * (r * n + s) + 4 * slot + component


def parameter_positions(spec: GroupSpec) -> List[int]:
    """Positions of the carrier's parameters inside the full 16 n^2 vector."""
    return [
        _full_index(spec.n, r, s, slot, component)
        for r in range(spec.n)
        for s in range(spec.n)
        for slot, component in CARRIER_PARAMETERS[spec.carrier]
    ]


def embed_parameters(spec: GroupSpec, vector: Sequence[Fraction]) -> OperatorMatrix:
    full = [Fraction(0)] * (16 * spec.n * spec.n)
    for position, value in zip(parameter_positions(spec), vector):
        full[position] = value
    return OperatorMatrix.from_vector(spec.n, full)


def _kernel(constraint: Constraint) -> List[Tuple[Fraction, ...]]:
    spec = constraint.spec
    positions = parameter_positions(spec)
    full_size = 16 * spec.n * spec.n
    columns = []
    for position in positions:
        unit = [0] * full_size
        unit[position] = 1
        columns.append(constraint.evaluate(OperatorMatrix.from_vector(spec.n, unit)))
    rows = [list(row) for row in zip(*columns)]
    return canonical_basis(nullspace(rows, len(positions)))


def solve_generators(spec: GroupSpec, trace: Optional[TraceCondition] = None) -> GeneratorBasis:
    """Exact generator basis of ``spec``.

    For SU over Q_c the kernels for both trace readings are computed and
    recorded in ``alternatives``; the complex trace (two real conditions) is
    the one whose count is 4n^2 - 1.
    """
    logger.info(f"Solving generators for {spec.label}")
    constraint = defining_constraint(spec, trace)
    vectors = _kernel(constraint)
    basis = GeneratorBasis(
        spec=spec,
        basis=[embed_parameters(spec, v) for v in vectors],
        constraint=constraint,
        notice=constraint.notice,
    )
    if spec.family is Family.SU and spec.carrier in (Carrier.QC, Carrier.C) and trace is None:
        real_only = len(_kernel(defining_constraint(spec, TraceCondition.REAL)))
        basis.alternatives = {"complex_trace": basis.dim, "real_trace": real_only}
    logger.info(f"{spec.label}: dimension {basis.dim}")
    return basis


def span_of(matrices: Sequence[OperatorMatrix]) -> RowSpace:
    n = matrices[0].n if matrices else 1
    return RowSpace([m.to_vector() for m in matrices], 16 * n * n)


def same_span(a: Sequence[OperatorMatrix], b: Sequence[OperatorMatrix]) -> bool:
    return span_of(a).same_span(span_of(b))


def verify_closure(basis: GeneratorBasis) -> ClosureVerdict:
    """Check that every commutator satisfies the constraint and lies in the span."""
    if not basis.basis:
        return ClosureVerdict(True)
    space = span_of(basis.basis)
    for i, j in itertools.combinations(range(basis.dim), 2):
        bracket = matrix_commutator(basis.basis[i], basis.basis[j])
        if not basis.constraint(bracket):
            return ClosureVerdict(False, (i, j), "commutator violates the defining condition")
        if not space.contains(bracket.to_vector()):
            return ClosureVerdict(False, (i, j), "commutator leaves the generator span")
    return ClosureVerdict(True)


def _state_basis(n: int) -> List[Tuple[Quaternion, ...]]:
    states = []
    for r in range(n):
        for unit in UNITS:
            states.append(tuple(unit if k == r else Q_ZERO for k in range(n)))
    return states


_CONJUGATIONS = {
    MetricKind.DAGGER: qconj,
    MetricKind.G_TWISTED: qconj,
    MetricKind.TRANSPOSE: qtranspose,
    MetricKind.SYMPLECTIC_J: qtranspose,
    MetricKind.STAR: qstar,
}


def _check_metric(metric: MetricSpec, carrier: Carrier) -> None:
    if metric.kind is MetricKind.G_TWISTED and carrier is not Carrier.QR:
        raise UnsupportedMetric("The g-twisted metric is defined for Q_r only")
    if metric.projection is Projection.COMPLEX and carrier in (Carrier.R, Carrier.QR):
        raise UnsupportedMetric("Real-linear carriers need the real projection")


def _middle(metric: MetricSpec, n: int, carrier: Carrier) -> Optional[OperatorMatrix]:
    if metric.kind is MetricKind.G_TWISTED:
        return g_matrix(n, metric.twist)
    if metric.kind is MetricKind.SYMPLECTIC_J:
        return symplectic_J(n, carrier)
    return None


def _form(metric: MetricSpec, middle: Optional[OperatorMatrix], psi, phi) -> Quaternion:
    conj = _CONJUGATIONS[metric.kind]
    image = apply_matrix(middle, phi) if middle is not None else phi
    total = Q_ZERO
    for a, b in zip(psi, image):
        if not a.is_zero() and not b.is_zero():
            total = total + qmul(conj(a), b)
    return total


def metric_signature(metric: MetricSpec, carrier: Carrier = Carrier.QR, n: int = 1) -> Signature:
    """Inertia of the induced quadratic form on H^n.

    With real projection the form is (conj(psi) M psi)_r on 4n real
    coordinates. Complex projection is only defined for the dagger metric,
    where it is hermitian and its complex signature is half the real one.

    Raises:
        UnsupportedMetric: for the symplectic metric or undefined combinations
    """
    if metric.kind is MetricKind.SYMPLECTIC_J:
        raise UnsupportedMetric("The symplectic form is antisymmetric and has no signature")
    _check_metric(metric, carrier)
    if metric.projection is Projection.COMPLEX and metric.kind is not MetricKind.DAGGER:
        raise UnsupportedMetric("Complex projection is only sesquilinear for the dagger metric")
    middle = _middle(metric, n, carrier)
    states = _state_basis(n)
    values = [[_form(metric, middle, a, b).w for b in states] for a in states]
    symmetric = RealMatrix.from_rows([
        [(values[i][j] + values[j][i]) / 2 for j in range(len(states))] for i in range(len(states))
    ])
    positive, negative, radical = inertia(symmetric)
    if metric.projection is Projection.COMPLEX:
        return Signature(positive // 2, negative // 2, radical // 2)
    return Signature(positive, negative, radical)


def invariance_check_operators(
    operators: Sequence[OperatorMatrix], metric: MetricSpec, carrier: Carrier
) -> InvarianceVerdict:
    """Exhaustive first-order invariance test over pairs of basis states.

    For each generator A the variation proj(B(A psi, phi) + B(psi, A phi))
    must vanish, where B(psi, phi) = sum conj(psi_r) (M phi)_r.
    """
    if not operators:
        return InvarianceVerdict(True)
    _check_metric(metric, carrier)
    n = operators[0].n
    middle = _middle(metric, n, carrier)
    states = _state_basis(n)
    for index, generator in enumerate(operators):
        images = [apply_matrix(generator, s) for s in states]
        for i, psi in enumerate(states):
            for j, phi in enumerate(states):
                variation = _form(metric, middle, images[i], phi) + _form(metric, middle, psi, images[j])
                if metric.projection is Projection.REAL:
                    value = variation.w
                    failed = value != 0
                else:
                    value = (variation.w, variation.x)
                    failed = any(value)
                if failed:
                    return InvarianceVerdict(False, InvarianceViolation(index, psi, phi, value))
    return InvarianceVerdict(True)


def invariance_check(basis: GeneratorBasis, metric: Optional[MetricSpec] = None) -> InvarianceVerdict:
    """Invariance of a solved basis against its defining (or a given) metric."""
    metric = metric or default_metric(basis.spec)
    return invariance_check_operators(basis.basis, metric, basis.spec.carrier)


def _op(*terms: Tuple[Quaternion, int]) -> OperatorMatrix:
    total = BarredQuaternion.zero()
    for q, m in terms:
        total = total + BarredQuaternion.term(q, m)
    return OperatorMatrix.scalar(total)


def listed_generators(family: Family, carrier: Carrier) -> List[OperatorMatrix]:
    """One-dimensional generator sets as tabulated for each family/carrier.

    Raises:
        UnsupportedCarrier: if no one-dimensional set is tabulated
    """
    e = UNITS
    imaginary = [_op((e[k], 0)) for k in (1, 2, 3)]
    table = {
        (Family.U, Carrier.Q): imaginary,
        (Family.U, Carrier.QC): imaginary + [_op((Q_ONE, 1))],
        (Family.U, Carrier.QR): imaginary + [_op((Q_ONE, m)) for m in (1, 2, 3)],
        (Family.SU, Carrier.QC): imaginary,
        (Family.O, Carrier.Q): [_op((E2, 0))],
        (Family.O, Carrier.QC): [_op((E2, 0)), _op((E2, 1))],
        (Family.O, Carrier.QR): [
            _op((E2, 0)), _op((e[1], 2)), _op((e[3], 2)),
            _op((Q_ONE, 2)), _op((E2, 1)), _op((E2, 3)),
        ],
        (Family.O_TILDE, Carrier.QR): [_op((e[k], 0), (-Q_ONE, k)) for k in (1, 2, 3)] + [
            _op((e[i], j), (-e[j], i)) for i, j in ((1, 2), (1, 3), (2, 3))
        ],
        (Family.SP, Carrier.QC): imaginary + [_op((e[k], 1)) for k in (1, 2, 3)],
        (Family.SP, Carrier.QR): imaginary + [_op((Q_ONE, 2))] + [
            _op((e[k], m)) for k in (1, 2, 3) for m in (1, 3)
        ],
    }
    key = (family, carrier)
    if key not in table:
        raise UnsupportedCarrier(f"No tabulated one-dimensional generators for {family.value} over {carrier.value}")
    return table[key]


@dataclass
class DimensionRow:
    """One row of the dimensionality table."""

    family: Family
    carrier: Carrier
    label: str
    partner: str
    formula: List[int]
    solved: List[Optional[int]] = field(default_factory=list)
    partner_solved: List[Optional[int]] = field(default_factory=list)
    alternatives: List[Dict[str, int]] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return all(s is None or s == f for s, f in zip(self.solved, self.formula))


_PARTNER_LABELS = {
    (Family.U, Carrier.Q): "USp(2n,c)",
    (Family.U, Carrier.QC): "U(2n,c)",
    (Family.U, Carrier.QR): "O(4n,r)",
    (Family.SU, Carrier.Q): "= U(n,q)",
    (Family.SU, Carrier.QC): "SU(2n,c)",
    (Family.SU, Carrier.QR): "= U(n,Q_r)",
    (Family.O, Carrier.Q): "SO*(2n,c)",
    (Family.O, Carrier.QC): "O(2n,c)",
    (Family.O, Carrier.QR): "O(2n+,2n-,r)",
    (Family.O_TILDE, Carrier.QR): "O(3n+,n-,r)",
    (Family.SP, Carrier.Q): "USp(2n,c)",
    (Family.SP, Carrier.QC): "Sp(2n,c)",
    (Family.SP, Carrier.QR): "Sp(4n,r)",
}

_ROW_LABELS = {Carrier.Q: "q", Carrier.QC: "Q_c", Carrier.QR: "Q_r"}


def dimension_table(n_max: int, solve_up_to: int = 0, solve_partners: bool = False) -> List[DimensionRow]:
    """Rows of the dimensionality table for n = 1..n_max.

    Args:
        n_max: largest dimension shown
        solve_up_to: also solve kernels exactly for n <= this value
        solve_partners: also solve the partner group where it is solvable

    Returns:
        list: one ``DimensionRow`` per family/carrier in printed order
    """
    rows = []
    for family, carrier in DIMENSION_TABLE_ROWS:
        row = DimensionRow(
            family=family,
            carrier=carrier,
            label=f"{family.value}(n,{_ROW_LABELS[carrier]})",
            partner=_PARTNER_LABELS[(family, carrier)],
            formula=[dimension_formula(GroupSpec(family, carrier, n)) for n in range(1, n_max + 1)],
        )
        for n in range(1, n_max + 1):
            spec = GroupSpec(family, carrier, n)
            if n > solve_up_to:
                row.solved.append(None)
                row.partner_solved.append(None)
                row.alternatives.append({})
                continue
            solved = solve_generators(spec)
            row.solved.append(solved.dim)
            row.alternatives.append(dict(solved.alternatives))
            partner_info = partner(spec)
            if solve_partners and partner_info is not None and partner_info.spec is not None:
                row.partner_solved.append(solve_generators(partner_info.spec).dim)
            else:
                row.partner_solved.append(None)
        rows.append(row)
    return rows


def naive_transpose_counterexample() -> Tuple[OperatorMatrix, OperatorMatrix]:
    """M = diag(e1, e2), N = diag(e2, e1): naive (MN)^t differs from N^t M^t."""
    m = OperatorMatrix.diagonal([BarredQuaternion.left(E1), BarredQuaternion.left(E2)])
    n = OperatorMatrix.diagonal([BarredQuaternion.left(E2), BarredQuaternion.left(E1)])
    return m, n


def transpose_law_holds(m: OperatorMatrix, n: OperatorMatrix, naive: bool = False) -> bool:
    """Check (MN)^t = N^t M^t with the proper or the naive transpose."""
    flip = naive_transpose if naive else matrix_transpose
    return flip(matrix_compose(m, n)) == matrix_compose(flip(n), flip(m))


def star_exclusion_witness() -> Tuple[Quaternion, Quaternion]:
    """q, p with (qp)* != p* q*: star conjugation preserves order instead."""
    return E1, E2


@dataclass
class GeneratorReport:
    """Solved basis with its closure verdict and metric signature."""

    basis: GeneratorBasis
    closure: ClosureVerdict
    signature: Optional[Signature]
    formula: int


def report_metric(spec: GroupSpec) -> Optional[MetricSpec]:
    """Metric whose signature is reported for a spec, if any.

    The symplectic form has no signature, and the r/c carriers act on a
    smaller space than H^n, so neither is reported.
    """
    if spec.family is Family.SP or spec.carrier in (Carrier.R, Carrier.C):
        return None
    metric = default_metric(spec)
    if metric.projection is Projection.COMPLEX and metric.kind is not MetricKind.DAGGER:
        metric = MetricSpec(metric.kind, Projection.REAL)
    return metric


def generator_report(spec: GroupSpec, check_closure: bool = True) -> GeneratorReport:
    basis = solve_generators(spec)
    closure = verify_closure(basis) if check_closure else ClosureVerdict(True, reason="not checked")
    metric = report_metric(spec)
    signature = metric_signature(metric, spec.carrier, spec.n) if metric else None
    return GeneratorReport(basis, closure, signature, dimension_formula(spec))
