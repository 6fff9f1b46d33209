"""Tests for group specs, generator solving, closure and metric signatures."""

from fractions import Fraction

import pytest

from hypalg.core.errors import InvalidSelector, UnsupportedCarrier, UnsupportedMetric
from hypalg.services.algebra.quaternion import E1, E2, qmul, qstar
from hypalg.services.groups.group_lab import (
    GeneratorBasis,
    TraceCondition,
    dimension_table,
    generator_report,
    invariance_check,
    invariance_check_operators,
    listed_generators,
    metric_signature,
    naive_transpose_counterexample,
    same_span,
    solve_generators,
    star_exclusion_witness,
    symplectic_J,
    transpose_law_holds,
    verify_closure,
)
from hypalg.services.groups.operator_matrix import OperatorMatrix, matrix_dagger
from hypalg.services.groups.specs import (
    DIMENSION_TABLE_ROWS,
    Carrier,
    Family,
    GroupSpec,
    MetricKind,
    MetricSpec,
    Projection,
    dimension_formula,
    parse_carrier,
    parse_family,
    partner,
)
from hypalg.services.operators.barred_quaternion import BarredQuaternion

ONE_DIMENSIONAL = [
    (Family.U, Carrier.Q, 3),
    (Family.U, Carrier.QC, 4),
    (Family.U, Carrier.QR, 6),
    (Family.SU, Carrier.QC, 3),
    (Family.O, Carrier.Q, 1),
    (Family.O, Carrier.QC, 2),
    (Family.O, Carrier.QR, 6),
    (Family.O_TILDE, Carrier.QR, 6),
    (Family.SP, Carrier.QC, 6),
    (Family.SP, Carrier.QR, 10),
]


@pytest.mark.parametrize("family, carrier, dim", ONE_DIMENSIONAL)
def test_one_dimensional_bases_match_tabulated_sets(family, carrier, dim):
    solved = solve_generators(GroupSpec(family, carrier, 1))
    listed = listed_generators(family, carrier)
    assert solved.dim == dim == len(listed)
    assert same_span(solved.basis, listed)


@pytest.mark.parametrize("family, carrier", DIMENSION_TABLE_ROWS)
def test_solved_dimension_matches_formula_for_n2(family, carrier):
    spec = GroupSpec(family, carrier, 2)
    assert solve_generators(spec).dim == dimension_formula(spec)


@pytest.mark.slow
@pytest.mark.parametrize("family, carrier", DIMENSION_TABLE_ROWS)
def test_solved_dimension_matches_formula_for_n3(family, carrier):
    spec = GroupSpec(family, carrier, 3)
    assert solve_generators(spec).dim == dimension_formula(spec)


@pytest.mark.parametrize(
    "family, carrier, n",
    [(Family.U, Carrier.C, 2), (Family.SU, Carrier.C, 2), (Family.O, Carrier.R, 3), (Family.SP, Carrier.R, 2)],
)
def test_partner_groups_solve_to_their_formula(family, carrier, n):
    spec = GroupSpec(family, carrier, n)
    assert solve_generators(spec).dim == dimension_formula(spec)


def test_basis_is_deterministic():
    spec = GroupSpec(Family.O, Carrier.QR, 1)
    first = [m.to_vector() for m in solve_generators(spec).basis]
    second = [m.to_vector() for m in solve_generators(spec).basis]
    assert first == second


def test_su_over_qr_coincides_with_u():
    solved = solve_generators(GroupSpec(Family.SU, Carrier.QR, 1))
    assert solved.notice is not None
    assert solved.dim == solve_generators(GroupSpec(Family.U, Carrier.QR, 1)).dim


def test_su_over_qc_records_both_trace_readings():
    solved = solve_generators(GroupSpec(Family.SU, Carrier.QC, 1))
    assert solved.alternatives == {"complex_trace": 3, "real_trace": 4}
    real = solve_generators(GroupSpec(Family.SU, Carrier.QC, 1), trace=TraceCondition.REAL)
    assert real.dim == 4


def test_generators_satisfy_their_constraint():
    solved = solve_generators(GroupSpec(Family.U, Carrier.QC, 2))
    for generator in solved.basis:
        assert solved.constraint(generator)
        assert generator + matrix_dagger(generator) == OperatorMatrix.zero(2)


@pytest.mark.parametrize("family, carrier, _", ONE_DIMENSIONAL)
def test_one_dimensional_bases_close(family, carrier, _):
    verdict = verify_closure(solve_generators(GroupSpec(family, carrier, 1)))
    assert verdict.closed, verdict.reason


def test_closure_reports_a_failing_pair():
    spec = GroupSpec(Family.U, Carrier.QR, 1)
    solved = solve_generators(spec)
    # drop one generator so a commutator leaves the span
    truncated = GeneratorBasis(spec, solved.basis[:2], solved.constraint)
    verdict = verify_closure(truncated)
    assert not verdict.closed
    assert verdict.pair == (0, 1)


@pytest.mark.parametrize("family, carrier", [(f, c) for f, c, _ in ONE_DIMENSIONAL])
def test_bases_preserve_their_metric(family, carrier):
    assert invariance_check(solve_generators(GroupSpec(family, carrier, 1))).invariant


@pytest.mark.parametrize("family, carrier", DIMENSION_TABLE_ROWS)
def test_two_dimensional_bases_close_and_preserve_their_metric(family, carrier):
    solved = solve_generators(GroupSpec(family, carrier, 2))
    verdict = verify_closure(solved)
    assert verdict.closed, verdict.reason
    assert invariance_check(solved).invariant


@pytest.mark.parametrize("carrier", [Carrier.Q, Carrier.QC, Carrier.QR])
def test_symplectic_bases_preserve_J(carrier):
    for n in (1, 2):
        solved = solve_generators(GroupSpec(Family.SP, carrier, n))
        assert invariance_check(solved).invariant


def test_e1_violates_the_transpose_metric():
    e1 = [OperatorMatrix.scalar(BarredQuaternion.left(E1))]
    verdict = invariance_check_operators(e1, MetricSpec(MetricKind.TRANSPOSE), Carrier.QR)
    assert not verdict.invariant
    assert verdict.violation.generator == 0


@pytest.mark.parametrize(
    "metric, carrier, expected",
    [
        (MetricSpec(MetricKind.DAGGER), Carrier.QR, (4, 0, 0)),
        (MetricSpec(MetricKind.TRANSPOSE), Carrier.QR, (2, 2, 0)),
        (MetricSpec(MetricKind.G_TWISTED), Carrier.QR, (1, 3, 0)),
        (MetricSpec(MetricKind.STAR), Carrier.QR, (3, 1, 0)),
        (MetricSpec(MetricKind.DAGGER, Projection.COMPLEX), Carrier.QC, (2, 0, 0)),
    ],
)
def test_metric_signatures(metric, carrier, expected):
    signature = metric_signature(metric, carrier)
    assert (signature.positive, signature.negative, signature.radical) == expected


def test_degenerate_twist_reports_a_radical():
    twist = (BarredQuaternion.identity() - BarredQuaternion.term(E1, 1)) * Fraction(1, 2)
    signature = metric_signature(MetricSpec(MetricKind.G_TWISTED, twist=twist), Carrier.QR)
    assert (signature.positive, signature.negative, signature.radical) == (2, 0, 2)


def test_signature_scales_with_n():
    assert metric_signature(MetricSpec(MetricKind.G_TWISTED), Carrier.QR, n=2).as_pair() == (2, 6)


@pytest.mark.parametrize(
    "metric, carrier",
    [
        (MetricSpec(MetricKind.SYMPLECTIC_J), Carrier.QR),
        (MetricSpec(MetricKind.G_TWISTED), Carrier.Q),
        (MetricSpec(MetricKind.DAGGER, Projection.COMPLEX), Carrier.QR),
        (MetricSpec(MetricKind.TRANSPOSE, Projection.COMPLEX), Carrier.QC),
    ],
)
def test_undefined_signatures(metric, carrier):
    with pytest.raises(UnsupportedMetric):
        metric_signature(metric, carrier)


def test_symplectic_metric_shapes():
    assert symplectic_J(1)[0, 0] == BarredQuaternion.left(E2)
    j3 = symplectic_J(3)
    assert j3[1, 1] == BarredQuaternion.left(E2)
    assert j3[0, 2] == BarredQuaternion.identity()
    assert j3[2, 0] == -BarredQuaternion.identity()
    with pytest.raises(UnsupportedCarrier):
        symplectic_J(3, Carrier.R)


def test_transpose_law_and_naive_counterexample():
    m, n = naive_transpose_counterexample()
    assert transpose_law_holds(m, n)
    assert not transpose_law_holds(m, n, naive=True)


def test_star_is_excluded_as_a_transpose():
    q, p = star_exclusion_witness()
    assert qstar(qmul(q, p)) != qmul(qstar(p), qstar(q))
    assert qstar(qmul(q, p)) == qmul(qstar(q), qstar(p))


def test_dimension_table_rows():
    rows = dimension_table(4)
    assert len(rows) == len(DIMENSION_TABLE_ROWS)
    by_label = {row.label: row for row in rows}
    assert by_label["U(n,Q_c)"].formula == [4, 16, 36, 64]
    assert by_label["Sp(n,Q_r)"].formula == [10, 36, 78, 136]
    assert by_label["SU(n,Q_c)"].partner == "SU(2n,c)"
    assert all(s is None for row in rows for s in row.solved)


def test_dimension_table_solved_rows_match():
    rows = dimension_table(2, solve_up_to=1, solve_partners=True)
    assert all(row.matches for row in rows)
    su_qc = next(row for row in rows if row.label == "SU(n,Q_c)")
    assert su_qc.solved == [3, None]
    assert su_qc.partner_solved == [3, None]
    assert su_qc.alternatives[0] == {"complex_trace": 3, "real_trace": 4}


def test_generator_report():
    report = generator_report(GroupSpec(Family.O_TILDE, Carrier.QR, 1))
    assert report.basis.dim == report.formula == 6
    assert report.closure.closed
    assert report.signature.as_pair() == (1, 3)
    assert generator_report(GroupSpec(Family.SP, Carrier.QC, 1)).signature is None


def test_partner_lookup():
    assert partner(GroupSpec(Family.U, Carrier.QR, 1)).dim == 6
    assert partner(GroupSpec(Family.O_TILDE, Carrier.QR, 1)).name == "O(3+,1-,r)"


def test_spec_validation():
    with pytest.raises(UnsupportedCarrier):
        GroupSpec(Family.O_TILDE, Carrier.QC, 1)
    with pytest.raises(UnsupportedCarrier):
        GroupSpec(Family.SP, Carrier.C, 3)
    with pytest.raises(InvalidSelector):
        GroupSpec(Family.U, Carrier.Q, 0)
    with pytest.raises(InvalidSelector):
        parse_family("SL")
    with pytest.raises(InvalidSelector):
        parse_carrier("h")


def test_aliases():
    assert parse_family("o~") is Family.O_TILDE
    assert parse_carrier("Qr") is Carrier.QR
    assert GroupSpec(Family.SP, Carrier.QC, 2).label == "Sp(2,Q_c)"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
