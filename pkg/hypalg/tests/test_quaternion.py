"""Tests for exact quaternion arithmetic and the conjugations."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypalg.core.errors import DivisionByZero, InvalidSelector
from hypalg.services.algebra.quaternion import (
    E1,
    E2,
    E3,
    Q_ONE,
    Q_ZERO,
    Quaternion,
    conjugation_closed_form,
    hamilton_float,
    qconj,
    qinv,
    qmul,
    qnorm2,
    qstar,
    qtranspose,
    six_conjugations,
)

small = st.integers(min_value=-6, max_value=6)
quaternions = st.builds(Quaternion, small, small, small, small)


def test_unit_products():
    """e1 e2 = e3 and cyclic, with the opposite order flipping the sign."""
    assert qmul(E1, E2) == E3
    assert qmul(E2, E3) == E1
    assert qmul(E3, E1) == E2
    assert qmul(E2, E1) == -E3
    for unit in (E1, E2, E3):
        assert qmul(unit, unit) == -Q_ONE


def test_inverse():
    q = Quaternion(1, 2, -1, 3)
    assert qnorm2(q) == 15
    assert qmul(qinv(q), q) == Q_ONE
    assert qmul(q, qinv(q)) == Q_ONE


def test_zero_has_no_inverse():
    with pytest.raises(DivisionByZero):
        qinv(Q_ZERO)
    # also catchable as the builtin
    with pytest.raises(ZeroDivisionError):
        qinv(Q_ZERO)


def test_rational_coefficients_stay_exact():
    q = Quaternion(Fraction(1, 3), 0, Fraction(-1, 2), 0)
    assert (q * 6).coefficients == (2, 0, -3, 0)
    assert (q / 2).w == Fraction(1, 6)


@given(quaternions, quaternions)
def test_dagger_reverses_products(q, p):
    assert qconj(qmul(q, p)) == qmul(qconj(p), qconj(q))


@given(quaternions, quaternions)
def test_transpose_reverses_products(q, p):
    assert qtranspose(qmul(q, p)) == qmul(qtranspose(p), qtranspose(q))


@given(quaternions, quaternions)
def test_star_preserves_order(q, p):
    assert qstar(qmul(q, p)) == qmul(qstar(q), qstar(p))


@given(quaternions, quaternions)
def test_norm_is_multiplicative(q, p):
    assert qnorm2(qmul(q, p)) == qnorm2(q) * qnorm2(p)


@pytest.mark.parametrize("which", range(1, 7))
@given(q=quaternions)
def test_conjugation_patterns_match_closed_forms(which, q):
    assert six_conjugations(q, which) == conjugation_closed_form(q, which)


def test_conjugation_sign_patterns():
    q = Quaternion(1, 2, 3, 4)
    assert six_conjugations(q, 1) == Quaternion(1, -2, 3, 4)
    assert six_conjugations(q, 6) == Quaternion(1, -2, -3, 4)


@pytest.mark.parametrize("which", [0, 7, -1])
def test_conjugation_selector_out_of_range(which):
    with pytest.raises(InvalidSelector):
        six_conjugations(Q_ONE, which)


def test_basis_index_out_of_range():
    with pytest.raises(InvalidSelector):
        Quaternion.basis(4)


@given(quaternions, quaternions)
def test_float_product_matches_exact(q, p):
    exact = qmul(q, p).coefficients
    approx = hamilton_float([float(c) for c in q.coefficients], [float(c) for c in p.coefficients])
    assert approx == [float(c) for c in exact]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
