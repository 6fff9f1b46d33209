"""Tests for octonion arithmetic, associators and structure constants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypalg.core.errors import DivisionByZero, ShapeMismatch
from hypalg.services.algebra.octonion import (
    O_ONE,
    O_ZERO,
    OCTONION_UNITS,
    Octonion,
    associator,
    associator_constants,
    eps3,
    eps4,
    from_split,
    is_associative_triple,
    oinv,
    omul,
    omul_chain,
    onorm2,
    quaternionic_triples,
)
from hypalg.services.algebra.quaternion import E1, Q_ONE, Q_ZERO, Quaternion

small = st.integers(min_value=-4, max_value=4)
octonions = st.lists(small, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))

e = OCTONION_UNITS


@pytest.mark.parametrize("triple", quaternionic_triples())
def test_oriented_triples(triple):
    a, b, c = triple
    assert omul(e[a], e[b]) == e[c]
    assert omul(e[b], e[a]) == -e[c]
    assert eps3(a, b, c) == 1
    assert eps3(b, a, c) == -1


def test_units_square_to_minus_one():
    for m in range(1, 8):
        assert omul(e[m], e[m]) == -O_ONE


def test_grouping_of_a_quaternionic_triple():
    """e5, e6, e3 span a quaternionic subalgebra, so both groupings give 1."""
    factors = [e[5], e[6], e[3]]
    assert omul_chain(factors, group_left=True) == O_ONE
    assert omul_chain(factors, group_left=False) == O_ONE


def test_grouping_matters_outside_a_triple():
    factors = [e[1], e[2], e[4]]
    assert omul_chain(factors, group_left=True) == e[7]
    assert omul_chain(factors, group_left=False) == -e[7]
    assert associator(e[1], e[2], e[4]) == e[7] * 2


def test_associator_constants_follow_quadruples():
    constants = associator_constants()
    assert constants[(1, 2, 4)] == (1, 7)
    assert constants[(1, 2, 3)] == (0, None)
    for (m, n, p), (sign, s) in constants.items():
        if sign:
            assert eps4(m, n, p, s) == sign


def test_quaternionic_triples_are_associative():
    assert all(is_associative_triple(t) for t in quaternionic_triples())
    assert not is_associative_triple((1, 2, 4))


@settings(max_examples=50)
@given(octonions, octonions)
def test_alternativity(x, y):
    assert associator(x, x, y).is_zero()
    assert associator(x, y, y).is_zero()
    assert associator(x, y, x).is_zero()


@settings(max_examples=50)
@given(octonions, octonions)
def test_norm_is_multiplicative(x, y):
    assert onorm2(omul(x, y)) == onorm2(x) * onorm2(y)


@given(octonions)
def test_inverse(x):
    if x.is_zero():
        return
    assert omul(oinv(x), x) == O_ONE
    assert omul(x, oinv(x)) == O_ONE


def test_zero_has_no_inverse():
    with pytest.raises(DivisionByZero):
        oinv(O_ZERO)


def test_split_form():
    assert from_split(Q_ZERO, Q_ONE) == e[4]
    assert from_split(Q_ZERO, E1) == omul(e[4], e[1])
    assert from_split(Quaternion(1, 2, 3, 4), Q_ZERO) == Octonion.from_quaternion(Quaternion(1, 2, 3, 4))


def test_wrong_coefficient_count():
    with pytest.raises(ShapeMismatch):
        Octonion((1, 2, 3))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
