"""Tests for left/right-barred octonionic operators."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypalg.core.errors import InvalidSelector, ParseError, ShapeMismatch
from hypalg.services.algebra.octonion import O_ONE, O_ZERO, OCTONION_UNITS, Octonion, omul
from hypalg.services.algebra.quaternion import Quaternion
from hypalg.services.operators.barred_octonion import (
    LeftBarredOctonion,
    RightBarredTerm,
    antihermiticity_test,
    apply_left,
    apply_operator,
    apply_right,
    composite_unit,
    correction_term,
    hermiticity_test,
    operator_family,
    parse_operator_symbol,
    reduce_right,
    state_compose,
    state_decompose,
)

e = OCTONION_UNITS
small = st.integers(min_value=-4, max_value=4)
octonions = st.lists(small, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))


def test_left_and_right_groupings_differ():
    """e2)e1 and e2(e1 disagree on e4 because the product is not associative."""
    left = LeftBarredOctonion.term(e[2], 1)
    right = RightBarredTerm(e[2], 1)
    assert apply_left(left, e[4]) == omul(omul(e[2], e[4]), e[1])
    assert apply_right(right, e[4]) == omul(e[2], omul(e[4], e[1]))
    assert apply_left(left, e[4]) == -apply_right(right, e[4])


@pytest.mark.parametrize("m, n", [(2, 1), (3, 1), (4, 6), (7, 5), (5, 3)])
def test_right_terms_reduce_to_left_barred(m, n):
    term = RightBarredTerm(e[m], n)
    reduced = reduce_right(term)
    for state in e:
        assert apply_left(reduced, state) == apply_right(term, state)


@settings(max_examples=25)
@given(octonions)
def test_reduced_form_acts_linearly(psi):
    term = RightBarredTerm(e[3], 6)
    assert apply_operator(reduce_right(term), psi) == apply_right(term, psi)


def test_operator_family_has_106_symbols():
    family = operator_family()
    assert len(family) == 106
    names = [name for name, _ in family]
    assert len(set(names)) == 106
    assert names[:2] == ["1", "e1"]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1", LeftBarredOctonion.identity()),
        ("e3", LeftBarredOctonion.left(e[3])),
        ("1|e6", LeftBarredOctonion.term(O_ONE, 6)),
        ("e2|e2", LeftBarredOctonion.term(e[2], 2)),
        ("e3)e1", LeftBarredOctonion.term(e[3], 1)),
        ("e3(e1", RightBarredTerm(e[3], 1)),
    ],
)
def test_parse_operator_symbol(text, expected):
    assert parse_operator_symbol(text) == expected


def test_parse_composite_symbols():
    assert parse_operator_symbol('"e2"') == composite_unit("e2")
    assert parse_operator_symbol("h4") == composite_unit("h4")


@pytest.mark.parametrize("text", ["e2|e3", "e8", "e1)e0", '"e3"', "x"])
def test_parse_operator_symbol_rejects(text):
    with pytest.raises(ParseError):
        parse_operator_symbol(text)


@pytest.mark.parametrize("name", ["e1", "1|e1", '"e2"', '"e4"', '"e6"'])
def test_antihermitian_operators(name):
    assert antihermiticity_test(parse_operator_symbol(name)).holds


@pytest.mark.parametrize("m", range(2, 8))
def test_plain_units_are_not_antihermitian(m):
    verdict = antihermiticity_test(LeftBarredOctonion.left(e[m]))
    assert not verdict.holds
    assert verdict.witness is not None
    assert verdict.witness.lhs != verdict.witness.rhs


def test_antihermiticity_verdict_is_exhaustive():
    operator = composite_unit("e2") + LeftBarredOctonion.left(e[3])
    first, second = antihermiticity_test(operator), antihermiticity_test(operator)
    assert not first.holds
    assert first.witness == second.witness
    with pytest.raises(TypeError):
        antihermiticity_test(operator, trials=10)


@pytest.mark.parametrize("name", ["h2", "h4", "h6"])
def test_hermitian_partners(name):
    assert hermiticity_test(composite_unit(name)).holds


@given(small, small, small, small)
def test_correction_term_vanishes_on_quaternions(w, x, y, z):
    q = Octonion.from_quaternion(Quaternion(w, x, y, z))
    assert apply_left(correction_term(3), q) == O_ZERO


def test_correction_term_acts_outside_quaternions():
    assert not apply_left(correction_term(3), e[4]).is_zero()


@given(octonions)
def test_state_decomposition_inverts(o):
    assert state_compose(state_decompose(o)) == o


def test_state_components_of_units():
    state = state_decompose(e[2])
    assert state.c2.re == 1 and state.c1.is_zero()
    assert state_decompose(e[6]).c4.re == 1


def test_invalid_construction():
    with pytest.raises(ShapeMismatch):
        LeftBarredOctonion(om=(O_ZERO,) * 6)
    with pytest.raises(InvalidSelector):
        RightBarredTerm(e[1], 0)
    with pytest.raises(InvalidSelector):
        composite_unit("e8")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
