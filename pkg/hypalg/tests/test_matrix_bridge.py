"""Tests for the operator-to-matrix translations."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypalg.core.errors import NotComplexLinear
from hypalg.services.algebra.complex_value import C_I, C_ONE, C_ZERO
from hypalg.services.algebra.octonion import OCTONION_UNITS, Octonion
from hypalg.services.algebra.quaternion import E1, E2, E3, UNITS, Quaternion, qnorm2
from hypalg.services.bridge.generator_rules import (
    OCTONION_BLOCK_RULES,
    QUATERNION_GENERATOR_MATRICES,
    BlockSpec,
    parse_action_entry,
)
from hypalg.services.bridge.matrix_bridge import (
    ComplexMatrix,
    complex_linear_subalgebra,
    complex_to_real,
    det,
    is_product_closed,
    left_barred_rank,
    oc_to_c4,
    octonion_operator_to_r8,
    or_to_r8,
    q_to_c2,
    qc_completion_rank,
    qc_to_c2,
    qr_to_r4,
    quaternion_images_rank,
)
from hypalg.services.bridge.regular import printed_tables_agree
from hypalg.services.linalg.exact import matmul, matvec
from hypalg.services.operators.barred_octonion import (
    LeftBarredOctonion,
    RightBarredTerm,
    apply_operator,
    composite_unit,
)
from hypalg.services.operators.barred_quaternion import (
    BarredQuaternion,
    apply,
    compose,
    random_operator,
)

seeds = st.integers(min_value=0, max_value=2**32)
small = st.integers(min_value=-4, max_value=4)
quaternions = st.builds(Quaternion, small, small, small, small)
octonions = st.lists(small, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))


def test_printed_tables_agree_with_product_table():
    agree, mismatches = printed_tables_agree()
    assert agree, mismatches


@pytest.mark.parametrize("name", sorted(QUATERNION_GENERATOR_MATRICES))
def test_qr_to_r4_reproduces_printed_matrices(name):
    m = int(name[-1])
    operator = BarredQuaternion.right_unit(m) if name.startswith("1|") else BarredQuaternion.left(UNITS[m])
    assert qr_to_r4(operator).data == QUATERNION_GENERATOR_MATRICES[name]


@given(seeds, quaternions)
def test_qr_to_r4_matches_action(seed, q):
    operator = random_operator(random.Random(seed))
    assert matvec(qr_to_r4(operator), q.coefficients) == apply(operator, q).coefficients


@given(seeds)
def test_qr_to_r4_is_multiplicative(seed):
    rng = random.Random(seed)
    a, b = random_operator(rng), random_operator(rng)
    assert qr_to_r4(compose(a, b)) == matmul(qr_to_r4(a), qr_to_r4(b))


@given(seeds)
def test_qc_to_c2_is_multiplicative(seed):
    rng = random.Random(seed)
    a = random_operator(rng, complex_linear=True)
    b = random_operator(rng, complex_linear=True)
    assert qc_to_c2(compose(a, b)) == qc_to_c2(a) @ qc_to_c2(b)


def test_q_to_c2_units():
    assert q_to_c2(E1) == ComplexMatrix.from_rows([[C_I, C_ZERO], [C_ZERO, -C_I]])
    assert q_to_c2(E2) == ComplexMatrix.from_rows([[C_ZERO, -C_ONE], [C_ONE, C_ZERO]])
    assert q_to_c2(E3) == ComplexMatrix.from_rows([[C_ZERO, -C_I], [-C_I, C_ZERO]])
    assert qc_to_c2(BarredQuaternion.right_unit(1)) == ComplexMatrix.identity(2).scale(C_I)


def test_qc_to_c2_rejects_real_linear():
    with pytest.raises(NotComplexLinear):
        qc_to_c2(BarredQuaternion.right_unit(2))


def test_complex_to_real_blocks():
    real = complex_to_real(ComplexMatrix.from_rows([[C_I]]))
    assert real.data == ((0, -1), (1, 0))


@given(quaternions)
def test_determinant_of_left_multiplication(q):
    assert det(BarredQuaternion.left(q)) == qnorm2(q) ** 2


def test_determinants_of_units():
    assert det(BarredQuaternion.right_unit(1)) == 1
    assert det(BarredQuaternion.zero()) == 0
    assert det(LeftBarredOctonion.left(OCTONION_UNITS[5])) == 1


@pytest.mark.parametrize("name", sorted(OCTONION_BLOCK_RULES))
def test_or_to_r8_reproduces_block_rules(name):
    m = int(name[-1])
    if name.startswith("1|"):
        operator = LeftBarredOctonion.term(OCTONION_UNITS[0], m)
    else:
        operator = LeftBarredOctonion.left(OCTONION_UNITS[m])
    assert or_to_r8(operator).data == OCTONION_BLOCK_RULES[name].expand()


@settings(max_examples=30)
@given(octonions)
def test_octonion_matrices_match_action(psi):
    for operator in (
        LeftBarredOctonion.term(OCTONION_UNITS[2], 5),
        RightBarredTerm(OCTONION_UNITS[6], 3),
    ):
        assert matvec(octonion_operator_to_r8(operator), psi.c) == apply_operator(operator, psi).c


def test_left_barred_rank_is_64():
    assert left_barred_rank() == 64


def test_complex_linear_subalgebra():
    matrices = complex_linear_subalgebra()
    assert len(matrices) == 32
    assert is_product_closed(matrices)


def test_oc_to_c4_of_composite_e2():
    expected = ComplexMatrix.from_rows([
        [C_ZERO, -C_ONE, C_ZERO, C_ZERO],
        [C_ONE, C_ZERO, C_ZERO, C_ZERO],
        [C_ZERO] * 4,
        [C_ZERO] * 4,
    ])
    assert oc_to_c4(composite_unit("e2")) == expected


def _corner(row: int, column: int, upper: int, lower: int) -> ComplexMatrix:
    """4x4 matrix with ``upper`` at (row, column) and ``lower`` at (column, row)."""
    rows = [[C_ZERO] * 4 for _ in range(4)]
    rows[row][column] = C_ONE * upper
    rows[column][row] = C_ONE * lower
    return ComplexMatrix.from_rows(rows)


@pytest.mark.parametrize(
    "name, expected",
    [
        ('"e4"', _corner(0, 2, -1, 1)),
        ('"e6"', _corner(0, 3, -1, 1)),
        ("h2", _corner(0, 1, 1, 1)),
        ("h4", _corner(0, 2, 1, 1)),
        ("h6", _corner(0, 3, -1, -1)),
    ],
)
def test_oc_to_c4_of_composite_units(name, expected):
    assert oc_to_c4(composite_unit(name)) == expected


def test_oc_to_c4_of_e1():
    expected = ComplexMatrix.from_rows([
        [C_I, C_ZERO, C_ZERO, C_ZERO],
        [C_ZERO, -C_I, C_ZERO, C_ZERO],
        [C_ZERO, C_ZERO, -C_I, C_ZERO],
        [C_ZERO, C_ZERO, C_ZERO, -C_I],
    ])
    assert oc_to_c4(LeftBarredOctonion.left(OCTONION_UNITS[1])) == expected


def test_oc_to_c4_rejects_plain_e2():
    with pytest.raises(NotComplexLinear):
        oc_to_c4(LeftBarredOctonion.left(OCTONION_UNITS[2]))


def test_complex_images_ranks():
    assert quaternion_images_rank(UNITS) == 4
    assert qc_completion_rank() == 8


def test_block_spec_and_action_entry_grammar():
    spec = BlockSpec(1, ("1", "1", "1", "1"))
    assert spec.expand() == tuple(tuple(1 if i == j else 0 for j in range(8)) for i in range(8))
    entry = parse_action_entry("-e1c4*")
    assert (entry.sign, entry.times_e1, entry.component, entry.conjugate) == (-1, True, 3, True)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
