"""Left and right multiplication matrices (regular representation).

The matrices act on coefficient columns: column j of ``L(a)`` holds the
coefficients of a e_j, column j of ``R(a)`` those of e_j a. The imaginary
unit generators are taken from the printed tables in
``hypalg.services.bridge.generator_rules``; general elements are real
linear combinations of them.
"""

import logging
from functools import lru_cache
from typing import Sequence, Tuple

from hypalg.services.algebra.octonion import OCTONION_UNITS, Octonion, omul
from hypalg.services.algebra.quaternion import UNITS, Quaternion, qmul
from hypalg.services.bridge.generator_rules import (
    OCTONION_BLOCK_RULES,
    QUATERNION_GENERATOR_MATRICES,
)
from hypalg.services.linalg.exact import RealMatrix

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def quaternion_unit_left(m: int) -> RealMatrix:
    """4x4 matrix of left multiplication by e_m (identity for m = 0)."""
    if m == 0:
        return RealMatrix.identity(4)
    return RealMatrix.from_rows(QUATERNION_GENERATOR_MATRICES[f"e{m}"])


@lru_cache(maxsize=None)
def quaternion_unit_right(m: int) -> RealMatrix:
    """4x4 matrix of right multiplication by e_m, i.e. the operator 1|e_m."""
    if m == 0:
        return RealMatrix.identity(4)
    return RealMatrix.from_rows(QUATERNION_GENERATOR_MATRICES[f"1|e{m}"])


@lru_cache(maxsize=None)
def octonion_unit_left(m: int) -> RealMatrix:
    """8x8 matrix L_m of left multiplication by e_m."""
    if m == 0:
        return RealMatrix.identity(8)
    return RealMatrix.from_rows(OCTONION_BLOCK_RULES[f"e{m}"].expand())


@lru_cache(maxsize=None)
def octonion_unit_right(m: int) -> RealMatrix:
    """8x8 matrix R_m of right multiplication by e_m."""
    if m == 0:
        return RealMatrix.identity(8)
    return RealMatrix.from_rows(OCTONION_BLOCK_RULES[f"1|e{m}"].expand())


def _combine(coefficients: Sequence, unit_matrix, size: int) -> RealMatrix:
    total = RealMatrix.zeros(size, size)
    for m, value in enumerate(coefficients):
        if value:
            total = total + unit_matrix(m).scale(value)
    return total


def quaternion_left(q: Quaternion) -> RealMatrix:
    return _combine(q.coefficients, quaternion_unit_left, 4)


def quaternion_right(q: Quaternion) -> RealMatrix:
    return _combine(q.coefficients, quaternion_unit_right, 4)


def octonion_left(o: Octonion) -> RealMatrix:
    return _combine(o.c, octonion_unit_left, 8)


def octonion_right(o: Octonion) -> RealMatrix:
    return _combine(o.c, octonion_unit_right, 8)


def table_left_quaternion(m: int) -> RealMatrix:
    """Left multiplication matrix computed from the product table."""
    return RealMatrix.from_columns([qmul(UNITS[m], u).coefficients for u in UNITS])


def table_right_quaternion(m: int) -> RealMatrix:
    return RealMatrix.from_columns([qmul(u, UNITS[m]).coefficients for u in UNITS])


def table_left_octonion(m: int) -> RealMatrix:
    return RealMatrix.from_columns([omul(OCTONION_UNITS[m], u).c for u in OCTONION_UNITS])


def table_right_octonion(m: int) -> RealMatrix:
    return RealMatrix.from_columns([omul(u, OCTONION_UNITS[m]).c for u in OCTONION_UNITS])


def printed_tables_agree() -> Tuple[bool, list]:
    """Compare every printed generator matrix with the product table.

    Returns:
        tuple: (all agree, list of disagreeing rule names)
    """
    mismatches = []
    for m in range(1, 4):
        if quaternion_unit_left(m) != table_left_quaternion(m):
            mismatches.append(f"e{m}")
        if quaternion_unit_right(m) != table_right_quaternion(m):
            mismatches.append(f"1|e{m}")
    for m in range(1, 8):
        if octonion_unit_left(m) != table_left_octonion(m):
            mismatches.append(f"octonion e{m}")
        if octonion_unit_right(m) != table_right_octonion(m):
            mismatches.append(f"octonion 1|e{m}")
    if mismatches:
        logger.warning(f"Printed tables disagree with the product table: {mismatches}")
    return not mismatches, mismatches
