"""Signed basis-product tables for the quaternions and octonions.

A product table is built from the list of positively oriented triples
(a, b, c) meaning e_a e_b = e_c together with its cyclic shifts; swapping
the factors flips the sign and every imaginary unit squares to -1. Both
tables are generated here once at import and frozen.
"""

import logging
from typing import Sequence, Tuple

logger = logging.getLogger(__name__)

SignedIndex = Tuple[int, int]
ProductTable = Tuple[Tuple[SignedIndex, ...], ...]

QUATERNION_TRIPLES: Tuple[Tuple[int, int, int], ...] = ((1, 2, 3),)

OCTONION_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
)

OCTONION_QUADRUPLES: Tuple[Tuple[int, int, int, int], ...] = (
    (1, 2, 4, 7),
    (1, 2, 6, 5),
    (2, 3, 4, 5),
    (2, 3, 7, 6),
    (3, 1, 4, 6),
    (3, 1, 5, 7),
    (4, 5, 7, 6),
)


def build_product_table(
    dimension: int, triples: Sequence[Tuple[int, int, int]]
) -> ProductTable:
    """Generate the signed product table e_i e_j = sign * e_k.

    Args:
        dimension: number of basis elements including the unit 1 (index 0)
        triples: oriented triples (a, b, c) with e_a e_b = e_c

    Returns:
        ProductTable: ``table[i][j] == (sign, k)``

    Raises:
        ValueError: if the triples leave a product undefined or define one twice
    """
    table = [[None] * dimension for _ in range(dimension)]
    for i in range(dimension):
        table[0][i] = (1, i)
        table[i][0] = (1, i)
    for i in range(1, dimension):
        table[i][i] = (-1, 0)

    for a, b, c in triples:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            for i, j, entry in ((x, y, (1, z)), (y, x, (-1, z))):
                if table[i][j] is not None:
                    raise ValueError(f"Product e{i}e{j} defined twice")
                table[i][j] = entry

    for i in range(dimension):
        for j in range(dimension):
            if table[i][j] is None:
                raise ValueError(f"Product e{i}e{j} left undefined")

    logger.debug(f"Built {dimension}x{dimension} product table")
    return tuple(tuple(row) for row in table)


def multiply_coefficients(table: ProductTable, left: Sequence, right: Sequence) -> list:
    """Bilinear product of two coefficient vectors under a product table.

    Works for any numeric coefficient type (Fraction for the exact algebra,
    float for the Lorentz cross-checks).
    """
    dimension = len(table)
    result = [0] * dimension
    for i, a in enumerate(left):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(right):
            if not b:
                continue
            sign, k = row[j]
            result[k] += sign * a * b
    return result


QUATERNION_TABLE: ProductTable = build_product_table(4, QUATERNION_TRIPLES)
OCTONION_TABLE: ProductTable = build_product_table(8, OCTONION_TRIPLES)
