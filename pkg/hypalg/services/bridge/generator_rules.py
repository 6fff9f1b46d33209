"""Printed translation tables.

These are the only hand-entered matrices in hypalg:

* ``QUATERNION_GENERATOR_MATRICES``: the 4x4 real matrices of e1, e2, e3 and
  1|e1, 1|e2, 1|e3 acting on the coefficient column (w, x, y, z);
* ``OCTONION_BLOCK_RULES``: the 8x8 real matrices of e1..e7 and 1|e1..1|e7
  written as four 2x2 blocks placed by one of four patterns;
* ``STATE_ACTION_TABLE``: the action of e_m and 1|e_m on an octonionic
  state (c1, c2, c3, c4).

Everything else (composite rules, general operators) is computed from them,
and the test suite cross-checks all three against the multiplication table.
"""

import re
from dataclasses import dataclass
from typing import Dict, Tuple

from hypalg.core.errors import InvalidSelector

Block = Tuple[Tuple[int, int], Tuple[int, int]]

BLOCKS: Dict[str, Block] = {
    "1": ((1, 0), (0, 1)),
    "-1": ((-1, 0), (0, -1)),
    "s1": ((0, 1), (1, 0)),
    "-s1": ((0, -1), (-1, 0)),
    "s3": ((1, 0), (0, -1)),
    "-s3": ((-1, 0), (0, 1)),
    "is2": ((0, 1), (-1, 0)),
    "-is2": ((0, -1), (1, 0)),
}

# pattern -> 2x2-block coordinates of the blocks a, b, c, d
BLOCK_PATTERNS: Dict[int, Tuple[Tuple[int, int], ...]] = {
    1: ((0, 0), (1, 1), (2, 2), (3, 3)),
    2: ((0, 1), (1, 0), (2, 3), (3, 2)),
    3: ((0, 2), (1, 3), (2, 0), (3, 1)),
    4: ((0, 3), (1, 2), (2, 1), (3, 0)),
}


@dataclass(frozen=True)
class BlockSpec:
    """Four named 2x2 blocks {a, b, c, d} placed by pattern (1)..(4)."""

    pattern: int
    blocks: Tuple[str, str, str, str]

    def __post_init__(self):
        if self.pattern not in BLOCK_PATTERNS:
            raise InvalidSelector(f"Block pattern must be 1..4, got {self.pattern}")
        unknown = [b for b in self.blocks if b not in BLOCKS]
        if unknown or len(self.blocks) != 4:
            raise InvalidSelector(f"Bad block names: {self.blocks}")

    def expand(self) -> Tuple[Tuple[int, ...], ...]:
        """Return the 8x8 integer matrix described by this spec."""
        rows = [[0] * 8 for _ in range(8)]
        for name, (block_row, block_col) in zip(self.blocks, BLOCK_PATTERNS[self.pattern]):
            block = BLOCKS[name]
            for i in range(2):
                for j in range(2):
                    rows[2 * block_row + i][2 * block_col + j] = block[i][j]
        return tuple(tuple(r) for r in rows)


QUATERNION_GENERATOR_MATRICES: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "e1": ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0)),
    "e2": ((0, 0, -1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, -1, 0, 0)),
    "e3": ((0, 0, 0, -1), (0, 0, -1, 0), (0, 1, 0, 0), (1, 0, 0, 0)),
    "1|e1": ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)),
    "1|e2": ((0, 0, -1, 0), (0, 0, 0, -1), (1, 0, 0, 0), (0, 1, 0, 0)),
    "1|e3": ((0, 0, 0, -1), (0, 0, 1, 0), (0, -1, 0, 0), (1, 0, 0, 0)),
}

OCTONION_BLOCK_RULES: Dict[str, BlockSpec] = {
    "e1": BlockSpec(1, ("-is2", "-is2", "-is2", "is2")),
    "1|e1": BlockSpec(1, ("-is2", "is2", "is2", "-is2")),
    "e2": BlockSpec(2, ("-s3", "s3", "-1", "1")),
    "1|e2": BlockSpec(2, ("-1", "1", "1", "-1")),
    "e3": BlockSpec(2, ("-s1", "s1", "-is2", "-is2")),
    "1|e3": BlockSpec(2, ("-is2", "-is2", "is2", "is2")),
    "e4": BlockSpec(3, ("-s3", "1", "s3", "-1")),
    "1|e4": BlockSpec(3, ("-1", "-1", "1", "1")),
    "e5": BlockSpec(3, ("-s1", "is2", "s1", "is2")),
    "1|e5": BlockSpec(3, ("-is2", "-is2", "-is2", "-is2")),
    "e6": BlockSpec(4, ("-1", "-s3", "s3", "1")),
    "1|e6": BlockSpec(4, ("-s3", "s3", "-s3", "s3")),
    "e7": BlockSpec(4, ("-is2", "-s1", "s1", "-is2")),
    "1|e7": BlockSpec(4, ("-s1", "s1", "-s1", "s1")),
}

# entries read "[-][e1]c<k>[*]": optional sign, optional left factor e1,
# state component k, optional complex conjugation
STATE_ACTION_TABLE: Dict[str, Tuple[str, str, str, str]] = {
    "e1": ("e1c1", "-e1c2", "-e1c3", "-e1c4"),
    "1|e1": ("e1c1", "e1c2", "e1c3", "e1c4"),
    "e2": ("-c2", "c1", "-c4*", "c3*"),
    "1|e2": ("-c2*", "c1*", "c4*", "-c3*"),
    "e3": ("-e1c2", "-e1c1", "-e1c4*", "e1c3*"),
    "1|e3": ("e1c2*", "-e1c1*", "e1c4*", "-e1c3*"),
    "e4": ("-c3", "c4*", "c1", "-c2*"),
    "1|e4": ("-c3*", "-c4*", "c1*", "c2*"),
    "e5": ("-e1c3", "e1c4*", "-e1c1", "-e1c2*"),
    "1|e5": ("e1c3*", "-e1c4*", "-e1c1*", "e1c2*"),
    "e6": ("-c4", "-c3*", "c2*", "c1"),
    "1|e6": ("-c4*", "c3*", "-c2*", "c1*"),
    "e7": ("e1c4", "e1c3*", "-e1c2*", "e1c1"),
    "1|e7": ("-e1c4*", "-e1c3*", "e1c2*", "e1c1*"),
}

_ACTION_ENTRY = re.compile(r"^(-?)(e1)?c([1-4])(\*?)$")


@dataclass(frozen=True)
class ActionEntry:
    """One decoded cell of the state action table."""

    sign: int
    times_e1: bool
    component: int
    conjugate: bool


def parse_action_entry(text: str) -> ActionEntry:
    """Decode a cell such as "-e1c4*".

    Raises:
        InvalidSelector: if the cell does not follow the table grammar
    """
    match = _ACTION_ENTRY.match(text)
    if not match:
        raise InvalidSelector(f"Bad action table entry: {text!r}")
    sign, e1, component, star = match.groups()
    return ActionEntry(-1 if sign else 1, bool(e1), int(component) - 1, bool(star))
