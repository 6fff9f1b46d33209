"""Quaternionic rotations and boosts acting on space-time events.

An event ct + e1 x + e2 y + e3 z is a quaternion; the six generators are
barred operators in the O~(1, Q_r) algebra, so they preserve the interval
(q^dag g q)_r = (ct)^2 - x^2 - y^2 - z^2. Finite transformations are the
matrix exponential of the exact 4x4 image of a generator. Floats appear only
here; the generators and the metric stay exact.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from hypalg.config import settings
from hypalg.core.errors import InvalidSelector, ShapeMismatch
from hypalg.services.algebra.quaternion import (
    UNITS,
    hamilton_float,
    qconj,
    qmul,
)
from hypalg.services.bridge.matrix_bridge import qr_to_r4
from hypalg.services.groups.group_lab import defining_constraint
from hypalg.services.groups.operator_matrix import OperatorMatrix
from hypalg.services.groups.specs import Carrier, Family, GroupSpec
from hypalg.services.linalg.exact import RealMatrix, RowSpace
from hypalg.services.operators.barred_quaternion import (
    BarredQuaternion,
    apply,
    commutator,
    g_operator,
)

logger = logging.getLogger(__name__)


class LorentzKind(str, Enum):
    BOOST_X = "boost_x"
    BOOST_Y = "boost_y"
    BOOST_Z = "boost_z"
    ROT_X = "rot_x"
    ROT_Y = "rot_y"
    ROT_Z = "rot_z"

    @property
    def is_rotation(self) -> bool:
        return self.value.startswith("rot")

    @property
    def axis(self) -> int:
        return "xyz".index(self.value[-1]) + 1


# boost along axis u mixes ct with x_u: (e_b|e_a - e_a|e_b)/2 with (a, b)
# the other two axes in cyclic order
_BOOST_PAIRS = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


@dataclass(frozen=True)
class LorentzGenerator:
    """Exact barred operator of one rotation or boost."""

    kind: LorentzKind
    operator: BarredQuaternion

    @property
    def matrix(self) -> RealMatrix:
        return qr_to_r4(self.operator)

    def as_array(self) -> np.ndarray:
        return _float_matrix(self.kind)


@dataclass(frozen=True)
class Event:
    """Space-time event (ct, x, y, z) with float coordinates."""

    ct: float
    x: float
    y: float
    z: float

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "Event":
        if len(values) != 4:
            raise ShapeMismatch(f"An event needs 4 coordinates, got {len(values)}")
        return cls(*(float(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "Event":
        """Parse ``"ct,x,y,z"``."""
        try:
            values = [float(part) for part in text.split(",")]
        except ValueError as exc:
            raise InvalidSelector(f"Cannot parse event {text!r}: expected ct,x,y,z") from exc
        return cls.from_sequence(values)

    def as_array(self) -> np.ndarray:
        return np.array([self.ct, self.x, self.y, self.z], dtype=float)

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.ct, self.x, self.y, self.z)


def parse_kind(text: str) -> LorentzKind:
    try:
        return LorentzKind(text.strip().lower())
    except ValueError as exc:
        choices = ", ".join(k.value for k in LorentzKind)
        raise InvalidSelector(f"Unknown Lorentz generator {text!r}; expected one of {choices}") from exc


def generator(kind) -> LorentzGenerator:
    """Exact generator of a rotation or boost.

    rot_u is (e_u - 1|e_u)/2; boost_u is (e_b|e_a - e_a|e_b)/2 where (u, a, b)
    runs cyclically through (1, 2, 3).
    """
    kind = parse_kind(kind)
    u = kind.axis
    if kind.is_rotation:
        operator = BarredQuaternion.left(UNITS[u]) - BarredQuaternion.right_unit(u)
    else:
        a, b = _BOOST_PAIRS[u]
        operator = BarredQuaternion.term(UNITS[b], a) - BarredQuaternion.term(UNITS[a], b)
    return LorentzGenerator(kind, operator / 2)


def all_generators() -> List[LorentzGenerator]:
    return [generator(kind) for kind in LorentzKind]


def is_lorentz_generator(operator: BarredQuaternion) -> bool:
    """Exact check of g A + A^dag g = 0."""
    constraint = defining_constraint(GroupSpec(Family.O_TILDE, Carrier.QR, 1))
    return constraint(OperatorMatrix.scalar(operator))


@lru_cache(maxsize=None)
def _float_matrix(kind: LorentzKind) -> np.ndarray:
    return generator(kind).matrix.to_numpy()


def transformation_matrix(kind, theta: float) -> np.ndarray:
    """exp(theta M) for the 4x4 image M of the generator."""
    return expm(float(theta) * generator(kind).as_array())


def transform(g: LorentzGenerator, theta: float, event: Event) -> Event:
    """Apply the finite transformation exp(theta M) to an event."""
    if not np.isfinite(theta):
        raise InvalidSelector(f"Transformation parameter must be finite, got {theta}")
    return Event.from_sequence(expm(float(theta) * g.as_array()) @ event.as_array())


def compose_transforms(steps: Iterable[Tuple[str, float]], event: Event) -> Event:
    """Apply (kind, theta) steps in order, the first step acting first."""
    total = np.eye(4)
    for kind, theta in steps:
        total = transformation_matrix(kind, theta) @ total
    return Event.from_sequence(total @ event.as_array())


@lru_cache(maxsize=1)
def minkowski_metric() -> RealMatrix:
    """eta_ij = (e_i^dag g e_j)_r, exactly diag(1, -1, -1, -1)."""
    g = g_operator()
    return RealMatrix.from_rows([
        [qmul(qconj(a), apply(g, b)).w for b in UNITS] for a in UNITS
    ])


def interval(event: Event) -> float:
    """(q^dag g q)_r = (ct)^2 - x^2 - y^2 - z^2."""
    v = event.as_array()
    return float(v @ minkowski_metric().to_numpy() @ v)


def interval_drift(before: Event, after: Event) -> float:
    """|s' - s| / (1 + |s|)."""
    s, s_after = interval(before), interval(after)
    return abs(s_after - s) / (1.0 + abs(s))


def sandwich_rotation(axis: int, alpha: float, vector: Sequence[float]) -> Tuple[float, float, float]:
    """exp(alpha e_u / 2) r exp(-alpha e_u / 2) for r = e1 x + e2 y + e3 z."""
    if axis not in (1, 2, 3):
        raise InvalidSelector(f"Rotation axis must be 1..3, got {axis}")
    half = alpha / 2
    left = [np.cos(half), 0.0, 0.0, 0.0]
    left[axis] = np.sin(half)
    right = [left[0]] + [-c for c in left[1:]]
    r = [0.0] + [float(c) for c in vector]
    rotated = hamilton_float(hamilton_float(left, r), right)
    return tuple(rotated[1:])


@dataclass(frozen=True)
class DriftReport:
    seed: int
    compositions: int
    steps: int
    max_drift: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.max_drift <= self.tolerance


def random_composition_drift(
    seed: int,
    compositions: Optional[int] = None,
    steps: Optional[int] = None,
    bound: float = 2.0,
) -> DriftReport:
    """Worst interval drift over seeded random compositions of transforms."""
    compositions = compositions or settings.RANDOM_TRIALS
    steps = steps or settings.LORENTZ_STEPS
    rng = np.random.default_rng(seed)
    kinds = list(LorentzKind)
    worst = 0.0
    for _ in range(compositions):
        event = Event.from_sequence(rng.uniform(-1.0, 1.0, size=4))
        chain = [(kinds[int(rng.integers(len(kinds)))], float(rng.uniform(-bound, bound))) for _ in range(steps)]
        worst = max(worst, interval_drift(event, compose_transforms(chain, event)))
    logger.info(f"Lorentz drift over {compositions} compositions (seed {seed}): {worst:.3e}")
    return DriftReport(seed, compositions, steps, worst, settings.LORENTZ_TOLERANCE)


def random_rotation_mismatch(seed: int, cases: Optional[int] = None, bound: float = 2.0) -> float:
    """Largest gap between the exponential and the sandwich rotation."""
    cases = cases or settings.RANDOM_TRIALS
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(cases):
        axis = int(rng.integers(1, 4))
        alpha = float(rng.uniform(-bound, bound))
        r = rng.uniform(-1.0, 1.0, size=3)
        kind = LorentzKind(f"rot_{'xyz'[axis - 1]}")
        via_exp = transform(generator(kind), alpha, Event(0.0, *r))
        expected = sandwich_rotation(axis, alpha, r)
        gap = max(abs(via_exp.ct), *(abs(a - b) for a, b in zip(via_exp.as_tuple()[1:], expected)))
        worst = max(worst, gap)
    return worst


def rotation_commutators_close() -> bool:
    """[rot_x, rot_y] = rot_z and cyclic, exactly."""
    rot = {u: generator(LorentzKind(f"rot_{c}")).operator for u, c in zip((1, 2, 3), "xyz")}
    return all(
        commutator(rot[a], rot[b]) == rot[c]
        for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2))
    )


def boost_commutators_in_rotation_span() -> bool:
    rotations = RowSpace(
        [generator(k).operator.to_vector() for k in LorentzKind if k.is_rotation], 16
    )
    boosts = [generator(k).operator for k in LorentzKind if not k.is_rotation]
    return all(
        rotations.contains(commutator(a, b).to_vector())
        for i, a in enumerate(boosts)
        for b in boosts[i + 1:]
    )


__all__ = [
    "DriftReport",
    "Event",
    "LorentzGenerator",
    "LorentzKind",
    "all_generators",
    "boost_commutators_in_rotation_span",
    "compose_transforms",
    "generator",
    "interval",
    "interval_drift",
    "is_lorentz_generator",
    "minkowski_metric",
    "parse_kind",
    "random_composition_drift",
    "random_rotation_mismatch",
    "rotation_commutators_close",
    "sandwich_rotation",
    "transform",
    "transformation_matrix",
]
