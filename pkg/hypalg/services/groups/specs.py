"""Group families, carriers, metrics and closed-form dimension counts."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from hypalg.core.errors import InvalidSelector, UnsupportedCarrier
from hypalg.services.operators.barred_quaternion import BarredQuaternion


class Family(Enum):
    """Group families with a linear defining condition on generators."""

    U = "U"
    SU = "SU"
    O = "O"
    O_TILDE = "O~"
    SP = "Sp"


class Carrier(Enum):
    """Entry type of the generator matrices.

    ``R`` and ``C`` (real and e1-complex left multiplications) are used for
    the matrix groups the quaternionic ones are compared with.
    """

    R = "r"
    C = "c"
    Q = "q"
    QC = "Qc"
    QR = "Qr"


class MetricKind(Enum):
    DAGGER = "dagger"
    TRANSPOSE = "transpose"
    G_TWISTED = "g"
    SYMPLECTIC_J = "symplectic"
    STAR = "star"


class Projection(Enum):
    REAL = "real"
    COMPLEX = "complex"


# carrier -> allowed (slot, component) parameters of each entry, in order
CARRIER_PARAMETERS: Dict[Carrier, Tuple[Tuple[int, int], ...]] = {
    Carrier.R: ((0, 0),),
    Carrier.C: ((0, 0), (0, 1)),
    Carrier.Q: tuple((0, c) for c in range(4)),
    Carrier.QC: tuple((s, c) for s in range(2) for c in range(4)),
    Carrier.QR: tuple((s, c) for s in range(4) for c in range(4)),
}

_FAMILY_ALIASES = {
    "u": Family.U,
    "su": Family.SU,
    "o": Family.O,
    "o~": Family.O_TILDE,
    "otilde": Family.O_TILDE,
    "o_tilde": Family.O_TILDE,
    "sp": Family.SP,
}

_CARRIER_ALIASES = {
    "r": Carrier.R,
    "c": Carrier.C,
    "q": Carrier.Q,
    "qc": Carrier.QC,
    "q_c": Carrier.QC,
    "qr": Carrier.QR,
    "q_r": Carrier.QR,
}

_CARRIER_LABELS = {
    Carrier.R: "r",
    Carrier.C: "c",
    Carrier.Q: "q",
    Carrier.QC: "Q_c",
    Carrier.QR: "Q_r",
}


def parse_family(text: str) -> Family:
    key = text.strip().lower()
    if key not in _FAMILY_ALIASES:
        raise InvalidSelector(f"Unknown group family {text!r}")
    return _FAMILY_ALIASES[key]


def parse_carrier(text: str) -> Carrier:
    key = text.strip().lower()
    if key not in _CARRIER_ALIASES:
        raise InvalidSelector(f"Unknown carrier {text!r}")
    return _CARRIER_ALIASES[key]


@dataclass(frozen=True)
class GroupSpec:
    """A group family over a carrier in dimension n."""

    family: Family
    carrier: Carrier
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSelector(f"Group dimension must be >= 1, got {self.n}")
        if self.family is Family.O_TILDE and self.carrier is not Carrier.QR:
            raise UnsupportedCarrier("O~ is only defined over Q_r")
        if self.family is Family.SP and self.carrier in (Carrier.R, Carrier.C) and self.n % 2:
            raise UnsupportedCarrier("Odd symplectic dimension needs a quaternionic carrier")

    @property
    def label(self) -> str:
        return f"{self.family.value}({self.n},{_CARRIER_LABELS[self.carrier]})"

    @property
    def parameters_per_entry(self) -> int:
        return len(CARRIER_PARAMETERS[self.carrier])

    @property
    def parameter_count(self) -> int:
        return self.parameters_per_entry * self.n * self.n

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class MetricSpec:
    """Invariant form proj(conj(psi) M phi) defining a group.

    ``twist`` replaces g for the g-twisted kind; degenerate twists are
    allowed and report a radical.
    """

    kind: MetricKind
    projection: Projection = Projection.REAL
    twist: Optional[BarredQuaternion] = None


def dimension_formula(spec: GroupSpec) -> int:
    """Closed-form generator count for a group spec.

    SU over q, Q_r and r coincides with U there, so the U count is returned.
    """
    n = spec.n
    family = Family.U if spec.family is Family.SU and spec.carrier in (Carrier.Q, Carrier.QR, Carrier.R) else spec.family
    formulas = {
        (Family.U, Carrier.Q): n * (2 * n + 1),
        (Family.U, Carrier.QC): 4 * n * n,
        (Family.U, Carrier.QR): 2 * n * (4 * n - 1),
        (Family.SU, Carrier.QC): 4 * n * n - 1,
        (Family.O, Carrier.Q): n * (2 * n - 1),
        (Family.O, Carrier.QC): 2 * n * (2 * n - 1),
        (Family.O, Carrier.QR): 2 * n * (4 * n - 1),
        (Family.O_TILDE, Carrier.QR): 2 * n * (4 * n - 1),
        (Family.SP, Carrier.Q): n * (2 * n + 1),
        (Family.SP, Carrier.QC): 2 * n * (2 * n + 1),
        (Family.SP, Carrier.QR): 2 * n * (4 * n + 1),
        (Family.U, Carrier.R): n * (n - 1) // 2,
        (Family.O, Carrier.R): n * (n - 1) // 2,
        (Family.SP, Carrier.R): n * (n + 1) // 2,
        (Family.U, Carrier.C): n * n,
        (Family.SU, Carrier.C): n * n - 1,
        (Family.O, Carrier.C): n * (n - 1),
        (Family.SP, Carrier.C): n * (n + 1),
    }
    return formulas[(family, spec.carrier)]


@dataclass(frozen=True)
class Partner:
    """Matrix group paired with a quaternionic group by generator count."""

    name: str
    dim: int
    spec: Optional[GroupSpec] = None


def partner(spec: GroupSpec) -> Optional[Partner]:
    """Partner group of a quaternionic spec, solvable when ``spec`` is set.

    USp, SO* and the indefinite orthogonal partners are reported by name and
    count only.
    """
    n = spec.n
    family, carrier = spec.family, spec.carrier
    if carrier is Carrier.Q and family in (Family.U, Family.SU, Family.SP):
        return Partner(f"USp({2 * n},c)", n * (2 * n + 1))
    if carrier is Carrier.Q and family is Family.O:
        return Partner(f"SO*({2 * n},c)", n * (2 * n - 1))
    if carrier is Carrier.QC:
        mapping = {
            Family.U: ("U", Family.U, Carrier.C, 2 * n),
            Family.SU: ("SU", Family.SU, Carrier.C, 2 * n),
            Family.O: ("O", Family.O, Carrier.C, 2 * n),
            Family.SP: ("Sp", Family.SP, Carrier.C, 2 * n),
        }
        name, p_family, p_carrier, p_n = mapping[family]
        p_spec = GroupSpec(p_family, p_carrier, p_n)
        return Partner(f"{name}({p_n},c)", dimension_formula(p_spec), p_spec)
    if carrier is Carrier.QR:
        if family in (Family.U, Family.SU):
            p_spec = GroupSpec(Family.O, Carrier.R, 4 * n)
            return Partner(f"O({4 * n},r)", dimension_formula(p_spec), p_spec)
        if family is Family.O:
            return Partner(f"O({2 * n}+,{2 * n}-,r)", 2 * n * (4 * n - 1))
        if family is Family.O_TILDE:
            return Partner(f"O({3 * n}+,{n}-,r)", 2 * n * (4 * n - 1))
        if family is Family.SP:
            p_spec = GroupSpec(Family.SP, Carrier.R, 4 * n)
            return Partner(f"Sp({4 * n},r)", dimension_formula(p_spec), p_spec)
    return None


# row order of the printed dimensionality table
DIMENSION_TABLE_ROWS: Tuple[Tuple[Family, Carrier], ...] = (
    (Family.U, Carrier.Q),
    (Family.U, Carrier.QC),
    (Family.U, Carrier.QR),
    (Family.SU, Carrier.Q),
    (Family.SU, Carrier.QC),
    (Family.SU, Carrier.QR),
    (Family.O, Carrier.Q),
    (Family.O, Carrier.QC),
    (Family.O, Carrier.QR),
    (Family.O_TILDE, Carrier.QR),
    (Family.SP, Carrier.Q),
    (Family.SP, Carrier.QC),
    (Family.SP, Carrier.QR),
)


def default_metric(spec: GroupSpec) -> MetricSpec:
    """The invariant form each family is defined by.

    Complex projection is used for the complex-linear carriers and real
    projection for the real-linear ones.
    """
    kind = {
        Family.U: MetricKind.DAGGER,
        Family.SU: MetricKind.DAGGER,
        Family.O: MetricKind.TRANSPOSE,
        Family.O_TILDE: MetricKind.G_TWISTED,
        Family.SP: MetricKind.SYMPLECTIC_J,
    }[spec.family]
    projection = Projection.REAL if spec.carrier in (Carrier.R, Carrier.QR) else Projection.COMPLEX
    return MetricSpec(kind, projection)
