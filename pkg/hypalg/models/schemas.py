"""JSON schemas for algebra values, translations, generator reports and checks.

Every schema converts from the matching domain object with ``from_domain``;
value schemas also convert back with ``to_domain``. Rationals are carried
as strings so exact values survive the round trip.
"""

from typing import Annotated, Dict, List, Optional

from pydantic import Field

from hypalg.models.base import BaseSchema
from hypalg.services.algebra.octonion import Octonion
from hypalg.services.algebra.quaternion import Quaternion
from hypalg.services.algebra.scalars import format_scalar, to_scalar
from hypalg.services.bridge.matrix_bridge import ComplexMatrix
from hypalg.services.groups.group_lab import DimensionRow, GeneratorReport
from hypalg.services.groups.operator_matrix import OperatorMatrix
from hypalg.services.linalg.exact import RealMatrix
from hypalg.services.operators.barred_octonion import HermiticityVerdict, LeftBarredOctonion
from hypalg.services.operators.barred_quaternion import BarredQuaternion
from hypalg.services.verification import SuiteResult

QuaternionArray = Annotated[List[str], Field(min_length=4, max_length=4)]
OctonionArray = Annotated[List[str], Field(min_length=8, max_length=8)]


def _strings(values) -> List[str]:
    return [format_scalar(v) for v in values]


def _quaternion(values: List[str]) -> Quaternion:
    return Quaternion.from_coefficients([to_scalar(c) for c in values])


def _octonion(values: List[str]) -> Octonion:
    return Octonion(tuple(to_scalar(c) for c in values))


class QuaternionSchema(BaseSchema):
    """Quaternion as four rational strings (w, x, y, z)."""

    coefficients: QuaternionArray
    text: Optional[str] = None

    @classmethod
    def from_domain(cls, q: Quaternion) -> "QuaternionSchema":
        return cls(coefficients=_strings(q.coefficients), text=str(q))

    def to_domain(self) -> Quaternion:
        return _quaternion(self.coefficients)


class OctonionSchema(BaseSchema):
    coefficients: OctonionArray
    text: Optional[str] = None

    @classmethod
    def from_domain(cls, o: Octonion) -> "OctonionSchema":
        return cls(coefficients=_strings(o.c), text=str(o))

    def to_domain(self) -> Octonion:
        return _octonion(self.coefficients)


class BarredQuaternionSchema(BaseSchema):
    """``{q0, q1, q2, q3}`` for q0 + q1|e1 + q2|e2 + q3|e3."""

    q0: QuaternionArray
    q1: QuaternionArray
    q2: QuaternionArray
    q3: QuaternionArray

    @classmethod
    def from_domain(cls, operator: BarredQuaternion) -> "BarredQuaternionSchema":
        q0, q1, q2, q3 = (_strings(q.coefficients) for q in operator.slots)
        return cls(q0=q0, q1=q1, q2=q2, q3=q3)

    def to_domain(self) -> BarredQuaternion:
        return BarredQuaternion.from_slots([_quaternion(s) for s in (self.q0, self.q1, self.q2, self.q3)])


class LeftBarredOctonionSchema(BaseSchema):
    """``{o0, om}`` for o0 + sum_m o_m)e_m; ``om`` holds the seven barred slots."""

    o0: OctonionArray
    om: List[OctonionArray] = Field(..., min_length=7, max_length=7)

    @classmethod
    def from_domain(cls, operator: LeftBarredOctonion) -> "LeftBarredOctonionSchema":
        return cls(o0=_strings(operator.o0.c), om=[_strings(o.c) for o in operator.om])

    def to_domain(self) -> LeftBarredOctonion:
        return LeftBarredOctonion(_octonion(self.o0), tuple(_octonion(o) for o in self.om))


class WitnessSchema(BaseSchema):
    psi: OctonionArray
    phi: OctonionArray


class AntihermiticityVerdictSchema(BaseSchema):
    """``{"antihermitian": bool, "witness": {psi, phi} | null}``."""

    antihermitian: bool
    witness: Optional[WitnessSchema] = None

    @classmethod
    def from_domain(cls, verdict: HermiticityVerdict) -> "AntihermiticityVerdictSchema":
        witness = None
        if verdict.witness is not None:
            witness = WitnessSchema(psi=_strings(verdict.witness.psi.c), phi=_strings(verdict.witness.phi.c))
        return cls(antihermitian=verdict.antihermitian, witness=witness)


class RealMatrixSchema(BaseSchema):
    rows: int
    cols: int
    data: List[List[str]]

    @classmethod
    def from_domain(cls, matrix: RealMatrix) -> "RealMatrixSchema":
        return cls(rows=matrix.rows, cols=matrix.cols, data=matrix.as_strings())

    def to_domain(self) -> RealMatrix:
        return RealMatrix.from_rows([[to_scalar(v) for v in row] for row in self.data])


class ComplexMatrixSchema(BaseSchema):
    """Complex matrix split into real and imaginary parts."""

    rows: int
    cols: int
    re: List[List[str]]
    im: List[List[str]]

    @classmethod
    def from_domain(cls, matrix: ComplexMatrix) -> "ComplexMatrixSchema":
        return cls(
            rows=matrix.rows,
            cols=matrix.cols,
            re=[_strings(row) for row in matrix.real_parts()],
            im=[_strings(row) for row in matrix.imag_parts()],
        )


class OperatorMatrixSchema(BaseSchema):
    n: int
    entries: List[List[BarredQuaternionSchema]]

    @classmethod
    def from_domain(cls, matrix: OperatorMatrix) -> "OperatorMatrixSchema":
        return cls(
            n=matrix.n,
            entries=[[BarredQuaternionSchema.from_domain(e) for e in row] for row in matrix.entries],
        )

    def to_domain(self) -> OperatorMatrix:
        return OperatorMatrix.from_rows([[e.to_domain() for e in row] for row in self.entries])


class MultiplyRequest(BaseSchema):
    factors: List[str] = Field(..., min_length=1, description="Algebra elements in text form")
    octonion: bool = False
    group_left: bool = True


class MultiplyResponse(BaseSchema):
    """Product text, its grouping and the exact value."""

    product: str
    grouping: str
    quaternion: Optional[QuaternionSchema] = None
    octonion: Optional[OctonionSchema] = None

    @property
    def coefficients(self) -> List[str]:
        value = self.octonion if self.octonion is not None else self.quaternion
        return value.coefficients


class TranslateRequest(BaseSchema):
    operator: str = Field(..., description="Barred quaternion text or octonionic operator symbol")
    octonion: bool = False
    complex: bool = False


class TranslateResponse(BaseSchema):
    """Matrix image of an operator together with its exact coefficients.

    Octonionic operators are reported in left-barred form and carry their
    antihermiticity verdict.
    """

    operator: str
    real: Optional[RealMatrixSchema] = None
    complex: Optional[ComplexMatrixSchema] = None
    determinant: Optional[str] = None
    barred: Optional[BarredQuaternionSchema] = None
    left_barred: Optional[LeftBarredOctonionSchema] = None
    antihermiticity: Optional[AntihermiticityVerdictSchema] = None


class GeneratorReportSchema(BaseSchema):
    """Generator basis of a group spec."""

    spec: str
    dim: int
    formula: int
    generators: List[str]
    closure: str
    metric_signature: Optional[List[int]] = None
    notice: Optional[str] = None
    alternatives: Dict[str, int] = Field(default_factory=dict)
    basis: List[OperatorMatrixSchema] = Field(default_factory=list)

    @classmethod
    def from_domain(cls, report: GeneratorReport, include_basis: bool = False) -> "GeneratorReportSchema":
        basis = report.basis
        closure = "ok" if report.closure.closed else f"failed at {report.closure.pair}: {report.closure.reason}"
        return cls(
            spec=basis.spec.label,
            dim=basis.dim,
            formula=report.formula,
            generators=[str(m) for m in basis.basis],
            closure=closure,
            metric_signature=list(report.signature.as_pair()) if report.signature else None,
            notice=basis.notice,
            alternatives=dict(basis.alternatives),
            basis=[OperatorMatrixSchema.from_domain(m) for m in basis.basis] if include_basis else [],
        )


class DimensionRowSchema(BaseSchema):
    group: str
    partner: str
    formula: List[int]
    solved: List[Optional[int]] = Field(default_factory=list)
    partner_solved: List[Optional[int]] = Field(default_factory=list)
    alternatives: List[Dict[str, int]] = Field(default_factory=list)
    matches: bool = True

    @classmethod
    def from_domain(cls, row: DimensionRow) -> "DimensionRowSchema":
        return cls(
            group=row.label,
            partner=row.partner,
            formula=row.formula,
            solved=row.solved,
            partner_solved=row.partner_solved,
            alternatives=row.alternatives,
            matches=row.matches,
        )


class SuiteResultSchema(BaseSchema):
    name: str
    ok: bool
    summary: str
    details: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    elapsed: float = 0.0
    verdicts: Dict[str, AntihermiticityVerdictSchema] = Field(default_factory=dict)

    @classmethod
    def from_domain(cls, result: SuiteResult) -> "SuiteResultSchema":
        return cls(
            name=result.name,
            ok=result.ok,
            summary=result.summary,
            details=list(result.details),
            seed=result.seed,
            elapsed=result.elapsed,
            verdicts={k: AntihermiticityVerdictSchema.from_domain(v) for k, v in result.verdicts.items()},
        )


class VerificationReportSchema(BaseSchema):
    seed: int
    ok: bool
    suites: List[SuiteResultSchema]


class LorentzRequest(BaseSchema):
    kind: str = Field(..., description="boost_x, boost_y, boost_z, rot_x, rot_y or rot_z")
    theta: float
    event: List[float] = Field(..., min_length=4, max_length=4, description="(ct, x, y, z)")


class LorentzResponse(BaseSchema):
    kind: str
    theta: float
    event: List[float]
    transformed: List[float]
    interval_before: float
    interval_after: float
    drift: float
