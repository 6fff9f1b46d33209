"""Request-level operations shared by the CLI and the HTTP API."""

import logging
from typing import List, Optional, Sequence

from hypalg.config import settings
from hypalg.core.errors import ParseError
from hypalg.models.schemas import (
    AntihermiticityVerdictSchema,
    BarredQuaternionSchema,
    ComplexMatrixSchema,
    DimensionRowSchema,
    GeneratorReportSchema,
    LeftBarredOctonionSchema,
    LorentzResponse,
    MultiplyResponse,
    OctonionSchema,
    QuaternionSchema,
    RealMatrixSchema,
    SuiteResultSchema,
    TranslateResponse,
    VerificationReportSchema,
)
from hypalg.services.algebra.octonion import omul_chain
from hypalg.services.algebra.quaternion import Q_ONE, qmul
from hypalg.services.algebra.scalars import format_scalar
from hypalg.services.bridge.matrix_bridge import (
    det,
    oc_to_c4,
    octonion_operator_to_r8,
    qc_to_c2,
    qr_to_r4,
)
from hypalg.services.groups.group_lab import dimension_table, generator_report
from hypalg.services.groups.specs import GroupSpec, parse_carrier, parse_family
from hypalg.services.lorentz import Event, generator, interval, interval_drift, transform
from hypalg.services.operators.barred_octonion import (
    OctonionOperator,
    antihermiticity_test,
    parse_operator_symbol,
    to_left_barred,
)
from hypalg.services.verification import VerificationOrchestrator
from hypalg.utils.text_format import (
    parse_barred_quaternion,
    parse_left_barred_octonion,
    parse_octonion,
    parse_quaternion,
)

logger = logging.getLogger(__name__)


def parse_octonion_operator(text: str) -> OctonionOperator:
    """Operator symbol such as ``e3(e1`` or ``"e2"``, else left-barred text."""
    try:
        return parse_operator_symbol(text)
    except ParseError:
        # left-barred text never contains a bar
        if "|" in text:
            raise
        return parse_left_barred_octonion(text)


class AlgebraWorkbench:
    """Entry point for multiplication, translation, groups, checks and boosts."""

    def __init__(self, seed: Optional[int] = None):
        self.seed = settings.resolve_seed(seed)
        logger.info(f"AlgebraWorkbench initialized (seed={self.seed})")

    def multiply(self, factors: Sequence[str], octonion: bool = False, group_left: bool = True) -> MultiplyResponse:
        """Multiply factors left to right; octonions follow ``group_left``."""
        if octonion:
            product = omul_chain([parse_octonion(f) for f in factors], group_left=group_left)
            return MultiplyResponse(
                product=str(product),
                grouping="left" if group_left else "right",
                octonion=OctonionSchema.from_domain(product),
            )
        product = Q_ONE
        for factor in factors:
            product = qmul(product, parse_quaternion(factor))
        return MultiplyResponse(
            product=str(product),
            grouping="associative",
            quaternion=QuaternionSchema.from_domain(product),
        )

    def translate(self, text: str, octonion: bool = False, complex_form: bool = False) -> TranslateResponse:
        """Matrix image of an operator.

        Raises:
            NotComplexLinear: if ``complex_form`` is asked for an operator
                outside the complex-linear class
            ParseError: on malformed operator text
        """
        if octonion:
            operator = parse_octonion_operator(text)
            response = TranslateResponse(
                operator=str(operator),
                left_barred=LeftBarredOctonionSchema.from_domain(to_left_barred(operator)),
                antihermiticity=AntihermiticityVerdictSchema.from_domain(antihermiticity_test(operator)),
            )
            if complex_form:
                response.complex = ComplexMatrixSchema.from_domain(oc_to_c4(operator))
                return response
            response.real = RealMatrixSchema.from_domain(octonion_operator_to_r8(operator))
        else:
            operator = parse_barred_quaternion(text)
            response = TranslateResponse(operator=str(operator), barred=BarredQuaternionSchema.from_domain(operator))
            if complex_form:
                response.complex = ComplexMatrixSchema.from_domain(qc_to_c2(operator))
                return response
            response.real = RealMatrixSchema.from_domain(qr_to_r4(operator))
        response.determinant = format_scalar(det(operator))
        return response

    def generators(self, family: str, carrier: str, n: int, include_basis: bool = False) -> GeneratorReportSchema:
        spec = GroupSpec(parse_family(family), parse_carrier(carrier), n)
        return GeneratorReportSchema.from_domain(generator_report(spec), include_basis=include_basis)

    def dimension_table(self, n_max: Optional[int] = None, solve_up_to: int = 0, partners: bool = False) -> List[DimensionRowSchema]:
        rows = dimension_table(n_max or settings.DIM_TABLE_N_MAX, solve_up_to, partners)
        return [DimensionRowSchema.from_domain(row) for row in rows]

    def verify(self, suites: Sequence[str] = ("all",), jobs: Optional[int] = None) -> VerificationReportSchema:
        orchestrator = VerificationOrchestrator(seed=self.seed, jobs=jobs)
        results = orchestrator.run(suites)
        return VerificationReportSchema(
            seed=self.seed,
            ok=all(r.ok for r in results),
            suites=[SuiteResultSchema.from_domain(r) for r in results],
        )

    def lorentz(self, kind: str, theta: float, event: Sequence[float]) -> LorentzResponse:
        before = Event.from_sequence(event)
        g = generator(kind)
        after = transform(g, theta, before)
        return LorentzResponse(
            kind=g.kind.value,
            theta=theta,
            event=list(before.as_tuple()),
            transformed=list(after.as_tuple()),
            interval_before=interval(before),
            interval_after=interval(after),
            drift=interval_drift(before, after),
        )
