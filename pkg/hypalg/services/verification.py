"""Verification suites reproducing the printed tables and algebraic claims.

Each suite is a plain function returning a ``SuiteResult``; the
``VerificationOrchestrator`` runs a selection of them, optionally on a
thread pool, and always returns results in registry order so output is
identical across runs.
"""

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from hypalg.config import settings
from hypalg.core.errors import InvalidSelector
from hypalg.services.algebra.complex_value import C_I, C_ONE, C_ZERO, ComplexValue
from hypalg.services.algebra.octonion import (
    OCTONION_UNITS,
    O_ONE,
    Octonion,
    associator,
    associator_constants,
    eps4,
    omul_chain,
)
from hypalg.services.algebra.quaternion import Quaternion, qmul, qstar
from hypalg.services.bridge.generator_rules import (
    OCTONION_BLOCK_RULES,
    QUATERNION_GENERATOR_MATRICES,
    STATE_ACTION_TABLE,
    parse_action_entry,
)
from hypalg.services.bridge.matrix_bridge import (
    ComplexMatrix,
    complex_linear_subalgebra,
    is_product_closed,
    left_barred_rank,
    oc_to_c4,
    or_to_r8,
    qr_to_r4,
)
from hypalg.services.bridge.regular import printed_tables_agree
from hypalg.services.groups.group_lab import (
    dimension_table,
    invariance_check,
    invariance_check_operators,
    listed_generators,
    metric_signature,
    naive_transpose_counterexample,
    same_span,
    solve_generators,
    star_exclusion_witness,
    transpose_law_holds,
    verify_closure,
)
from hypalg.services.groups.operator_matrix import OperatorMatrix
from hypalg.services.groups.specs import (
    Carrier,
    Family,
    GroupSpec,
    MetricKind,
    MetricSpec,
    Projection,
)
from hypalg.services.lorentz import (
    LorentzKind,
    boost_commutators_in_rotation_span,
    generator,
    is_lorentz_generator,
    random_composition_drift,
    random_rotation_mismatch,
    rotation_commutators_close,
)
from hypalg.services.operators.barred_octonion import (
    HermiticityVerdict,
    LeftBarredOctonion,
    OctonionicState,
    RightBarredTerm,
    antihermiticity_test,
    apply_left,
    apply_right,
    composite_unit,
    correction_term,
    hermiticity_test,
    operator_family,
    reduce_right,
    state_compose,
    state_decompose,
)
from hypalg.services.operators.barred_quaternion import BarredQuaternion
from hypalg.utils.text_format import format_complex

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    ok: bool
    summary: str
    details: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    elapsed: float = 0.0
    verdicts: Dict[str, HermiticityVerdict] = field(default_factory=dict)


def _result(name: str, failures: List[str], ok_summary: str, details: List[str] = None, seed=None) -> SuiteResult:
    if failures:
        return SuiteResult(name, False, f"{name} FAILED ({len(failures)})", failures + (details or []), seed)
    return SuiteResult(name, True, ok_summary, details or [], seed)


def _action_value(text: str, state: OctonionicState) -> ComplexValue:
    entry = parse_action_entry(text)
    value = state.components[entry.component]
    if entry.conjugate:
        value = value.conjugate()
    if entry.times_e1:
        value = C_I * value
    return value if entry.sign > 0 else -value


def _action_table_mismatches() -> List[str]:
    failures = []
    states = []
    for k in range(4):
        for unit in (C_ONE, C_I):
            components = [C_ZERO] * 4
            components[k] = unit
            states.append(OctonionicState.from_components(components))
    for name, row in STATE_ACTION_TABLE.items():
        m = int(name[-1])
        operator = (
            LeftBarredOctonion.term(O_ONE, m) if name.startswith("1|") else LeftBarredOctonion.left(OCTONION_UNITS[m])
        )
        for state in states:
            image = state_decompose(apply_left(operator, state_compose(state))).components
            expected = tuple(_action_value(cell, state) for cell in row)
            if image != expected:
                failures.append(f"state action of {name} disagrees")
                break
    return failures


def suite_tables(seed: int) -> SuiteResult:
    """Printed 4x4, 8x8 and state-action tables against the product table."""
    _, mismatches = printed_tables_agree()
    failures = [f"printed matrix {name} disagrees with the product table" for name in mismatches]
    for name, printed in QUATERNION_GENERATOR_MATRICES.items():
        m = int(name[-1])
        operator = BarredQuaternion.right_unit(m) if name.startswith("1|") else BarredQuaternion.left(
            Quaternion.basis(m)
        )
        if qr_to_r4(operator).data != printed:
            failures.append(f"qr_to_r4({name}) differs from the printed matrix")
    for name, rule in OCTONION_BLOCK_RULES.items():
        m = int(name[-1])
        operator = LeftBarredOctonion.term(O_ONE, m) if name.startswith("1|") else LeftBarredOctonion.left(
            OCTONION_UNITS[m]
        )
        if or_to_r8(operator).data != rule.expand():
            failures.append(f"or_to_r8({name}) differs from the printed block rule")
    failures += _action_table_mismatches()
    total = len(QUATERNION_GENERATOR_MATRICES) + len(OCTONION_BLOCK_RULES) + len(STATE_ACTION_TABLE)
    return _result("tables", failures, f"tables: {total} printed rules OK")


def suite_rank64(seed: int) -> SuiteResult:
    """64 left-barred basis operators are independent; 42 right terms reduce."""
    failures = []
    value = left_barred_rank()
    if value != 64:
        failures.append(f"rank={value}, expected 64")
    for m in range(1, 8):
        for n in range(1, 8):
            if m == n:
                continue
            term = RightBarredTerm(OCTONION_UNITS[m], n)
            reduced = reduce_right(term)
            for state in OCTONION_UNITS:
                if apply_left(reduced, state) != apply_right(term, state):
                    failures.append(f"e{m}(e{n} leaves a residual on {state}")
                    break
    return _result("rank64", failures, f"rank={value} OK")


def suite_count106(seed: int) -> SuiteResult:
    family = operator_family()
    span = left_barred_rank([op for _, op in family])
    failures = []
    if len(family) != 106:
        failures.append(f"{len(family)} symbols, expected 106")
    if span != 64:
        failures.append(f"span dimension {span}, expected 64")
    return _result("count106", failures, f"symbols={len(family)} span={span} OK")


def suite_antihermiticity(seed: int) -> SuiteResult:
    """e1, 1|e1 and the composites pass; e2..e7 fail with a witness."""
    rng = random.Random(seed)
    failures, details = [], []
    passing = {
        "e1": LeftBarredOctonion.left(OCTONION_UNITS[1]),
        "1|e1": LeftBarredOctonion.term(O_ONE, 1),
    }
    passing.update({f'"{name}"': composite_unit(name) for name in ("e2", "e4", "e6")})
    verdicts = {}
    for name, operator in passing.items():
        verdicts[name] = antihermiticity_test(operator)
        if not verdicts[name].holds:
            failures.append(f"{name} should be antihermitian")
    for m in range(2, 8):
        verdict = verdicts[f"e{m}"] = antihermiticity_test(LeftBarredOctonion.left(OCTONION_UNITS[m]))
        if verdict.holds:
            failures.append(f"e{m} should not be antihermitian")
        else:
            w = verdict.witness
            details.append(
                f"e{m}: psi={w.psi} phi={w.phi} lhs={format_complex(w.lhs)} rhs={format_complex(w.rhs)}"
            )
    for name in ("h2", "h4", "h6"):
        if not hermiticity_test(composite_unit(name)).holds:
            failures.append(f"{name} should be hermitian")
    correction = correction_term(3)
    for _ in range(settings.RANDOM_TRIALS):
        q = Quaternion(*(rng.randint(-9, 9) for _ in range(4)))
        if not apply_left(correction, Octonion.from_quaternion(q)).is_zero():
            failures.append(f"correction term does not annihilate {q}")
            break
    result = _result("antihermiticity", failures, "antihermiticity battery OK", details, seed)
    result.verdicts = verdicts
    return result


# oc_to_c4 of "e2": (c1, c2, c3, c4) -> (-c2, c1, 0, 0)
_E2_COMPOSITE_MATRIX = ComplexMatrix.from_rows([
    [C_ZERO, -C_ONE, C_ZERO, C_ZERO],
    [C_ONE, C_ZERO, C_ZERO, C_ZERO],
    [C_ZERO, C_ZERO, C_ZERO, C_ZERO],
    [C_ZERO, C_ZERO, C_ZERO, C_ZERO],
])


def suite_commutant(seed: int) -> SuiteResult:
    failures = []
    matrices = complex_linear_subalgebra()
    if len(matrices) != 32:
        failures.append(f"commutant dimension {len(matrices)}, expected 32")
    if not is_product_closed(matrices):
        failures.append("commutant is not closed under products")
    if oc_to_c4(composite_unit("e2")) != _E2_COMPOSITE_MATRIX:
        failures.append('oc_to_c4("e2") differs from (-c2, c1, 0, 0)')
    return _result("commutant", failures, f"commutant dim={len(matrices)} OK")


_ONE_DIMENSIONAL_ROWS = (
    (Family.U, Carrier.Q),
    (Family.U, Carrier.QC),
    (Family.U, Carrier.QR),
    (Family.SU, Carrier.QC),
    (Family.O, Carrier.Q),
    (Family.O, Carrier.QC),
    (Family.O, Carrier.QR),
    (Family.O_TILDE, Carrier.QR),
    (Family.SP, Carrier.QC),
    (Family.SP, Carrier.QR),
)


def suite_generators(seed: int) -> SuiteResult:
    """Solved n = 1 bases span the tabulated generator sets."""
    failures, details = [], []
    for family, carrier in _ONE_DIMENSIONAL_ROWS:
        spec = GroupSpec(family, carrier, 1)
        solved = solve_generators(spec)
        listed = listed_generators(family, carrier)
        if solved.dim != len(listed) or not same_span(solved.basis, listed):
            failures.append(f"{spec.label}: solved span differs from the tabulated generators")
        details.append(f"{spec.label}: dim {solved.dim}")
    return _result("generators", failures, f"generators: {len(_ONE_DIMENSIONAL_ROWS)} tables OK", details)


def suite_closure(seed: int) -> SuiteResult:
    """Every n = 1 basis closes and preserves its defining metric."""
    failures = []
    for family, carrier in _ONE_DIMENSIONAL_ROWS:
        basis = solve_generators(GroupSpec(family, carrier, 1))
        verdict = verify_closure(basis)
        if not verdict.closed:
            failures.append(f"{basis.spec.label}: {verdict.reason} at {verdict.pair}")
        if not invariance_check(basis).invariant:
            failures.append(f"{basis.spec.label}: basis does not preserve its metric")
    transpose_metric = MetricSpec(MetricKind.TRANSPOSE, Projection.REAL)
    e1 = [OperatorMatrix.scalar(BarredQuaternion.left(Quaternion.basis(1)))]
    if invariance_check_operators(e1, transpose_metric, Carrier.QR).invariant:
        failures.append("e1 should violate the transpose metric")
    return _result("closure", failures, "closure battery OK")


_EXPECTED_SIGNATURES = (
    ("dagger", MetricSpec(MetricKind.DAGGER), (4, 0, 0)),
    ("transpose", MetricSpec(MetricKind.TRANSPOSE), (2, 2, 0)),
    ("g", MetricSpec(MetricKind.G_TWISTED), (1, 3, 0)),
    ("star", MetricSpec(MetricKind.STAR), (3, 1, 0)),
    ("dagger/complex", MetricSpec(MetricKind.DAGGER, Projection.COMPLEX), (2, 0, 0)),
)


def suite_signatures(seed: int) -> SuiteResult:
    failures, details = [], []
    for label, metric, expected in _EXPECTED_SIGNATURES:
        carrier = Carrier.QC if metric.projection is Projection.COMPLEX else Carrier.QR
        signature = metric_signature(metric, carrier)
        found = (signature.positive, signature.negative, signature.radical)
        details.append(f"{label}: {found[:2]}")
        if found != expected:
            failures.append(f"{label}: signature {found}, expected {expected}")
    return _result("signatures", failures, "signatures (4,0) (2,2) (1,3) OK", details)


def _random_quaternion_matrix(rng: random.Random, n: int) -> OperatorMatrix:
    return OperatorMatrix.from_quaternions([
        [Quaternion(*(rng.randint(-5, 5) for _ in range(4))) for _ in range(n)] for _ in range(n)
    ])


def suite_transpose(seed: int) -> SuiteResult:
    """(MN)^t = N^t M^t on random matrices; the naive transpose breaks it."""
    rng = random.Random(seed)
    failures = []
    for n in (2, 3):
        for _ in range(settings.RANDOM_TRIALS):
            m, k = _random_quaternion_matrix(rng, n), _random_quaternion_matrix(rng, n)
            if not transpose_law_holds(m, k):
                failures.append(f"transpose law fails for {m} and {k}")
                break
    m, k = naive_transpose_counterexample()
    if transpose_law_holds(m, k, naive=True):
        failures.append("naive transpose counterexample does not break the law")
    q, p = star_exclusion_witness()
    if qstar(qmul(q, p)) != qmul(qstar(q), qstar(p)) or qstar(qmul(q, p)) == qmul(qstar(p), qstar(q)):
        failures.append("star conjugation should be order preserving")
    return _result("transpose", failures, "transpose laws OK", seed=seed)


def suite_lorentz(seed: int) -> SuiteResult:
    failures = []
    for kind in LorentzKind:
        if not is_lorentz_generator(generator(kind).operator):
            failures.append(f"{kind.value} violates g A + A^dag g = 0")
    if not rotation_commutators_close():
        failures.append("rotation commutators do not reproduce so(3)")
    if not boost_commutators_in_rotation_span():
        failures.append("boost commutators leave the rotation span")
    drift = random_composition_drift(seed)
    if not drift.ok:
        failures.append(f"interval drift {drift.max_drift:.3e} > {drift.tolerance:.0e}")
    mismatch = random_rotation_mismatch(seed)
    if mismatch > settings.ROTATION_TOLERANCE:
        failures.append(f"rotation mismatch {mismatch:.3e} > {settings.ROTATION_TOLERANCE:.0e}")
    details = [f"max drift {drift.max_drift:.3e}", f"rotation mismatch {mismatch:.3e}"]
    return _result("lorentz", failures, "lorentz OK", details, seed)


def _random_octonion(rng: random.Random) -> Octonion:
    return Octonion(tuple(rng.randint(-5, 5) for _ in range(8)))


def suite_structure(seed: int) -> SuiteResult:
    """Associator constants against the quadruple table, plus alternativity."""
    rng = random.Random(seed)
    failures = []
    for (m, n, p), (sign, s) in associator_constants().items():
        expected = {k: eps4(m, n, p, k) for k in range(1, 8) if eps4(m, n, p, k)}
        found = {s: sign} if sign else {}
        if expected != found:
            failures.append(f"associator of e{m}, e{n}, e{p}: {found} vs table {expected}")
    for _ in range(settings.ALTERNATIVITY_TRIALS):
        x, y, z = (_random_octonion(rng) for _ in range(3))
        if not (associator(x, y, z) + associator(z, y, x)).is_zero():
            failures.append(f"alternativity fails for {x}, {y}, {z}")
            break
    product = omul_chain([OCTONION_UNITS[5], OCTONION_UNITS[6], OCTONION_UNITS[3]], group_left=True)
    details = [f"(e5 e6) e3 = {product}"]
    return _result("structure", failures, "structure constants OK", details, seed)


def suite_dimensions(seed: int) -> SuiteResult:
    failures = []
    rows = dimension_table(settings.SOLVE_N_MAX, solve_up_to=settings.SOLVE_N_MAX)
    for row in rows:
        if not row.matches:
            failures.append(f"{row.label}: solved {row.solved} vs formula {row.formula}")
    return _result("dimensions", failures, f"dimensions n<= {settings.SOLVE_N_MAX} OK")


SUITES: Dict[str, Callable[[int], SuiteResult]] = {
    "tables": suite_tables,
    "rank64": suite_rank64,
    "count106": suite_count106,
    "antihermiticity": suite_antihermiticity,
    "commutant": suite_commutant,
    "generators": suite_generators,
    "closure": suite_closure,
    "signatures": suite_signatures,
    "transpose": suite_transpose,
    "lorentz": suite_lorentz,
    "structure": suite_structure,
    "dimensions": suite_dimensions,
}


class VerificationOrchestrator:
    """Run verification suites and merge their results by name."""

    def __init__(self, seed: Optional[int] = None, jobs: Optional[int] = None):
        self.seed = settings.resolve_seed(seed)
        self.jobs = jobs or settings.VERIFY_JOBS
        logger.info(f"VerificationOrchestrator initialized (seed={self.seed}, jobs={self.jobs})")

    @staticmethod
    def resolve(names: Sequence[str]) -> List[str]:
        """Expand ``all`` and validate suite names, keeping registry order.

        Raises:
            InvalidSelector: for an unknown suite
        """
        wanted = set()
        for name in names:
            if name == "all":
                wanted.update(SUITES)
            elif name in SUITES:
                wanted.add(name)
            else:
                raise InvalidSelector(f"Unknown suite {name!r}; expected one of {', '.join(SUITES)} or all")
        return [name for name in SUITES if name in wanted]

    def run_suite(self, name: str) -> SuiteResult:
        started = time.perf_counter()
        logger.info(f"Running suite {name}")
        try:
            result = SUITES[name](self.seed)
        except Exception as exc:
            logger.error(f"Suite {name} raised: {exc}")
            result = SuiteResult(name, False, f"{name} ERROR", [f"{type(exc).__name__}: {exc}"])
        result.seed = self.seed
        result.elapsed = time.perf_counter() - started
        return result

    def run(self, names: Sequence[str] = ("all",)) -> List[SuiteResult]:
        selected = self.resolve(names)
        if self.jobs > 1 and len(selected) > 1:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                results = list(pool.map(self.run_suite, selected))
        else:
            results = [self.run_suite(name) for name in selected]
        failed = [r.name for r in results if not r.ok]
        if failed:
            logger.warning(f"Failed suites: {failed}")
        return results
