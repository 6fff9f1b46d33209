"""Command-line interface for hypalg.

Verbs::

    hypalg mul e5 e6 e3 --octonion --group-left
    hypalg translate "e3|e2 - e2|e3"
    hypalg translate '"e2"' --octonion --complex
    hypalg generators --family U --carrier Qr --n 1
    hypalg dim-table --n-max 4 --solve 2
    hypalg verify --suite rank64 --suite lorentz --jobs 4
    hypalg lorentz --kind boost_x --theta 0.5 --event 1,0,0,0

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
errors or invalid input. Negative events need ``--event=-1,0,0,0``.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from hypalg import __version__
from hypalg.config import configure_logging, settings
from hypalg.core.errors import HypalgError
from hypalg.services.lorentz import Event
from hypalg.services.verification import SUITES
from hypalg.services.workbench import AlgebraWorkbench
from hypalg.utils.table_output import (
    complex_matrix_cells,
    dimension_rows_csv,
    dimension_rows_text,
    generator_report_text,
    real_matrix_csv,
    real_matrix_text,
    to_csv,
    to_json,
    verification_csv,
    verification_text,
)
from hypalg.utils.text_format import format_matrix_rows

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypalg",
        description="Exact quaternionic and octonionic operator algebra",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized checks (default: HYPALG_SEED)")
    parser.add_argument("--log-level", default=None, help="logging level (default: WARNING)")
    verbs = parser.add_subparsers(dest="verb", required=True)

    mul = verbs.add_parser("mul", help="multiply quaternions or octonions")
    mul.add_argument("factors", nargs="+")
    mul.add_argument("--octonion", action="store_true")
    grouping = mul.add_mutually_exclusive_group()
    grouping.add_argument("--group-left", dest="group_left", action="store_true", default=True)
    grouping.add_argument("--group-right", dest="group_left", action="store_false")

    translate = verbs.add_parser("translate", help="matrix image of an operator")
    translate.add_argument("operator")
    translate.add_argument("--octonion", action="store_true")
    translate.add_argument("--complex", action="store_true", help="complex matrix of a complex-linear operator")

    generators = verbs.add_parser("generators", help="solve the generator basis of a group")
    generators.add_argument("--family", required=True, help="U, SU, O, O~ or Sp")
    generators.add_argument("--carrier", required=True, help="r, c, q, Qc or Qr")
    generators.add_argument("--n", type=int, default=1)
    generators.add_argument("--basis", action="store_true", help="include full matrices in JSON output")

    dim_table = verbs.add_parser("dim-table", help="print the dimensionality table")
    dim_table.add_argument("--n-max", type=int, default=settings.DIM_TABLE_N_MAX)
    dim_table.add_argument("--solve", type=int, default=0, help="also solve kernels for n up to this value")
    dim_table.add_argument("--partners", action="store_true", help="also solve partner groups")

    verify = verbs.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", action="append", choices=("all",) + tuple(SUITES), default=None)
    verify.add_argument("--jobs", type=int, default=None)

    lorentz = verbs.add_parser("lorentz", help="apply a rotation or boost to an event")
    lorentz.add_argument("--kind", required=True)
    lorentz.add_argument("--theta", type=float, required=True)
    lorentz.add_argument("--event", default="1,0,0,0", help="ct,x,y,z")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _run_mul(bench: AlgebraWorkbench, args) -> int:
    result = bench.multiply(args.factors, octonion=args.octonion, group_left=args.group_left)
    if args.format == "json":
        _emit(to_json(result))
    elif args.format == "csv":
        _emit(to_csv([result.coefficients]))
    else:
        _emit(result.product)
    return 0


def _run_translate(bench: AlgebraWorkbench, args) -> int:
    result = bench.translate(args.operator, octonion=args.octonion, complex_form=args.complex)
    if args.format == "json":
        _emit(to_json(result))
    elif result.complex is not None:
        cells = complex_matrix_cells(result.complex)
        _emit(to_csv(cells) if args.format == "csv" else format_matrix_rows(cells))
    elif args.format == "csv":
        _emit(real_matrix_csv(result.real))
    else:
        _emit(real_matrix_text(result.real))
        _emit(f"det = {result.determinant}")
    return 0


def _run_generators(bench: AlgebraWorkbench, args) -> int:
    report = bench.generators(args.family, args.carrier, args.n, include_basis=args.basis)
    if args.format == "json":
        _emit(to_json(report))
    elif args.format == "csv":
        _emit(to_csv(([k, g] for k, g in enumerate(report.generators, start=1)), ["index", "generator"]))
    else:
        _emit(generator_report_text(report))
    return 0 if report.closure == "ok" else 1


def _run_dim_table(bench: AlgebraWorkbench, args) -> int:
    rows = bench.dimension_table(args.n_max, solve_up_to=args.solve, partners=args.partners)
    if args.format == "json":
        _emit(to_json(rows))
    elif args.format == "csv":
        _emit(dimension_rows_csv(rows))
    else:
        _emit(dimension_rows_text(rows))
    return 0 if all(row.matches for row in rows) else 1


def _run_verify(bench: AlgebraWorkbench, args) -> int:
    report = bench.verify(args.suite or ["all"], jobs=args.jobs)
    if args.format == "json":
        _emit(to_json(report))
    elif args.format == "csv":
        _emit(verification_csv(report))
    else:
        _emit(verification_text(report))
    return 0 if report.ok else 1


def _run_lorentz(bench: AlgebraWorkbench, args) -> int:
    result = bench.lorentz(args.kind, args.theta, Event.parse(args.event).as_tuple())
    if args.format == "csv":
        _emit(to_csv([result.transformed + [result.interval_before, result.interval_after, result.drift]],
                     ["ct", "x", "y", "z", "interval_before", "interval_after", "drift"]))
    else:
        _emit(json.dumps(result.model_dump(mode="json"), indent=2))
    return 0


_HANDLERS = {
    "mul": _run_mul,
    "translate": _run_translate,
    "generators": _run_generators,
    "dim-table": _run_dim_table,
    "verify": _run_verify,
    "lorentz": _run_lorentz,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` and execute one verb.

    Returns:
        int: process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.log_level or "WARNING")
    bench = AlgebraWorkbench(seed=args.seed)
    try:
        return _HANDLERS[args.verb](bench, args)
    except HypalgError as exc:
        logger.debug(f"{args.verb} failed: {exc}")
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
