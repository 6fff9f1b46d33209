"""Text, JSON and CSV rendering of CLI results."""

import csv
import io
import json
from typing import Iterable, List, Optional, Sequence, Union

from hypalg.models.base import BaseSchema
from hypalg.models.schemas import (
    ComplexMatrixSchema,
    DimensionRowSchema,
    GeneratorReportSchema,
    RealMatrixSchema,
    VerificationReportSchema,
)
from hypalg.utils.text_format import format_matrix_rows

Payload = Union[BaseSchema, Sequence[BaseSchema]]


def to_json(payload: Payload) -> str:
    """Pretty JSON with stable key order."""
    if isinstance(payload, BaseSchema):
        data = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, indent=2)


def to_csv(rows: Iterable[Sequence], header: Optional[Sequence[str]] = None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue().rstrip("\n")


def _cell(value) -> str:
    return "-" if value is None else str(value)


def dimension_rows_text(rows: Sequence[DimensionRowSchema]) -> str:
    """Dimensionality table, one row per group in printed order.

    Each n column shows the closed-form count, followed by the solved kernel
    dimension in brackets where it was computed.
    """
    if not rows:
        return ""
    n_max = len(rows[0].formula)
    header = ["group", "partner"] + [f"n={n}" for n in range(1, n_max + 1)]
    table: List[List[str]] = [header]
    for row in rows:
        cells = [row.group, row.partner]
        for k, formula in enumerate(row.formula):
            solved = row.solved[k] if k < len(row.solved) else None
            cells.append(str(formula) if solved is None else f"{formula} [{solved}]")
        table.append(cells)
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)).rstrip() for r in table]
    notes = []
    for row in rows:
        for k, alternatives in enumerate(row.alternatives):
            if alternatives:
                target = row.formula[k]
                flagged = ", ".join(
                    f"{name}={value}{' (matches)' if value == target else ''}"
                    for name, value in sorted(alternatives.items())
                )
                notes.append(f"{row.group} n={k + 1}: {flagged}")
    return "\n".join(lines + notes)


def dimension_rows_csv(rows: Sequence[DimensionRowSchema]) -> str:
    n_max = len(rows[0].formula) if rows else 0
    header = ["group", "partner"]
    for n in range(1, n_max + 1):
        header += [f"formula_n{n}", f"solved_n{n}"]
    body = []
    for row in rows:
        cells = [row.group, row.partner]
        for k, formula in enumerate(row.formula):
            cells += [formula, _cell(row.solved[k] if k < len(row.solved) else None)]
        body.append(cells)
    return to_csv(body, header)


def generator_report_text(report: GeneratorReportSchema) -> str:
    lines = [f"{report.spec}: dim {report.dim} (formula {report.formula})"]
    if report.notice:
        lines.append(f"notice: {report.notice}")
    lines += [f"  {generator}" for generator in report.generators]
    lines.append(f"closure: {report.closure}")
    if report.metric_signature is not None:
        lines.append(f"metric signature: ({report.metric_signature[0]},{report.metric_signature[1]})")
    for name, value in sorted(report.alternatives.items()):
        lines.append(f"{name}: {value}")
    return "\n".join(lines)


def real_matrix_text(matrix: RealMatrixSchema) -> str:
    return format_matrix_rows(matrix.data)


def real_matrix_csv(matrix: RealMatrixSchema) -> str:
    return to_csv(matrix.data)


def complex_matrix_cells(matrix: ComplexMatrixSchema) -> List[List[str]]:
    cells = []
    for re_row, im_row in zip(matrix.re, matrix.im):
        row = []
        for re, im in zip(re_row, im_row):
            if im == "0":
                row.append(re)
            elif re == "0":
                row.append(f"{im}i")
            else:
                sign = "" if im.startswith("-") else "+"
                row.append(f"{re}{sign}{im}i")
        cells.append(row)
    return cells


def verification_text(report: VerificationReportSchema) -> str:
    lines = [f"seed: {report.seed}"]
    for suite in report.suites:
        lines.append(suite.summary)
        prefix = "  " if suite.ok else "  - "
        lines += [f"{prefix}{detail}" for detail in suite.details]
    lines.append("all suites OK" if report.ok else "verification FAILED")
    return "\n".join(lines)


def verification_csv(report: VerificationReportSchema) -> str:
    return to_csv(
        ([s.name, "ok" if s.ok else "failed", s.summary, report.seed] for s in report.suites),
        ["suite", "status", "summary", "seed"],
    )
