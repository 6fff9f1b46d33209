"""Tests for the hypalg command-line interface."""

import json

import pytest

from hypalg import __version__
from hypalg.cli import build_parser, run
from hypalg.models.schemas import MultiplyResponse, TranslateResponse, VerificationReportSchema
from hypalg.services.algebra.octonion import OCTONION_UNITS
from hypalg.services.operators.barred_octonion import composite_unit
from hypalg.utils.text_format import parse_barred_quaternion


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_quaternion_product(capsys):
    code, out, _ = _run(capsys, "mul", "e1", "e2")
    assert code == 0
    assert out.strip() == "e3"


def test_octonion_grouping(capsys):
    assert _run(capsys, "mul", "e5", "e6", "e3", "--octonion", "--group-left")[1].strip() == "1"
    assert _run(capsys, "mul", "--octonion", "e1", "e2", "e4")[1].strip() == "e7"
    assert _run(capsys, "mul", "--octonion", "e1", "e2", "e4", "--group-right")[1].strip() == "-e7"


def test_product_as_csv_and_json(capsys):
    assert _run(capsys, "--format", "csv", "mul", "e1", "e2")[1].strip() == "0,0,0,1"
    out = _run(capsys, "--format", "json", "mul", "--octonion", "e1", "e2", "e4")[1]
    payload = json.loads(out)
    assert payload["product"] == "e7"
    assert payload["grouping"] == "left"
    assert payload["quaternion"] is None
    assert payload["octonion"]["coefficients"] == ["0"] * 7 + ["1"]
    result = MultiplyResponse.model_validate_json(out)
    assert result.octonion.to_domain() == OCTONION_UNITS[7]


def test_translate_real_matrix(capsys):
    code, out, _ = _run(capsys, "translate", "1|e1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    assert lines[-1] == "det = 1"


def test_translate_complex_octonionic(capsys):
    code, out, _ = _run(capsys, "--format", "json", "translate", '"e2"', "--octonion", "--complex")
    assert code == 0
    payload = json.loads(out)
    assert payload["real"] is None
    assert payload["complex"]["re"][0][1] == "-1"
    assert payload["complex"]["re"][1][0] == "1"
    assert payload["antihermiticity"] == {"antihermitian": True, "witness": None}
    assert TranslateResponse.model_validate_json(out).left_barred.to_domain() == composite_unit("e2")


def test_translate_json_round_trips(capsys):
    code, out, _ = _run(capsys, "--format", "json", "translate", "e3|e2 - e2|e3")
    assert code == 0
    result = TranslateResponse.model_validate_json(out)
    assert set(json.loads(out)["barred"]) == {"q0", "q1", "q2", "q3"}
    assert result.barred.to_domain() == parse_barred_quaternion("e3|e2 - e2|e3")
    assert result.real.rows == 4
    assert result.left_barred is None


def test_translate_reports_a_witness_for_plain_units(capsys):
    code, out, _ = _run(capsys, "--format", "json", "translate", "e3", "--octonion")
    assert code == 0
    verdict = json.loads(out)["antihermiticity"]
    assert verdict["antihermitian"] is False
    assert set(verdict["witness"]) == {"psi", "phi"}


def test_translate_rejects_ambiguous_bar(capsys):
    code, out, err = _run(capsys, "translate", "e2|e3", "--octonion")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    assert "ambiguous" in err


def test_translate_rejects_real_linear_complex_request(capsys):
    code, _, err = _run(capsys, "translate", "1|e2", "--complex")
    assert code == 2
    assert "not complex linear" in err


def test_generators_report(capsys):
    code, out, _ = _run(capsys, "generators", "--family", "U", "--carrier", "Qr", "--n", "1")
    assert code == 0
    assert out.splitlines()[0] == "U(1,Q_r): dim 6 (formula 6)"
    assert "closure: ok" in out
    assert "metric signature: (4,0)" in out


def test_generators_notice_for_su_over_q(capsys):
    code, out, _ = _run(capsys, "generators", "--family", "SU", "--carrier", "q")
    assert code == 0
    assert "notice: SU(1,q) coincides with U(1,q)" in out


def test_generators_json_with_basis(capsys):
    code, out, _ = _run(capsys, "--format", "json", "generators", "--family", "O", "--carrier", "q", "--basis")
    payload = json.loads(out)
    assert code == 0
    assert payload["dim"] == 1
    assert len(payload["generators"]) == 1
    assert payload["basis"][0]["n"] == 1


def test_unsupported_group(capsys):
    code, _, err = _run(capsys, "generators", "--family", "O~", "--carrier", "Qc")
    assert code == 2
    assert "error:" in err


def test_dimension_table(capsys):
    code, out, _ = _run(capsys, "dim-table", "--n-max", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("group")
    assert len(lines) == 14


def test_dimension_table_csv(capsys):
    code, out, _ = _run(capsys, "--format", "csv", "dim-table", "--n-max", "1", "--solve", "1")
    assert code == 0
    header, *rows = out.strip().splitlines()
    assert header == "group,partner,formula_n1,solved_n1"
    assert "U(n,Q_r),O(4n,r),6,6" in rows


def test_verify_single_suite(capsys):
    code, out, _ = _run(capsys, "--seed", "5", "verify", "--suite", "rank64")
    assert code == 0
    assert "seed: 5" in out
    assert "rank=64 OK" in out
    assert out.strip().endswith("all suites OK")


def test_verify_json_carries_antihermiticity_verdicts(capsys):
    code, out, _ = _run(capsys, "--format", "json", "verify", "--suite", "antihermiticity")
    assert code == 0
    report = VerificationReportSchema.model_validate_json(out)
    verdicts = report.suites[0].verdicts
    assert verdicts["1|e1"].antihermitian
    assert not verdicts["e5"].antihermitian
    assert verdicts["e5"].witness is not None


def test_verify_rejects_unknown_suite(capsys):
    code, _, err = _run(capsys, "verify", "--suite", "bogus")
    assert code == 2
    assert "invalid choice" in err


def test_lorentz_json(capsys):
    code, out, _ = _run(capsys, "lorentz", "--kind", "boost_x", "--theta", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["transformed"] == pytest.approx([1.0, 0.0, 0.0, 0.0])
    assert payload["interval_after"] == pytest.approx(1.0)


def test_lorentz_csv(capsys):
    code, out, _ = _run(capsys, "--format", "csv", "lorentz", "--kind", "rot_z", "--theta", "0", "--event=-1,0,0,0")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "ct,x,y,z,interval_before,interval_after,drift"
    assert row.startswith("-1.0,")


def test_lorentz_rejects_unknown_kind(capsys):
    code, _, err = _run(capsys, "lorentz", "--kind", "spin", "--theta", "1")
    assert code == 2
    assert "Unknown Lorentz generator" in err


def test_version(capsys):
    code, out, _ = _run(capsys, "--version")
    assert code == 0
    assert __version__ in out


def test_parser_requires_a_verb():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
