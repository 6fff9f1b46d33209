"""Tests for the verification suites and their orchestrator."""

import pytest

from hypalg.core.errors import InvalidSelector
from hypalg.services.verification import SUITES, SuiteResult, VerificationOrchestrator

SEED = 20240517

FAST_SUITES = [
    "tables",
    "rank64",
    "count106",
    "antihermiticity",
    "commutant",
    "generators",
    "closure",
    "signatures",
    "transpose",
    "lorentz",
    "structure",
]


@pytest.mark.parametrize("name", FAST_SUITES)
def test_suite_passes(name):
    result = SUITES[name](SEED)
    assert result.ok, result.details
    assert result.name == name


@pytest.mark.slow
def test_dimensions_suite_passes():
    result = SUITES["dimensions"](SEED)
    assert result.ok, result.details


def test_rank_summary():
    assert SUITES["rank64"](SEED).summary == "rank=64 OK"


def test_structure_reports_the_grouping_example():
    assert "(e5 e6) e3 = 1" in SUITES["structure"](SEED).details


def test_antihermiticity_lists_witnesses():
    result = SUITES["antihermiticity"](SEED)
    assert len(result.details) == 6
    assert result.details[0].startswith("e2:")


def test_resolve_keeps_registry_order():
    assert VerificationOrchestrator.resolve(["all"]) == list(SUITES)
    assert VerificationOrchestrator.resolve(["structure", "rank64", "structure"]) == ["rank64", "structure"]


def test_resolve_rejects_unknown_suites():
    with pytest.raises(InvalidSelector):
        VerificationOrchestrator.resolve(["rank65"])


def test_parallel_run_returns_registry_order():
    orchestrator = VerificationOrchestrator(seed=SEED, jobs=2)
    results = orchestrator.run(["structure", "signatures", "tables"])
    assert [r.name for r in results] == ["tables", "signatures", "structure"]
    assert all(r.ok and r.seed == SEED for r in results)


def test_failing_suite_is_reported(monkeypatch):
    def broken(seed: int) -> SuiteResult:
        raise RuntimeError("boom")

    monkeypatch.setitem(SUITES, "tables", broken)
    result = VerificationOrchestrator(seed=SEED).run_suite("tables")
    assert not result.ok
    assert result.summary == "tables ERROR"
    assert result.details == ["RuntimeError: boom"]


def test_seed_defaults_to_settings():
    from hypalg.config import settings

    assert VerificationOrchestrator().seed == settings.HYPALG_SEED


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
