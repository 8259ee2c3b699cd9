from __future__ import annotations

import pytest

from genbinom.policy import DomainError
from genbinom.verify import (
    SUITES,
    CheckResult,
    VerifyReport,
    asymptotic_checks,
    exact_checks,
    run_suite,
)
from genbinom.verify import _collect


@pytest.fixture(scope="module")
def exact_report():
    return run_suite("exact")


def test_exact_suite_is_literally_zero(exact_report):
    assert exact_report.passed
    for c in exact_report.checks:
        assert c.threshold == 0.0 and c.max_residual == 0.0 and c.cases > 0
    for name in ("pascal", "committee", "recursion", "difference", "reflection", "cancellation", "finite_sums"):
        assert exact_report.get(name).passed


def test_small_exact_checks_match_full_names(exact_report):
    small = exact_checks(n_max=10, finite_n_max=20)
    assert [c.name for c in small] == [c.name for c in exact_report.checks]
    assert all(s.cases < f.cases for s, f in zip(small, exact_report.checks) if f.name not in ("pascal_rows", "row_sum_forms"))


def test_float_and_asymptotic_suites():
    for suite in ("float", "asymptotic"):
        report = run_suite(suite)
        assert report.passed, [c for c in report.checks if not c.passed]
    assert run_suite("asymptotic").get("row_sum_n80").max_residual <= 1e-6


def test_collect_exact_semantics():
    ok = _collect("z", 0.0, [("a", 0.0), ("b", 0.0)], exact=True)
    assert ok.passed and ok.cases == 2
    bad = _collect("z", 0.0, [("a", 0.0), ("b", 1e-300)], exact=True)
    assert not bad.passed and bad.worst == "b"
    loose = _collect("z", 1e-3, [("a", 5e-4), ("b", 2e-3), ("c", 1e-4)])
    assert not loose.passed and loose.worst == "b" and loose.max_residual == 2e-3


def test_thresholds_override_only_float_checks():
    relaxed = run_suite("asymptotic", {"row_sum_n40": 1e-12, "figure4_monotone": 1.0})
    assert not relaxed.get("row_sum_n40").passed
    assert relaxed.get("figure4_monotone").threshold == 0.0
    assert not relaxed.passed


def test_report_helpers():
    r = VerifyReport("x", (CheckResult("a", 1, 0.0, "", 0.0, True),))
    assert r.passed and r.get("a").cases == 1
    with pytest.raises(KeyError):
        r.get("b")
    assert VerifyReport("x").passed


def test_unknown_suite():
    assert "all" in SUITES
    with pytest.raises(DomainError):
        run_suite("nope")


def test_deterministic():
    assert asymptotic_checks() == asymptotic_checks()


@pytest.mark.slow
def test_all_suite_prefixes():
    report = run_suite("all")
    assert report.passed
    prefixes = {c.name.split(".")[0] for c in report.checks}
    assert prefixes == {"exact", "float", "asymptotic", "ml"}
