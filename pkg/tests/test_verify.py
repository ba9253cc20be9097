import numpy as np
import pytest

from core.verify import (
    CHECKS,
    VerifyReport,
    _random_spec,
    check_closed_forms,
    check_localization,
    check_oracle_equivalence,
    check_path_relation,
    check_pencil,
    check_remark,
    check_sign_criterion,
    check_structural,
    check_theorem4,
    check_theorem5,
    run_checks,
)


@pytest.fixture
def small(quick_config):
    quick_config.samples = 20
    quick_config.max_n = 12
    quick_config.theorem5_max_n = 16
    quick_config.symmetric_max_n = 30
    quick_config.fixed_end_max_n = 16
    quick_config.remark_ns = (20, 30)
    return quick_config


@pytest.mark.parametrize(
    "check",
    [
        check_oracle_equivalence,
        check_closed_forms,
        check_structural,
        check_path_relation,
        check_pencil,
        check_theorem4,
        check_theorem5,
        check_localization,
        check_sign_criterion,
        check_remark,
    ],
)
def test_each_check_passes_on_small_ranges(check, small):
    result = check(small, np.random.default_rng(7))
    assert result.passed, result.failures
    assert result.cases > 0
    assert result.failures == []


def test_random_spec_respects_oracle_cap(small):
    small.oracle_max_n = 6
    rng = np.random.default_rng(3)
    for _ in range(30):
        assert _random_spec(rng, small).n <= 6


def test_random_spec_rejects_impossible_cap(small):
    small.oracle_max_n = 3
    with pytest.raises(ValueError, match="order <= 3"):
        _random_spec(np.random.default_rng(0), small)


def test_run_checks_keeps_requested_order(small):
    names = ["remark", "path-relation", "theorem4"]
    report = run_checks(names, small, verbose=False)
    assert [c.name for c in report.checks] == names
    assert report.passed
    assert report.rng_seed == 1234


def test_run_checks_is_reproducible(small):
    first = run_checks(["pencil", "structural"], small, verbose=False)
    second = run_checks(["pencil", "structural"], small, verbose=False)
    assert [c.cases for c in first.checks] == [c.cases for c in second.checks]


def test_run_checks_draws_a_seed_when_none(small):
    small.rng_seed = None
    report = run_checks(["remark"], small, verbose=False)
    assert isinstance(report.rng_seed, int)
    assert small.rng_seed == report.rng_seed


def test_run_checks_rejects_unknown_names(small):
    with pytest.raises(ValueError, match="unknown checks: nope"):
        run_checks(["nope"], small)


def test_report_summary_and_record(small, capsys):
    report = run_checks(["remark"], small, verbose=True)
    text = report.print_summary()
    assert "All 1 checks passed" in text
    assert "n=20: b_min=1" in text
    record = report.to_record()
    assert record.results["passed"] is True
    assert record.results["checks"][0]["name"] == "remark"
    assert "RNG seed: 1234" in capsys.readouterr().out


def test_failed_report_lists_failures():
    from core.verify import CheckResult

    report = VerifyReport(rng_seed=1, checks=[CheckResult("pencil", False, 3, 0.1, failures=["boom"])])
    text = report.print_summary()
    assert not report.passed
    assert "FAILED: pencil" in text
    assert "- boom" in text


def test_every_check_is_documented():
    for fn in CHECKS.values():
        assert fn.__doc__


@pytest.mark.slow
def test_acceptance_suites():
    from core.config import SpectraConfig

    report = run_checks(list(CHECKS), SpectraConfig.acceptance(), verbose=False)
    assert report.passed, [c.failures for c in report.checks if not c.passed]


def test_remark_detail_reports_exact_and_rounded_b_star(small, rng):
    small.remark_ns = (100,)
    result = check_remark(small, rng)
    assert result.passed
    assert "n=100: b_min=6 b*=6.0054 (0.06066(n-1)=6.0053)" in result.detail
