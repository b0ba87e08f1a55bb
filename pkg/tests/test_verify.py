from collections.abc import Iterator
from dataclasses import replace

import pytest

from gcrystal.datatypes import RunConfig
from gcrystal.errors import InputError
from gcrystal.sampling import Sampler
from gcrystal.verify import (
    SUITES,
    SuiteReport,
    Trial,
    TrialOutcome,
    load_run_config,
    resolve_suites,
    run_suite,
    run_suites,
    run_trial,
    suite,
    suite_listing,
)

CFG = RunConfig(trials=3, m_max=3, n_max=3, batch_size=2, sample_max=9, int_max=3)

MODULES = {"exact-arith", "matrix-core", "crystal-basic", "crystal-gt", "grsk", "loopsym", "trop-comb"}


@pytest.fixture
def broken_suite() -> Iterator[str]:
    """A throwaway suite that fails whenever its coin comes up 1."""

    @suite("coin-flip", "scratch", "fails on half of the draws")
    def check(s: Sampler, cfg: RunConfig) -> Trial:
        v = s.rng.randint(0, 1)
        return Trial(v == 0, {"v": v})

    yield "coin-flip"
    SUITES.pop("coin-flip")


###########
# Registry and selection
###########


class TestRegistry:
    def test_every_module_has_suites(self) -> None:
        assert {s.module for s in SUITES.values()} == MODULES

    def test_listing(self) -> None:
        listing = suite_listing()
        assert len(listing) == len(SUITES)
        assert {"suite": "grsk-local", "module": "grsk", "description": SUITES["grsk-local"].description} in listing

    def test_duplicate_names_are_rejected(self) -> None:
        with pytest.raises(ValueError):
            suite("grsk-local", "grsk", "again")(SUITES["grsk-local"].check)


class TestResolveSuites:
    def test_all(self) -> None:
        assert resolve_suites("all") == list(SUITES)

    def test_module_name(self) -> None:
        names = resolve_suites("exact-arith")
        assert names == ["semifield-axioms", "gmax-repeat"]

    def test_mixed_selector_without_repeats(self) -> None:
        assert resolve_suites("gmax-repeat, exact-arith") == ["gmax-repeat", "semifield-axioms"]

    def test_unknown_name(self) -> None:
        with pytest.raises(InputError):
            resolve_suites("grsk,Mount_Tyndall")


###########
# Configuration
###########


class TestRunConfig:
    def test_reads_the_test_section(self) -> None:
        cfg = load_run_config()
        assert cfg.seed == 7
        assert cfg.trials == 5
        assert cfg.m_max == 3

    def test_overrides_win(self) -> None:
        cfg = load_run_config(trials=2, seed=None, m_max=2)
        assert (cfg.trials, cfg.seed, cfg.m_max) == (2, 7, 2)

    def test_zero_workers_means_all_but_one_cpu(self) -> None:
        assert load_run_config(workers=0).workers >= 1

    @pytest.mark.parametrize(
        "kwargs",
        [{"trials": 0}, {"m_max": 7}, {"n_max": 0}, {"workers": 0}, {"batch_size": 0}, {"int_max": -1}],
    )
    def test_validation(self, kwargs: dict[str, int]) -> None:
        with pytest.raises(InputError):
            RunConfig(**kwargs)  # type: ignore[arg-type]


###########
# Harness
###########


def test_trials_are_reproducible() -> None:
    first = run_trial("grsk-local", CFG, 1)
    again = run_trial("grsk-local", CFG, 1)
    assert first == again
    assert first.seed != run_trial("grsk-local", CFG, 2).seed


@pytest.mark.parametrize(
    "name",
    [
        "semifield-axioms",
        "m-band",
        "crystal-axioms-matrix",
        "gt-decoration-law",
        "grsk-local",
        "grsk-inverse",
        "jacobi-trudi",
        "trop-oracle",
        "trop-cut",
    ],
)
def test_suites_pass(name: str) -> None:
    report = run_suite(name, CFG)
    assert report.passed, report.to_json()
    assert report.to_json() == {"suite": name, "trials": 3, "passed": 3, "failed": 0}


def test_workers_do_not_change_results() -> None:
    one = run_suite("grsk-transpose", CFG)
    two = run_suite("grsk-transpose", replace(CFG, workers=2))
    assert one == two


def test_run_suites_by_module() -> None:
    reports = run_suites("exact-arith", CFG)
    assert [r.name for r in reports] == ["semifield-axioms", "gmax-repeat"]
    assert all(r.passed for r in reports)


class TestFailures:
    def test_first_failure_is_reported(self, broken_suite: str) -> None:
        cfg = RunConfig(trials=20, batch_size=3)
        report = run_suite(broken_suite, cfg)
        assert 0 < report.failures < 20
        assert report.first_failure is not None
        doc = report.to_json()
        assert doc["failed"] == report.failures
        assert doc["passed"] == 20 - report.failures
        assert doc["first_failure"]["input"] == {"v": 1}
        assert doc["first_failure"]["trial"] == report.first_failure.trial

    def test_report_json_without_failures(self) -> None:
        report = SuiteReport("grsk-local", 4, 0)
        assert report.passed
        assert "first_failure" not in report.to_json()

    def test_errors_count_as_failures(self) -> None:
        report = SuiteReport("x", 1, 1, TrialOutcome(0, 11, False, {"error": "NonInvertible: 0"}))
        assert report.to_json()["first_failure"] == {"trial": 0, "seed": 11, "input": {"error": "NonInvertible: 0"}}
