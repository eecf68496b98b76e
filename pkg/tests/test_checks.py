"""The randomized identity suites: determinism, reporting, pass behavior.

Suites run here at reduced sample counts; the full-size runs live in
test_acceptance.py.
"""

import math

import pytest

from complexrel.checks import (
    DEFAULT_SAMPLES,
    SUITES,
    CheckReport,
    IdentityResult,
    run_all,
    run_suite,
)

FAST_SAMPLES = {
    "constants": 0,
    "roundtrip": 200,
    "fixedpoints": 200,
    "phase": 200,
    "dispersion": 200,
    "dirac": 60,
    "spinor": 60,
    "kgf-grid": 3,
    "nonrel": 9,
    "option2-reality": 200,
    "composition": 200,
}


class TestIdentityResult:
    def test_pass_fail_edge(self):
        assert IdentityResult("x", 10, 1e-12, 1e-11).passed
        assert not IdentityResult("x", 10, 1e-10, 1e-11).passed

    def test_nan_fails(self):
        assert not IdentityResult("x", 10, float("nan"), 1e-11).passed

    def test_as_dict(self):
        d = IdentityResult("name", 3, 0.5, 1.0).as_dict()
        assert d == {
            "name": "name",
            "samples": 3,
            "max_deviation": 0.5,
            "tolerance": 1.0,
            "passed": True,
        }


class TestReports:
    def test_report_aggregates(self):
        ok = IdentityResult("a", 1, 0.0, 1.0)
        bad = IdentityResult("b", 1, 2.0, 1.0)
        assert CheckReport("s", 0, [ok]).passed
        assert not CheckReport("s", 0, [ok, bad]).passed

    def test_notes_carried(self):
        rep = CheckReport("s", 0, [], notes=["measured things"])
        assert rep.as_dict()["notes"] == ["measured things"]


@pytest.mark.parametrize("suite", list(SUITES))
class TestSuitesPass:
    def test_passes_at_reduced_samples(self, suite):
        rep = run_suite(suite, seed=42, samples=FAST_SAMPLES[suite])
        assert rep.passed, rep.as_dict()

    def test_deterministic_for_seed(self, suite):
        a = run_suite(suite, seed=7, samples=FAST_SAMPLES[suite])
        b = run_suite(suite, seed=7, samples=FAST_SAMPLES[suite])
        assert a.as_dict() == b.as_dict()


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("perpetual-motion")

    def test_default_samples_registered(self):
        assert set(DEFAULT_SAMPLES) == set(SUITES)

    def test_seed_changes_deviations(self):
        a = run_suite("roundtrip", seed=1, samples=300)
        b = run_suite("roundtrip", seed=2, samples=300)
        da = [r.max_deviation for r in a.results]
        db = [r.max_deviation for r in b.results]
        assert da != db

    def test_si_units_supported(self):
        rep = run_suite("roundtrip", seed=42, samples=100, units="si")
        assert rep.passed, rep.as_dict()

    def test_fixedpoints_si(self):
        rep = run_suite("fixedpoints", seed=42, samples=100, units="si")
        assert rep.passed, rep.as_dict()


class TestRunAll:
    def test_covers_every_suite(self, monkeypatch):
        # tiny counts: this exercises the aggregation path, not the physics
        import complexrel.checks as checks

        monkeypatch.setattr(checks, "DEFAULT_SAMPLES", FAST_SAMPLES)
        reports = run_all(seed=3)
        assert [r.suite for r in reports] == list(SUITES)
