"""The ten acceptance criteria, one test each, at full sample counts.

Every test drives the same seeded suite the ``check`` subcommand exposes,
records its verdict for the terminal summary, and prints one pass/fail
line.  Tolerances and sample counts live inside the suites themselves.
"""

from conftest import ACCEPTANCE

from complexrel.checks import run_suite


def _criterion(num: int, label: str, suite: str) -> None:
    rep = run_suite(suite, seed=42)
    ACCEPTANCE[num] = (label, rep.passed)
    verdict = "PASS" if rep.passed else "FAIL"
    print(f"criterion {num} {label}: {verdict}")
    assert rep.passed, rep.as_dict()


def test_criterion_01_constant_fidelity():
    _criterion(1, "constant fidelity (SI c and hbar exact)", "constants")


def test_criterion_02_boost_roundtrip():
    _criterion(2, "boost inverse identity, all modes, 1e-11", "roundtrip")


def test_criterion_03_fixed_points():
    _criterion(3, "velocity addition fixes +/-c to 1e-12", "fixedpoints")


def test_criterion_04_phase_covariance():
    _criterion(4, "phase invariance 1e-11, naturality 1e-13", "phase")


def test_criterion_05_dispersion_invariance():
    _criterion(5, "invariant mass under transforms, 1e-11", "dispersion")


def test_criterion_06_dirac_algebra():
    _criterion(6, "Dirac algebra exact, H^2 scalar 1e-13", "dirac")


def test_criterion_07_spinor_consistency():
    _criterion(7, "spinors on shell 1e-11, eigenvalues +/-5", "spinor")


def test_criterion_08_grid_convergence():
    _criterion(8, "grid residual order 2.0 +/- 0.2", "kgf-grid")


def test_criterion_09_nonrelativistic_limit():
    _criterion(9, "expansion error slope 4 +/- 0.1, spot 5%", "nonrel")


def test_criterion_10_option2_reality():
    _criterion(10, "option-2 worldline time real to 1e-14", "option2-reality")
