"""Tests for the shared numeric substrate: roots, constants, Wirtinger probes."""

import cmath
import math
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from complexrel.core import (
    NATURAL,
    SI,
    BranchCutWarning,
    PhysicalConstants,
    WirtingerResult,
    branch_proximity,
    constants_for,
    ensure_finite,
    principal_sqrt,
    wirtinger_derivative,
)
from complexrel.errors import NonHolomorphicError

finite_complex = st.complex_numbers(
    allow_nan=False, allow_infinity=False, max_magnitude=1e6
)


class TestPrincipalSqrt:
    def test_frozen_value(self):
        # independently computed at 40 digits, truncated to double
        got = principal_sqrt(1.07 - 0.24j)
        want = 1.0408135303629237 - 0.11529442738715831j
        assert abs(got - want) < 5e-16

    def test_negative_real_gives_positive_imaginary(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BranchCutWarning)
            assert principal_sqrt(-4 + 0j) == 2j
            assert principal_sqrt(-9 + 0j) == 3j

    def test_negative_zero_imaginary_collapsed(self):
        # -4 - 0j sits on the cut; the root must come from above, not below
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BranchCutWarning)
            below = principal_sqrt(complex(-4.0, -0.0))
        assert below == 2j
        # cmath alone would have returned -2j here
        assert cmath.sqrt(complex(-4.0, -0.0)) == -2j

    def test_warns_near_cut(self):
        with pytest.warns(BranchCutWarning):
            principal_sqrt(-1 + 0j)
        with pytest.warns(BranchCutWarning):
            principal_sqrt(complex(-2.5, -0.0))

    def test_no_warning_away_from_cut(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error", BranchCutWarning)
            principal_sqrt(4 + 0j)
            principal_sqrt(1 + 1j)
            principal_sqrt(-1 + 0.5j)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            principal_sqrt(complex(float("nan"), 0.0))
        with pytest.raises(ValueError):
            principal_sqrt(complex(float("inf"), 1.0))

    @given(finite_complex)
    @settings(max_examples=200, deadline=None)
    def test_square_recovers_input(self, w):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BranchCutWarning)
            r = principal_sqrt(w)
        assert abs(r * r - w) <= 1e-12 * max(1.0, abs(w))

    @given(finite_complex)
    @settings(max_examples=200, deadline=None)
    def test_nonnegative_real_part(self, w):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BranchCutWarning)
            r = principal_sqrt(w)
        assert r.real >= 0.0


class TestBranchProximity:
    def test_on_cut(self):
        assert branch_proximity(-1 + 0j)
        assert branch_proximity(complex(-3.0, -0.0))

    def test_off_cut(self):
        assert not branch_proximity(1 + 0j)
        assert not branch_proximity(-1 + 0.1j)
        assert not branch_proximity(1j)

    def test_origin_is_not_near_cut(self):
        # the origin is the branch point, reported separately
        assert not branch_proximity(0j)


class TestConstants:
    def test_natural_defaults(self):
        assert NATURAL.c_mag == 1.0
        assert NATURAL.hbar == 1.0
        assert NATURAL.units == "natural"

    def test_si_values(self):
        assert SI.c_mag == 299792458.0
        assert SI.hbar == 1.054571726e-34

    def test_constants_for(self):
        assert constants_for("natural") is NATURAL
        assert constants_for("si") is SI
        with pytest.raises(ValueError):
            constants_for("imperial")

    def test_natural_requires_unit_values(self):
        with pytest.raises(ValueError):
            PhysicalConstants(c_mag=2.0, hbar=1.0, units="natural")

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            PhysicalConstants(c_mag=0.0, hbar=1.0, units="si")
        with pytest.raises(ValueError):
            PhysicalConstants(c_mag=1.0, hbar=-1.0, units="si")

    def test_frozen(self):
        with pytest.raises(AttributeError):
            NATURAL.c_mag = 2.0


class TestEnsureFinite:
    def test_passes_through(self):
        assert ensure_finite(1.5 + 0.5j, "x") == 1.5 + 0.5j
        assert ensure_finite(2.0, "x") == 2.0

    def test_rejects(self):
        with pytest.raises(ValueError, match="velocity"):
            ensure_finite(complex(float("nan"), 0.0), "velocity")
        with pytest.raises(ValueError):
            ensure_finite(float("inf"), "t")


class TestWirtinger:
    def test_exact_on_linear(self):
        r = wirtinger_derivative(lambda w: (2 - 1j) * w + 3j, 0.7 + 0.2j)
        assert abs(r.value - (2 - 1j)) < 1e-9
        assert r.deviation < 1e-9

    def test_cubic_derivative(self):
        z0 = 0.5 + 0.3j
        r = wirtinger_derivative(lambda w: w**3, z0)
        assert abs(r.value - 3 * z0**2) < 1e-9
        assert r.deviation < 1e-9

    def test_conjugate_detected(self):
        r = wirtinger_derivative(lambda w: w.conjugate(), 0j, h=1e-5)
        # directional estimates are 1, -1, -i; max pairwise spread is 2
        assert abs(r.deviation - 2.0) < 1e-9
        assert len(r.estimates) == 3

    def test_tol_raises_for_nonholomorphic(self):
        with pytest.raises(NonHolomorphicError) as exc:
            wirtinger_derivative(lambda w: abs(w) ** 2, 1 + 1j, tol=1e-6)
        assert exc.value.deviation > 1e-6

    def test_tol_passes_for_holomorphic(self):
        r = wirtinger_derivative(cmath.exp, 0.2 + 0.1j, tol=1e-6)
        assert abs(r.value - cmath.exp(0.2 + 0.1j)) < 1e-8

    def test_second_order_truncation(self):
        # for exp the deviation shrinks ~h^2: quartering h cuts it ~16x
        z0 = 0.3 + 0.4j
        d1 = wirtinger_derivative(cmath.exp, z0, h=1e-3).deviation
        d2 = wirtinger_derivative(cmath.exp, z0, h=2.5e-4).deviation
        ratio = d1 / d2
        assert 10.0 < ratio < 22.0

    def test_result_is_named(self):
        r = wirtinger_derivative(lambda w: w, 0j)
        assert isinstance(r, WirtingerResult)
        assert r.value == pytest.approx(1.0)
