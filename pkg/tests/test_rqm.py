"""Dirac algebra, dispersion roots, spinor construction, grid residuals."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from complexrel.core import NATURAL
from complexrel.rqm import (
    DIRAC,
    ComplexLineGrid,
    bilinear_square,
    dirac_factorization_check,
    dirac_hamiltonian,
    dirac_plane_spinors,
    dirac_residual_grid,
    kgf_dispersion_roots,
    kgf_residual_grid,
    kgf_residual_planewave,
    kgf_scalar,
    nonrel_expansion,
    schrodinger_sqrt_energy,
)
from complexrel.waves import PlaneWave

cnum = st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=5)
kvec = st.tuples(cnum, cnum, cnum)


class TestDiracAlgebra:
    def test_anticommutators_exact(self):
        for i in range(3):
            for j in range(3):
                anti = DIRAC.alpha[i] @ DIRAC.alpha[j] + DIRAC.alpha[j] @ DIRAC.alpha[i]
                want = 2.0 * np.eye(4) if i == j else np.zeros((4, 4))
                assert np.array_equal(anti, want)

    def test_beta_squares_to_identity(self):
        assert np.array_equal(DIRAC.beta @ DIRAC.beta, np.eye(4))

    def test_alpha_beta_anticommute(self):
        for a in DIRAC.alpha:
            assert np.array_equal(a @ DIRAC.beta + DIRAC.beta @ a, np.zeros((4, 4)))


class TestBilinearSquare:
    def test_scalar_means_z_component(self):
        assert bilinear_square(1 + 1j) == (1 + 1j) ** 2

    def test_no_conjugation(self):
        # isotropic vector: square vanishes even though the norm does not
        assert bilinear_square((1 + 0j, 1j, 0j)) == 0j

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            bilinear_square((1 + 0j, 2 + 0j))


class TestHamiltonian:
    @given(kvec, cnum, cnum.filter(lambda s: abs(s) > 0.01))
    @settings(max_examples=100, deadline=None)
    def test_square_is_scalar_identity(self, k, m0, s):
        H = dirac_hamiltonian(k, m0, gauge_s=s)
        scalar = bilinear_square(k) + (s * m0) ** 2  # natural units
        assert np.max(np.abs(H @ H - scalar * np.eye(4))) < 1e-12 * max(
            1.0, abs(scalar)
        )

    def test_non_hermitian_for_complex_mass(self):
        H = dirac_hamiltonian((0.5 + 0j, 0j, 0j), 1 - 0.5j)
        assert np.max(np.abs(H - H.conj().T)) > 0.1

    @given(kvec, cnum, cnum, cnum.filter(lambda s: abs(s) > 0.01))
    @settings(max_examples=100, deadline=None)
    def test_factorization_matches_scalar(self, k, omega, m0, s):
        product, scalar = dirac_factorization_check(k, omega, m0, gauge_s=s)
        scale = max(1.0, np.max(np.abs(product)), abs(scalar))
        assert np.max(np.abs(product - scalar * np.eye(4))) < 1e-12 * scale


class TestDispersionRoots:
    def test_rest_frequencies(self):
        wp, wm = kgf_dispersion_roots(0j, 1 + 0j)
        assert wp == 1 + 0j
        assert wm == -1 + 0j

    def test_reference_k3_m4(self):
        wp, wm = kgf_dispersion_roots((3 + 0j, 0j, 0j), 4 + 0j)
        assert abs(wp - 5) < 1e-14
        assert abs(wm + 5) < 1e-14

    @given(kvec, cnum, cnum.filter(lambda s: abs(s) > 0.01))
    @settings(max_examples=100, deadline=None)
    def test_principal_branch_and_on_shell(self, k, m0, s):
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            wp, wm = kgf_dispersion_roots(k, m0, gauge_s=s)
        assert wp.real >= 0.0
        assert wm == -wp
        for w in (wp, wm):
            r = kgf_scalar(w, k, m0, gauge_s=s)
            assert abs(r) < 1e-10 * max(1.0, abs(w) ** 2)

    def test_planewave_residual_on_shell(self):
        m0, s = 1.3 - 0.2j, 0.9 + 0.1j
        wp, _ = kgf_dispersion_roots(0.7 + 0.4j, m0, gauge_s=s)
        pw = PlaneWave(k=0.7 + 0.4j, omega=wp)
        assert abs(kgf_residual_planewave(pw, m0, gauge_s=s)) < 1e-14


class TestSpinors:
    def test_reference_eigenvalues(self):
        ret = dirac_plane_spinors((3 + 0j, 0j, 0j), 4 + 0j)
        adv = dirac_plane_spinors((3 + 0j, 0j, 0j), 4 + 0j, branch="advanced")
        assert all(abs(w - 5) < 1e-13 for w, _ in ret)
        assert all(abs(w + 5) < 1e-13 for w, _ in adv)

    def test_eigenvector_residuals(self):
        k, m0, s = (0.4 + 0.2j, -0.3j, 1.1 + 0j), 1.2 - 0.4j, 0.8 + 0.3j
        H = dirac_hamiltonian(k, m0, gauge_s=s)
        for w, u in dirac_plane_spinors(k, m0, gauge_s=s):
            assert np.linalg.norm(H @ u - w * u) < 1e-12 * np.linalg.norm(H)

    def test_deterministic_and_normalized(self):
        k, m0 = (0.5 + 0j, 0.1j, -0.7 + 0j), 2 - 1j
        a = dirac_plane_spinors(k, m0)
        b = dirac_plane_spinors(k, m0)
        for (wa, ua), (wb, ub) in zip(a, b):
            assert wa == wb
            assert np.array_equal(ua, ub)
            assert np.max(np.abs(ua)) == 1.0

    def test_independent_pair(self):
        k, m0 = (0.3 + 0j, 0j, 0.6 + 0j), 1.5 + 0j
        (_, u1), (_, u2) = dirac_plane_spinors(k, m0)
        m = np.stack([u1, u2])
        assert np.linalg.matrix_rank(m, tol=1e-8) == 2

    def test_rest_spinors_are_basis_vectors(self):
        (_, u1), (_, u2) = dirac_plane_spinors(0j, 1 + 0j)
        assert np.array_equal(u1, np.array([1, 0, 0, 0], dtype=complex))
        assert np.array_equal(u2, np.array([0, 1, 0, 0], dtype=complex))

    def test_massless_still_solvable(self):
        for w, u in dirac_plane_spinors((0j, 0j, 2 + 0j), 0j):
            assert abs(w - 2) < 1e-14
            H = dirac_hamiltonian((0j, 0j, 2 + 0j), 0j)
            assert np.linalg.norm(H @ u - w * u) < 1e-12 * np.linalg.norm(H)

    def test_cancelling_mass_and_momentum_rejected(self):
        # k.k = -1 meets s^2 m0^2 = 1: omega = 0, no branch to pick
        with pytest.raises(ValueError):
            dirac_plane_spinors((0j, 0j, 1j), 1 + 0j)


class TestLineGrid:
    def test_points_layout(self):
        g = ComplexLineGrid(z0=1 + 1j, theta=0.0, n=8, ds=0.5)
        pts = g.points
        assert len(pts) == 8
        assert pts[4] == 1 + 1j  # index n//2 sits at z0
        assert abs(pts[5] - (1.5 + 1j)) < 1e-15

    def test_rotated_direction(self):
        import math

        g = ComplexLineGrid(z0=0j, theta=math.pi / 2, n=8, ds=1.0)
        assert abs(g.direction - 1j) < 1e-15
        assert abs(g.points[5] - 1j) < 1e-15

    def test_validation(self):
        with pytest.raises(ValueError):
            ComplexLineGrid(z0=0j, theta=0.0, n=4, ds=0.1)
        with pytest.raises(ValueError):
            ComplexLineGrid(z0=0j, theta=0.0, n=8, ds=0.0)


class TestGridResiduals:
    def test_kgf_residual_shrinks_fourfold(self):
        m0, s, k = 1 + 0.2j, 0.9 + 0.3j, 1.3 + 0.4j
        wp, _ = kgf_dispersion_roots(k, m0, gauge_s=s)
        pw = PlaneWave(k=k, omega=wp)

        def worst(n, ds):
            g = ComplexLineGrid(z0=0.3 + 0.2j, theta=0.5, n=n, ds=ds)
            r = kgf_residual_grid(pw, g, t=0.4 + 0j, dt=ds / 2, m0=m0, gauge_s=s)
            return float(np.max(np.abs(r)))

        coarse, fine = worst(16, 0.2), worst(32, 0.1)
        assert 3.0 < coarse / fine < 5.5

    def test_dirac_residual_shrinks_fourfold(self):
        m0, s = 1 + 0.2j, 0.9 + 0.3j
        k3 = 1.3 + 0.4j
        pairs = dirac_plane_spinors((0j, 0j, k3), m0, gauge_s=s)
        omega, u = pairs[0]

        def psi(z, t):
            return u * np.exp(1j * (k3 * z - omega * t))

        def worst(n, ds):
            g = ComplexLineGrid(z0=0.3 + 0.2j, theta=0.5, n=n, ds=ds)
            r = dirac_residual_grid(psi, g, t=0.4 + 0j, dt=ds / 2, m0=m0, gauge_s=s)
            return float(np.max(np.abs(r)))

        coarse, fine = worst(16, 0.2), worst(32, 0.1)
        assert 3.0 < coarse / fine < 5.5

    def test_dirac_advanced_branch_conjugate_phase(self):
        # the lower-sign equation is solved by u exp(-i(kz - omega t))
        m0 = 1.5 + 0j
        k3 = 0.8 + 0j
        omega, u = dirac_plane_spinors((0j, 0j, k3), m0, branch="advanced")[0]

        def psi(z, t):
            return u * np.exp(-1j * (k3 * z - omega * t))

        g = ComplexLineGrid(z0=0j, theta=0.0, n=16, ds=0.05)
        r = dirac_residual_grid(
            psi, g, t=0j, dt=0.025, m0=m0, branch="advanced"
        )
        assert np.max(np.abs(r)) < 1e-3

    def test_dirac_standard_phase_fails_advanced_equation(self):
        # same eigenpair with the retarded phase leaves a 2|m| residual
        m0 = 1.5 + 0j
        k3 = 0.8 + 0j
        omega, u = dirac_plane_spinors((0j, 0j, k3), m0, branch="advanced")[0]

        def psi(z, t):
            return u * np.exp(1j * (k3 * z - omega * t))

        g = ComplexLineGrid(z0=0j, theta=0.0, n=16, ds=0.05)
        r = dirac_residual_grid(
            psi, g, t=0j, dt=0.025, m0=m0, branch="advanced"
        )
        assert np.max(np.abs(r)) > 1.0

    def test_dirac_rejects_scalar_field(self):
        g = ComplexLineGrid(z0=0j, theta=0.0, n=8, ds=0.1)
        with pytest.raises(ValueError):
            dirac_residual_grid(
                lambda z, t: 1 + 0j, g, t=0j, dt=0.05, m0=1 + 0j
            )

    def test_kgf_rejects_bad_dt(self):
        g = ComplexLineGrid(z0=0j, theta=0.0, n=8, ds=0.1)
        with pytest.raises(ValueError):
            kgf_residual_grid(
                lambda z, t: 0j, g, t=0j, dt=-0.1, m0=1 + 0j
            )


class TestNonRelLimit:
    def test_expansion_error_spot(self):
        # k = 0.1, m0 = 1: |exact - expansion| ~ k^4/8 = 1.25e-5 minus h.o.t.
        exact = schrodinger_sqrt_energy(0.1 + 0j, 1 + 0j)
        approx = nonrel_expansion(0.1 + 0j, 1 + 0j)
        err = abs(exact - approx)
        assert abs(err - 0.1**4 / 8) < 0.1**6

    def test_quartic_error_scaling(self):
        def err(k):
            return abs(
                schrodinger_sqrt_energy(k, 1 + 0j) - nonrel_expansion(k, 1 + 0j)
            )

        assert 15.0 < err(2e-2) / err(1e-2) < 17.0

    def test_gauge_in_expansion(self):
        s = 0.8 + 0.2j
        got = nonrel_expansion(0.05 + 0j, 2 + 0j, gauge_s=s)
        want = s * 2 + 0.05**2 / (2 * 2 * s)
        assert abs(got - want) < 1e-15

    def test_requires_mass_and_gauge(self):
        with pytest.raises(ValueError):
            nonrel_expansion(0.1 + 0j, 0j)
        with pytest.raises(ValueError):
            nonrel_expansion(0.1 + 0j, 1 + 0j, gauge_s=0j)

    def test_branches_mirror(self):
        r = schrodinger_sqrt_energy(0.3 + 0j, 1 + 0j)
        a = schrodinger_sqrt_energy(0.3 + 0j, 1 + 0j, branch="advanced")
        assert abs(r + a) < 1e-15
