"""Non-Hermitian relativistic wave equations: KGF, square-root form, Dirac.

Scalar sector
-------------
The gauged Klein-Gordon form reads

    (i*hbar d/dt)^2 psi = (-i*hbar*c)^2 d^2/dz^2 psi + s^2 (m0 c^2)^2 psi

with complex m0, gauge s and c real of magnitude c_mag; a plane wave solves
it iff (hbar*omega)^2 = (hbar*|k|*c)^2 + s^2 (m0 c^2)^2 where |k|^2 means the
bilinear square k.k (no conjugation), so omega comes in a retarded/advanced
pair from the principal square root.

Spinor sector
-------------
alpha_i and beta are the standard Dirac-basis matrices; the mass term is
s*beta*m0*c^2, which for complex m0 or s != 1 makes the Hamiltonian
non-Hermitian while leaving the square H^2 proportional to the identity.

Grids
-----
Finite-difference residuals are evaluated on straight lines z(sigma) = z0 +
exp(i*theta)*sigma through the complex plane; d/dz along the line is
exp(-i*theta) d/dsigma, so ordinary real-axis stencils apply verbatim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import NATURAL, PhysicalConstants, ensure_finite, principal_sqrt
from .errors import DefectiveEigenproblemError
from .waves import PlaneWave

I2 = np.eye(2, dtype=complex)

# Pauli matrices.
SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class DiracMatrices:
    """The Dirac-basis alpha vector and beta: alpha_i off-diagonal Pauli
    blocks, beta = diag(1, 1, -1, -1)."""

    alpha: tuple[np.ndarray, np.ndarray, np.ndarray]
    beta: np.ndarray


def build_dirac_matrices() -> DiracMatrices:
    zero = np.zeros((2, 2), dtype=complex)
    alpha = tuple(
        np.block([[zero, s], [s, zero]]) for s in SIGMA
    )
    beta = np.block([[I2, zero], [zero, -I2]])
    return DiracMatrices(alpha=alpha, beta=beta)


DIRAC = build_dirac_matrices()


def _wavevector(k) -> np.ndarray:
    """Accept a scalar k (meaning (0, 0, k)) or a complex 3-vector."""
    arr = np.asarray(k, dtype=complex)
    if arr.ndim == 0:
        return np.array([0.0, 0.0, complex(arr)])
    if arr.shape != (3,):
        raise ValueError("k must be a scalar or a 3-vector")
    return arr


def bilinear_square(k) -> complex:
    """k.k without conjugation; the square that enters every dispersion law."""
    kv = _wavevector(k)
    return complex(kv @ kv)


def kgf_scalar(
    omega: complex,
    k,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> complex:
    """(hbar*omega)^2 - (hbar*c)^2 k.k - s^2 (m0 c^2)^2; zero exactly on shell."""
    hbar, c = constants.hbar, constants.c_mag
    omega = ensure_finite(omega, "omega")
    m0 = ensure_finite(m0, "m0")
    s = ensure_finite(gauge_s, "gauge_s")
    return (
        (hbar * omega) ** 2
        - (hbar * c) ** 2 * bilinear_square(k)
        - (s * m0 * c * c) ** 2
    )


def kgf_dispersion_roots(
    k,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> tuple[complex, complex]:
    """Retarded and advanced frequencies (omega_plus, omega_minus).

    omega_plus = principal_sqrt((c^2 k.k) + s^2 (m0 c^2 / hbar)^2) and
    omega_minus = -omega_plus; the principal branch puts Re(omega_plus) >= 0.
    """
    hbar, c = constants.hbar, constants.c_mag
    m0 = ensure_finite(m0, "m0")
    s = ensure_finite(gauge_s, "gauge_s")
    radicand = c * c * bilinear_square(k) + (s * m0 * c * c / hbar) ** 2
    omega_plus = principal_sqrt(radicand)
    return omega_plus, -omega_plus


def kgf_residual_planewave(
    pw: PlaneWave,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> complex:
    """Exact (stencil-free) KGF residual scalar for a plane wave."""
    return kgf_scalar(pw.omega, pw.k, m0, gauge_s, constants)


@dataclass(frozen=True)
class ComplexLineGrid:
    """n equally spaced points along z = z0 + exp(i*theta) * (j - n//2) * ds."""

    z0: complex
    theta: float
    n: int
    ds: float

    def __post_init__(self):
        ensure_finite(self.z0, "z0")
        if not (isinstance(self.n, int) and self.n >= 8):
            raise ValueError("grid needs at least 8 points")
        if not (math.isfinite(self.ds) and self.ds > 0):
            raise ValueError("ds must be finite and positive")
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")

    @property
    def direction(self) -> complex:
        return complex(math.cos(self.theta), math.sin(self.theta))

    @property
    def points(self) -> np.ndarray:
        j = np.arange(self.n) - self.n // 2
        return self.z0 + self.direction * j * self.ds


def _sample(psi, pts: np.ndarray, t: complex) -> np.ndarray:
    return np.asarray([psi(z, t) for z in pts])


def kgf_residual_grid(
    psi,
    grid: ComplexLineGrid,
    t: complex,
    dt: float,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> np.ndarray:
    """Second-order KGF residual at the interior points of a line grid.

    Both second derivatives use three-point central stencils (three time
    levels t - dt, t, t + dt for d^2/dt^2); the spatial stencil runs along
    the grid line, picking up exp(-2i*theta).  Returns the length n-2
    residual vector; for exact solution samples it shrinks as O(max(ds, dt)^2).
    """
    if not (math.isfinite(dt) and dt > 0):
        raise ValueError("dt must be finite and positive")
    hbar, c = constants.hbar, constants.c_mag
    m0 = ensure_finite(m0, "m0")
    s = ensure_finite(gauge_s, "gauge_s")
    pts = grid.points
    mid = _sample(psi, pts, t)
    lo = _sample(psi, pts, t - dt)
    hi = _sample(psi, pts, t + dt)
    d2t = (hi - 2.0 * mid + lo) / dt**2
    d2z = (
        (mid[2:] - 2.0 * mid[1:-1] + mid[:-2])
        / grid.ds**2
        * grid.direction**-2
    )
    return (
        -(hbar**2) * d2t[1:-1]
        + (hbar * c) ** 2 * d2z
        - (s * m0 * c * c) ** 2 * mid[1:-1]
    )


def dirac_residual_grid(
    psi,
    grid: ComplexLineGrid,
    t: complex,
    dt: float,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
    branch: Literal["retarded", "advanced"] = "retarded",
) -> np.ndarray:
    """First-order Dirac residual for a 4-component field on a line grid.

    The equation checked is +/- i*hbar d/dt psi = (-/+ i*hbar*c alpha_3 d/dz
    + s*beta*m0*c^2) psi, upper signs for the retarded branch.  ``psi(z, t)``
    must return a length-4 array.  Central first differences in both z and t
    keep the truncation at O(max(ds, dt)^2).  Returns an (n-2, 4) array.

    Both sign choices reduce in momentum space to hbar*omega u = H(k) u, but
    with opposite phase conventions: u*exp(+i(k z - omega t)) solves the
    upper-sign equation and u*exp(-i(k z - omega t)) the lower-sign one, for
    any eigenpair of :func:`dirac_hamiltonian`.
    """
    if not (math.isfinite(dt) and dt > 0):
        raise ValueError("dt must be finite and positive")
    if branch not in ("retarded", "advanced"):
        raise ValueError(f"unknown branch {branch!r}")
    sign = 1.0 if branch == "retarded" else -1.0
    hbar, c = constants.hbar, constants.c_mag
    m0 = ensure_finite(m0, "m0")
    s = ensure_finite(gauge_s, "gauge_s")
    pts = grid.points
    mid = np.asarray([np.asarray(psi(z, t), dtype=complex) for z in pts])
    if mid.shape != (grid.n, 4):
        raise ValueError("psi must return 4-component values")
    lo = np.asarray([np.asarray(psi(z, t - dt), dtype=complex) for z in pts])
    hi = np.asarray([np.asarray(psi(z, t + dt), dtype=complex) for z in pts])
    d_t = (hi - lo) / (2.0 * dt)
    d_z = (mid[2:] - mid[:-2]) / (2.0 * grid.ds) / grid.direction
    alpha3 = DIRAC.alpha[2]
    mass = s * m0 * c * c
    lhs = sign * 1j * hbar * d_t[1:-1]
    rhs = (
        (-sign * 1j * hbar * c) * d_z @ alpha3.T
        + mass * mid[1:-1] @ DIRAC.beta.T
    )
    return lhs - rhs


def dirac_hamiltonian(
    k,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> np.ndarray:
    """H(k) = c*hbar*(alpha . k) + s*beta*m0*c^2 (non-Hermitian for complex
    m0 or s != 1); H^2 = ((hbar c)^2 k.k + s^2 (m0 c^2)^2) * identity."""
    hbar, c = constants.hbar, constants.c_mag
    kv = _wavevector(k)
    for ki in kv:
        ensure_finite(ki, "k component")
    m0 = ensure_finite(m0, "m0")
    s = ensure_finite(gauge_s, "gauge_s")
    kinetic = sum(ki * ai for ki, ai in zip(kv, DIRAC.alpha))
    return c * hbar * kinetic + s * m0 * c * c * DIRAC.beta


def dirac_factorization_check(
    k,
    omega: complex,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> tuple[np.ndarray, complex]:
    """Product of the two first-order factors against the KGF scalar.

    With D_-+ = beta*(hbar*omega - c*hbar*(alpha . k)) -+ s*m0*c^2, the
    product D_- D_+ equals the KGF scalar times the identity for every
    (omega, k), on shell or off.  Returns (D_- D_+, scalar) so callers can
    compare the two.
    """
    hbar, c = constants.hbar, constants.c_mag
    kv = _wavevector(k)
    omega = ensure_finite(omega, "omega")
    m0 = ensure_finite(m0, "m0")
    s = ensure_finite(gauge_s, "gauge_s")
    kinetic = sum(ki * ai for ki, ai in zip(kv, DIRAC.alpha))
    core = DIRAC.beta @ (hbar * omega * np.eye(4) - c * hbar * kinetic)
    mass = s * m0 * c * c * np.eye(4)
    product = (core - mass) @ (core + mass)
    scalar = kgf_scalar(omega, k, m0, gauge_s, constants)
    return product, scalar


# Residual tolerance for the constructed eigenvectors, relative to ||H||.
_SPINOR_RESIDUAL_TOL = 1e-11


def _normalize_spinor(u: np.ndarray) -> np.ndarray:
    idx = int(np.argmax(np.abs(u)))
    return u / u[idx]


def dirac_plane_spinors(
    k,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
    branch: Literal["retarded", "advanced"] = "retarded",
) -> list[tuple[complex, np.ndarray]]:
    """Two (omega, spinor) pairs solving H(k) u = hbar*omega u on one branch.

    Spinors come from the closed-form block solution: for eigenvalue E the
    two-spinor pair (phi, chi) satisfies chi = c*hbar*(sigma . k) phi /
    (E + s*m0*c^2) with phi free, or the mirrored relation phi =
    c*hbar*(sigma . k) chi / (E - s*m0*c^2) with chi free.  Whichever
    denominator is larger wins (ties go to the first); both vanish only at
    omega = 0, which is rejected up front.  The construction is
    deterministic: the free two-spinor runs over the standard basis e1, e2
    and each result is scaled so its largest component is exactly 1.  A
    residual check guards the output; failure raises
    :class:`~complexrel.errors.DefectiveEigenproblemError`.
    """
    if branch not in ("retarded", "advanced"):
        raise ValueError(f"unknown branch {branch!r}")
    hbar, c = constants.hbar, constants.c_mag
    kv = _wavevector(k)
    omega_plus, omega_minus = kgf_dispersion_roots(kv, m0, gauge_s, constants)
    omega = omega_plus if branch == "retarded" else omega_minus
    if omega == 0:
        raise ValueError(
            "k.k and the mass term cancel; omega = 0 carries no branch label"
        )
    H = dirac_hamiltonian(kv, m0, gauge_s, constants)
    E = hbar * omega
    mass = ensure_finite(gauge_s, "gauge_s") * ensure_finite(m0, "m0") * c * c
    sigma_k = sum(ki * si for ki, si in zip(kv, SIGMA))
    upper_first = abs(E + mass) >= abs(E - mass)
    pairs: list[tuple[complex, np.ndarray]] = []
    for basis in (np.array([1.0, 0.0], dtype=complex), np.array([0.0, 1.0], dtype=complex)):
        if upper_first:
            phi = basis
            chi = c * hbar * (sigma_k @ phi) / (E + mass)
        else:
            chi = basis
            phi = c * hbar * (sigma_k @ chi) / (E - mass)
        u = _normalize_spinor(np.concatenate([phi, chi]))
        residual = np.linalg.norm(H @ u - E * u)
        hnorm = np.linalg.norm(H)
        if residual > _SPINOR_RESIDUAL_TOL * max(hnorm, 1.0):
            raise DefectiveEigenproblemError(
                f"spinor residual {residual:.3e} exceeds tolerance at k = {kv!r}"
            )
        pairs.append((omega, u))
    return pairs


def schrodinger_sqrt_energy(
    k: complex,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
    branch: Literal["retarded", "advanced"] = "retarded",
) -> complex:
    """Energy of the square-root (one-branch) relativistic wave equation.

    E = +/- hbar*omega with omega from the KGF roots; the retarded branch
    takes omega_plus.  This is the exact value the expansion in
    :func:`nonrel_expansion` approximates.
    """
    omega_plus, omega_minus = kgf_dispersion_roots(k, m0, gauge_s, constants)
    omega = omega_plus if branch == "retarded" else omega_minus
    return constants.hbar * omega


def nonrel_expansion(
    k: complex,
    m0: complex,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> complex:
    """First two terms of the small-momentum expansion of the exact energy:

    E ~ s*m0*c^2 + (hbar*k)^2 / (2*m0*s).

    The gauge divides the kinetic term because the expansion parameter is
    (hbar*k) / (s*m0*c); the leading error is -(hbar*k)^4 / (8*s^3*m0^3*c^2).
    """
    hbar, c = constants.hbar, constants.c_mag
    k = ensure_finite(k, "k")
    m0 = ensure_finite(m0, "m0")
    s = ensure_finite(gauge_s, "gauge_s")
    if m0 == 0 or s == 0:
        raise ValueError("expansion requires nonzero m0 and gauge_s")
    return s * m0 * c * c + (hbar * k) ** 2 / (2.0 * m0 * s)
