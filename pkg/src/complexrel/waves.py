"""Plane waves on complex space-time and the maps between (omega, k) and (E, p).

A plane wave is psi(z, t) = amp * exp(i*(k*z - omega*t)) with every symbol
complex.  The phase k*z - omega*t is the pivot of the module: it is invariant
under a matched pair of coordinate and wave-vector transforms for any gauge,
because the two carry reciprocal gauge factors.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .core import NATURAL, PhysicalConstants, ensure_finite, wirtinger_derivative
from .dynamics import FourMomentum
from .errors import NodeError
from .kinematics import Boost, Event

# Amplitudes below this count as a node of the wave; log-derivatives there
# are dominated by rounding of the subnormal range.
NODE_THRESHOLD = 1e-300


@dataclass(frozen=True)
class WaveFourVector:
    """Angular frequency and wave number (omega, k), both complex."""

    omega: complex
    k: complex


@dataclass(frozen=True)
class PlaneWave:
    """amp * exp(i*(k*z - omega*t)) with complex amp, k, omega."""

    k: complex
    omega: complex
    amp: complex = 1.0 + 0.0j

    def __post_init__(self):
        ensure_finite(self.k, "k")
        ensure_finite(self.omega, "omega")
        if ensure_finite(self.amp, "amp") == 0:
            raise ValueError("plane wave amplitude must be nonzero")

    def __call__(self, z: complex, t: complex) -> complex:
        return evaluate_planewave(self, z, t)

    @property
    def wavevector(self) -> WaveFourVector:
        return WaveFourVector(omega=self.omega, k=self.k)


def evaluate_planewave(pw: PlaneWave, z: complex, t: complex) -> complex:
    z = ensure_finite(z, "z")
    t = ensure_finite(t, "t")
    return pw.amp * cmath.exp(1j * (pw.k * z - pw.omega * t))


def phase(wfv: WaveFourVector, event: Event) -> complex:
    """The scalar k*z - omega*t for one event; the gauge-blind invariant."""
    return wfv.k * event.z - wfv.omega * event.t


@dataclass(frozen=True)
class WaveExtraction:
    """(omega, k) recovered from field samples, with the worst holomorphy
    deviation seen by the two derivative probes."""

    wave: WaveFourVector
    deviation: float


def extract_omega_k(psi, z0: complex, t0: complex, h: float = 1e-5) -> WaveExtraction:
    """Read (omega, k) off any field via logarithmic derivatives.

    omega = +i * (d psi/dt) / psi   and   k = -i * (d psi/dz) / psi,
    both evaluated at (z0, t0).  Works on the derivative of psi itself, then
    divides by psi(z0, t0) -- no logarithm, so branch cuts of log play no
    role.  Raises :class:`~complexrel.errors.NodeError` when |psi| at the
    probe point is below :data:`NODE_THRESHOLD`.
    """
    center = psi(z0, t0)
    if abs(center) < NODE_THRESHOLD:
        raise NodeError(
            f"|psi({z0!r}, {t0!r})| = {abs(center):.3e} is a node; "
            "log-derivative undefined"
        )
    dz = wirtinger_derivative(lambda z: psi(z, t0), z0, h)
    dt = wirtinger_derivative(lambda t: psi(z0, t), t0, h)
    return WaveExtraction(
        wave=WaveFourVector(
            omega=1j * dt.value / center,
            k=-1j * dz.value / center,
        ),
        deviation=max(dz.deviation, dt.deviation) / abs(center),
    )


def de_broglie(wfv: WaveFourVector, constants: PhysicalConstants = NATURAL) -> FourMomentum:
    """(E, p) = hbar * (omega, k)."""
    return FourMomentum(
        E=constants.hbar * ensure_finite(wfv.omega, "omega"),
        p=constants.hbar * ensure_finite(wfv.k, "k"),
    )


def de_broglie_inverse(
    fm: FourMomentum, constants: PhysicalConstants = NATURAL
) -> WaveFourVector:
    """(omega, k) = (E, p) / hbar; exact inverse of :func:`de_broglie`."""
    return WaveFourVector(
        omega=ensure_finite(fm.E, "E") / constants.hbar,
        k=ensure_finite(fm.p, "p") / constants.hbar,
    )


def wavenumber_from_wavelength(wavelength: complex) -> complex:
    """k = 2*pi / lambda."""
    wavelength = ensure_finite(wavelength, "wavelength")
    if wavelength == 0:
        raise ValueError("wavelength must be nonzero")
    return 2.0 * cmath.pi / wavelength


def wavelength_from_wavenumber(k: complex) -> complex:
    """lambda = 2*pi / k."""
    k = ensure_finite(k, "k")
    if k == 0:
        raise ValueError("wave number must be nonzero")
    return 2.0 * cmath.pi / k


def frequency_from_omega(omega: complex) -> complex:
    """f = omega / (2*pi)."""
    return ensure_finite(omega, "omega") / (2.0 * cmath.pi)


def omega_from_frequency(f: complex) -> complex:
    """omega = 2*pi*f; exact inverse of :func:`frequency_from_omega`."""
    return 2.0 * cmath.pi * ensure_finite(f, "f")


def transform_wave(b: Boost, wfv: WaveFourVector) -> WaveFourVector:
    """(omega, k) in the moving frame; reciprocal gauge to the coordinate map.

    k'     = (k - (v/c^2) omega) / (s * sqrt(1 - v^2/c^2))
    omega' = (omega - v k)       / (s * sqrt(1 - v^2/c^2))
    """
    r = b.root
    s = b.gauge_s
    omega = ensure_finite(wfv.omega, "omega")
    k = ensure_finite(wfv.k, "k")
    return WaveFourVector(
        omega=(omega - b.v * k) / (s * r),
        k=(k - b.v_over_c2 * omega) / (s * r),
    )


def transform_wave_inverse(b: Boost, wfv: WaveFourVector) -> WaveFourVector:
    """Inverse of :func:`transform_wave`: gauge s and velocity +v."""
    r = b.root
    s = b.gauge_s
    omega = ensure_finite(wfv.omega, "omega")
    k = ensure_finite(wfv.k, "k")
    return WaveFourVector(
        omega=s * (omega + b.v * k) / r,
        k=s * (k + b.v_over_c2 * omega) / r,
    )


@dataclass(frozen=True)
class QhjtExtraction:
    """Local momentum and energy of a field, with the holomorphy deviation."""

    momentum: FourMomentum
    deviation: float


def qhjt_momentum_energy(
    psi,
    z0: complex,
    t0: complex,
    constants: PhysicalConstants = NATURAL,
    h: float = 1e-5,
) -> QhjtExtraction:
    """Local (E, p) of any field: hbar times the extracted (omega, k).

    For an exact plane wave this reproduces the de Broglie pair everywhere;
    for a general field it is the position-dependent quantum Hamilton-Jacobi
    momentum p(z, t) = -i*hbar * (d psi/dz)/psi and its energy partner.
    """
    extraction = extract_omega_k(psi, z0, t0, h=h)
    return QhjtExtraction(
        momentum=de_broglie(extraction.wave, constants),
        deviation=extraction.deviation,
    )
