"""Momentum-energy transforms and the gauged dispersion relation.

(E, p) transforms with the reciprocal gauge of (z, t): the forward map
carries 1/s where the coordinate map carries s.  That way the phase
k*z - omega*t, and with it any de Broglie pairing, is gauge blind.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ensure_finite
from .kinematics import Boost


@dataclass(frozen=True)
class FourMomentum:
    """Energy-momentum pair (E, p), both complex, in a single frame."""

    E: complex
    p: complex


def lp_forward(b: Boost, fm: FourMomentum) -> FourMomentum:
    """Transform (E, p) into the moving frame.

    p' = (p - (v/c^2) E) / (s * sqrt(1 - v^2/c^2))
    E' = (E - v p)       / (s * sqrt(1 - v^2/c^2))
    """
    r = b.root
    s = b.gauge_s
    E = ensure_finite(fm.E, "E")
    p = ensure_finite(fm.p, "p")
    return FourMomentum(
        E=(E - b.v * p) / (s * r),
        p=(p - b.v_over_c2 * E) / (s * r),
    )


def lp_inverse(b: Boost, fm: FourMomentum) -> FourMomentum:
    """Inverse of :func:`lp_forward`: gauge s and velocity +v."""
    r = b.root
    s = b.gauge_s
    E = ensure_finite(fm.E, "E")
    p = ensure_finite(fm.p, "p")
    return FourMomentum(
        E=s * (E + b.v * p) / r,
        p=s * (p + b.v_over_c2 * E) / r,
    )


def momentum_energy_from_rest(m0: complex, b: Boost) -> FourMomentum:
    """Momentum and energy of a mass m0 at rest in the primed frame.

    Defined as the inverse transform of the rest pair (E', p') = (m0 c^2, 0),
    which lands on

        p = s * m0 * v   / sqrt(1 - v^2/c^2)
        E = s * m0 * c^2 / sqrt(1 - v^2/c^2)

    using the boost's own effective c^2 (so p c^2 / E = v in every mode).
    """
    m0 = ensure_finite(m0, "m0")
    rest = FourMomentum(E=m0 * b.c_squared, p=0.0)
    return lp_inverse(b, rest)


def invariant_mass_sq(
    fm: FourMomentum, gauge_s: complex = 1.0, c: complex = 1.0
) -> complex:
    """Squared rest mass read off a momentum-energy pair.

    m0^2 = (E^2 - p^2 c^2) / (s^2 c^4).  The combination E^2 - p^2 c^2 is
    frame invariant only up to the gauge: :func:`lp_inverse` with gauge s2
    scales it by s2^2 and :func:`lp_forward` by 1/s2^2.  Pass the pair's
    accumulated gauge -- starting at 1, multiplied by s2 per inverse step and
    divided per forward step; identically 1 along option-1/option-2 chains.
    """
    E = ensure_finite(fm.E, "E")
    p = ensure_finite(fm.p, "p")
    s = ensure_finite(gauge_s, "gauge_s")
    c = ensure_finite(c, "c")
    if s == 0 or c == 0:
        raise ValueError("gauge_s and c must be nonzero")
    c2 = c * c
    return (E * E - p * p * c2) / (s * s * c2 * c2)
