"""Tabulated curves for plotting and inspection.

Each generator returns a list of plain records (dict per row) with complex
values left as complex; the serialization layer decides between JSON objects
and paired CSV columns.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .core import NATURAL, PhysicalConstants
from .kinematics import Boost, BoostMode, worldline_time
from .rqm import kgf_dispersion_roots, nonrel_expansion, schrodinger_sqrt_energy

CURVES = ("worldline-time", "dispersion", "nonrel-error")


def _linspace(start: float, stop: float, n: int) -> np.ndarray:
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise ValueError("range endpoints must be finite")
    if stop < start:
        raise ValueError("range must satisfy start <= stop")
    if n < 1 or (n == 1 and stop != start):
        raise ValueError("need n >= 2 points for a nondegenerate range")
    return np.linspace(start, stop, n)


def worldline_time_table(
    start: float = 0.0,
    stop: float = 0.99,
    n: int = 100,
    mode: BoostMode = BoostMode.OPTION2,
    phase: float = 0.0,
    t: float = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> list[dict]:
    """Comoving time factor against |v|/c_mag.

    The velocity direction in the complex plane is ``phase``; option 2 gives
    the same (real, for ratio < 1) column for every phase, option 1 picks up
    an imaginary part as soon as the phase does.
    """
    direction = cmath.exp(1j * phase)
    rows = []
    for ratio in _linspace(start, stop, n):
        v = ratio * constants.c_mag * direction
        try:
            b = Boost(v=v, mode=mode, constants=constants)
        except ValueError:
            # Branch point (ratio exactly 1): no finite factor to report.
            rows.append({"v_ratio": float(ratio), "factor": None})
            continue
        rows.append(
            {"v_ratio": float(ratio), "factor": worldline_time(b, t) / t}
        )
    return rows


def dispersion_table(
    start: float = 0.0,
    stop: float = 5.0,
    n: int = 100,
    m0: complex = 1.0,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> list[dict]:
    """Both frequency branches against real k."""
    rows = []
    for k in _linspace(start, stop, n):
        plus, minus = kgf_dispersion_roots(float(k), m0, gauge_s, constants)
        rows.append({"k": float(k), "omega_plus": plus, "omega_minus": minus})
    return rows


def nonrel_error_table(
    start: float = 1e-3,
    stop: float = 1e-1,
    n: int = 100,
    m0: complex = 1.0,
    gauge_s: complex = 1.0,
    constants: PhysicalConstants = NATURAL,
) -> list[dict]:
    """Exact square-root energy, its expansion, and their absolute gap
    against real k (log-spaced when the range allows it)."""
    if start > 0 and stop >= start and n >= 2:
        ks = np.geomspace(start, stop, n)
    else:
        ks = _linspace(start, stop, n)
    rows = []
    for k in ks:
        exact = schrodinger_sqrt_energy(float(k), m0, gauge_s, constants)
        approx = nonrel_expansion(float(k), m0, gauge_s, constants)
        rows.append(
            {
                "k": float(k),
                "exact": exact,
                "expansion": approx,
                "abs_error": abs(exact - approx),
            }
        )
    return rows


def make_table(curve: str, **kwargs) -> list[dict]:
    if curve == "worldline-time":
        return worldline_time_table(**kwargs)
    if curve == "dispersion":
        return dispersion_table(**kwargs)
    if curve == "nonrel-error":
        return nonrel_error_table(**kwargs)
    raise ValueError(f"unknown curve {curve!r}")
