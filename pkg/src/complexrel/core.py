"""Unit systems, branch-aware square roots and verified complex derivatives.

Everything downstream funnels its square roots through :func:`principal_sqrt`
so that branch handling lives in exactly one place.  The convention is the
principal branch: cut along the negative real axis, ``Re(sqrt(w)) >= 0``, and
on the cut itself the value continuous from above, ``sqrt(-r) = +i*sqrt(r)``
for ``r > 0``.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable

from .errors import BranchCutWarning, NonHolomorphicError

# Angular distance from the negative real axis below which an input counts
# as sitting on the branch cut.
BRANCH_CUT_ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class PhysicalConstants:
    """Invariant speed magnitude and reduced Planck constant for a unit system.

    ``c_mag`` is the *magnitude* of the invariant speed; individual boosts may
    place the speed anywhere on the circle ``|c| = c_mag`` in the complex
    plane.  ``units`` is either ``"si"`` or ``"natural"``; natural units pin
    both constants to exactly 1.
    """

    c_mag: float = 1.0
    hbar: float = 1.0
    units: str = "natural"

    def __post_init__(self):
        if self.units not in ("si", "natural"):
            raise ValueError(f"unknown unit system {self.units!r}")
        if not (math.isfinite(self.c_mag) and self.c_mag > 0):
            raise ValueError("c_mag must be finite and positive")
        if not (math.isfinite(self.hbar) and self.hbar > 0):
            raise ValueError("hbar must be finite and positive")
        if self.units == "natural" and (self.c_mag != 1.0 or self.hbar != 1.0):
            raise ValueError("natural units require c_mag = hbar = 1 exactly")


NATURAL = PhysicalConstants()
SI = PhysicalConstants(c_mag=299792458.0, hbar=1.054571726e-34, units="si")


def constants_for(units: str) -> PhysicalConstants:
    """Return the constant set for a unit-system name ("natural" or "si")."""
    if units == "natural":
        return NATURAL
    if units == "si":
        return SI
    raise ValueError(f"unknown unit system {units!r}")


def ensure_finite(value: complex, name: str = "value") -> complex:
    """Coerce to complex and reject NaN or infinite components."""
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z!r}")
    return z


def branch_proximity(w: complex) -> bool:
    """True when ``w`` lies within angular tolerance of the negative real axis.

    Zero is not near the cut (it is the branch point, handled separately by
    callers).  The test is symmetric in the sign of ``Im(w)`` so that points
    just below the cut are flagged as well.
    """
    w = complex(w)
    if w == 0:
        return False
    # math.atan2 instead of cmath.phase: some libms raise a range error in
    # the latter for subnormal components
    return abs(abs(math.atan2(w.imag, w.real)) - math.pi) < BRANCH_CUT_ANGLE_TOL


def principal_sqrt(w: complex) -> complex:
    """Principal-branch complex square root.

    Cut on the negative real axis; ``Re`` of the result is >= 0.  Negative
    real inputs take the value continuous from above the cut,
    ``principal_sqrt(-4) == 2j``, regardless of the sign of a zero imaginary
    part.  Inputs within :data:`BRANCH_CUT_ANGLE_TOL` of the cut emit a
    :class:`~complexrel.errors.BranchCutWarning` but still return a value.
    """
    w = ensure_finite(w, "sqrt argument")
    if w.imag == 0.0:
        # Collapse -0.0 so that the cut always resolves from above.
        w = complex(w.real, 0.0)
    if branch_proximity(w):
        warnings.warn(
            f"sqrt argument {w!r} is within {BRANCH_CUT_ANGLE_TOL:g} rad of "
            "the branch cut; result is branch sensitive",
            BranchCutWarning,
            stacklevel=2,
        )
    return cmath.sqrt(w)


# Directions for the derivative probe: real, imaginary, and the diagonal.
# Three distinct directions make the agreement test sensitive to any
# anti-holomorphic (d/dz-bar) component.
_DIRECTIONS = (1.0 + 0.0j, 0.0 + 1.0j, cmath.exp(0.25j * math.pi))


@dataclass(frozen=True)
class WirtingerResult:
    """A derivative estimate plus its internal consistency measure.

    ``value`` averages the three directional estimates; ``deviation`` is the
    largest pairwise distance between them.  For a holomorphic ``f`` the
    deviation shrinks as O(h^2); for anything with a d/dz-bar component it
    stays O(1) no matter how small the step.
    """

    value: complex
    deviation: float
    estimates: tuple[complex, complex, complex]


def wirtinger_derivative(
    f: Callable[[complex], complex],
    z0: complex,
    h: float = 1e-6,
    tol: float | None = None,
) -> WirtingerResult:
    """Estimate df/dz at ``z0`` by central differences along three directions.

    Each direction ``d`` contributes ``(f(z0 + h*d) - f(z0 - h*d)) / (2*h*d)``,
    which for holomorphic ``f`` all converge to the same derivative.  If
    ``tol`` is given and the estimates spread wider than it, raises
    :class:`~complexrel.errors.NonHolomorphicError` instead of returning.
    """
    if not (isinstance(h, (int, float)) and math.isfinite(h) and h > 0):
        raise ValueError("step h must be a positive real number")
    z0 = ensure_finite(z0, "z0")
    estimates = []
    for d in _DIRECTIONS:
        step = h * d
        estimates.append((f(z0 + step) - f(z0 - step)) / (2.0 * step))
    estimates = tuple(estimates)
    deviation = max(
        abs(a - b) for i, a in enumerate(estimates) for b in estimates[i + 1 :]
    )
    if tol is not None and deviation > tol:
        raise NonHolomorphicError(
            f"directional derivatives at {z0!r} disagree by {deviation:.3e} "
            f"(tol {tol:.3e}); f is not holomorphic there at this resolution",
            deviation,
        )
    value = sum(estimates) / len(estimates)
    return WirtingerResult(value=value, deviation=deviation, estimates=estimates)
