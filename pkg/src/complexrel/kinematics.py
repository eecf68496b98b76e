"""Boosts between inertial frames with complex relative velocity.

The transform pair implemented here is

    z' = s * (z - v*t) / sqrt(1 - v^2/c^2)
    t' = s * (t - (v/c^2)*z) / sqrt(1 - v^2/c^2)

with a free gauge factor ``s`` multiplying both rows (the inverse carries
``1/s``).  Positions, times, velocities and the invariant speed itself are
all complex.  Three modes fix how the invariant speed enters:

* ``OPTION1`` -- c is real, c = +/- c_mag.  Only c^2 = c_mag^2 appears, so
  both signs give one transform.  Gauge locked to s = 1.
* ``OPTION2`` -- c points along v, so v/c^2 becomes conj(v)/c_mag^2 and the
  radicand 1 - |v/c|^2 is real.  Gauge locked to s = 1.  Time dilation along
  a comoving worldline is real for |v| < c_mag.
* ``GENERAL`` -- c is any point on the circle |c| = c_mag; s is free.

All three run through one code path: a boost exposes its effective squared
invariant speed ``c_squared`` and the coefficient ``v_over_c2`` that
multiplies z in the time row, and the transform equations above never branch
on mode.  For OPTION2 that works because conj(v)/c_mag^2 = v/(c_mag^2 *
v^2/|v|^2), i.e. option 2 is the general transform at c^2 = c_mag^2 *
v^2/|v|^2.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .core import (
    NATURAL,
    PhysicalConstants,
    branch_proximity,
    ensure_finite,
    principal_sqrt,
)
from .errors import BranchPointError, SuperluminalWarning, VelocityPoleError

# Relative slack when checking |c| = c_mag and unit-vector normalization.
_UNIT_TOL = 1e-12


class BoostMode(Enum):
    OPTION1 = "option1"
    OPTION2 = "option2"
    GENERAL = "general"


@dataclass(frozen=True)
class Event:
    """A space-time point: complex position ``z`` and complex time ``t``."""

    z: complex
    t: complex


@dataclass(frozen=True)
class Event3:
    """Collinear 3D event: complex position 3-vector plus complex time."""

    z: tuple[complex, complex, complex]
    t: complex


def gamma_product(v: complex, c: complex) -> complex:
    """The product gamma * gamma_bar = 1 / (1 - v^2/c^2).

    ``gamma`` and its conjugate-velocity partner ``gamma_bar`` are not
    individually holomorphic in v, but their product is, and it is the only
    combination the transforms need.  Raises
    :class:`~complexrel.errors.BranchPointError` at v^2 = c^2.
    """
    v = ensure_finite(v, "v")
    c = ensure_finite(c, "c")
    if c == 0:
        raise ValueError("invariant speed must be nonzero")
    radicand = 1.0 - (v / c) ** 2
    if radicand == 0:
        raise BranchPointError(f"v = {v!r} sits at the branch point v^2 = c^2")
    return 1.0 / radicand


@dataclass(frozen=True)
class Boost:
    """A boost with complex velocity ``v``, mode, gauge and unit system.

    ``c`` is only meaningful in GENERAL mode, where it may sit anywhere on
    the circle ``|c| = c_mag``; omitted it defaults to the real point
    ``+c_mag``.  OPTION1 and OPTION2 pin the gauge to exactly 1 and do not
    accept an explicit ``c``.

    Construction validates the velocity against the branch point v^2 = c^2
    (hard error) and, in OPTION2, against the superluminal region
    ``|v| > c_mag`` (warning only; the transform stays well defined but
    comoving time dilation turns imaginary).
    """

    v: complex
    mode: BoostMode = BoostMode.OPTION1
    gauge_s: complex = 1.0 + 0.0j
    c: complex | None = None
    constants: PhysicalConstants = field(default=NATURAL)

    def __post_init__(self):
        object.__setattr__(self, "v", ensure_finite(self.v, "v"))
        object.__setattr__(self, "gauge_s", ensure_finite(self.gauge_s, "gauge_s"))
        if self.mode in (BoostMode.OPTION1, BoostMode.OPTION2):
            if self.gauge_s != 1:
                raise ValueError(f"{self.mode.value} fixes the gauge to s = 1")
            if self.c is not None:
                raise ValueError(
                    f"{self.mode.value} determines c itself; pass c only in "
                    "general mode"
                )
        else:
            if self.gauge_s == 0:
                raise ValueError("gauge factor must be nonzero")
            c = self.c if self.c is not None else complex(self.constants.c_mag)
            c = ensure_finite(c, "c")
            c_mag = self.constants.c_mag
            if abs(abs(c) - c_mag) > _UNIT_TOL * c_mag:
                raise ValueError(
                    f"|c| = {abs(c)!r} is off the invariant circle |c| = {c_mag!r}"
                )
            object.__setattr__(self, "c", c)
        if self.radicand == 0:
            raise BranchPointError(
                f"v = {self.v!r} sits at the branch point v^2 = c^2"
            )
        if self.mode is BoostMode.OPTION2 and abs(self.v) > self.constants.c_mag:
            warnings.warn(
                f"|v| = {abs(self.v):.6g} exceeds c_mag = {self.constants.c_mag:.6g}; "
                "option-2 comoving time factor is imaginary",
                SuperluminalWarning,
                stacklevel=2,
            )

    @property
    def c_squared(self) -> complex:
        """Effective squared invariant speed entering the transform."""
        c_mag = self.constants.c_mag
        if self.mode is BoostMode.OPTION1:
            return complex(c_mag * c_mag)
        if self.mode is BoostMode.OPTION2:
            if self.v == 0:
                return complex(c_mag * c_mag)
            return c_mag * c_mag * self.v * self.v / abs(self.v) ** 2
        return self.c * self.c

    @property
    def v_over_c2(self) -> complex:
        """Coefficient of z in the time row, v/c^2 (conj(v)/c_mag^2 in OPTION2)."""
        if self.mode is BoostMode.OPTION2:
            return self.v.conjugate() / self.constants.c_mag**2
        return self.v / self.c_squared

    @property
    def radicand(self) -> complex:
        """1 - v^2/c^2; real in OPTION2, complex otherwise."""
        if self.mode is BoostMode.OPTION2:
            return complex(1.0 - (abs(self.v) / self.constants.c_mag) ** 2)
        return 1.0 - self.v * self.v / self.c_squared

    @property
    def root(self) -> complex:
        """Principal square root of the radicand (warns near the cut)."""
        return principal_sqrt(self.radicand)

    @property
    def gamma_gamma_bar(self) -> complex:
        """gamma * gamma_bar = 1/radicand for this boost."""
        return 1.0 / self.radicand

    @property
    def near_branch_cut(self) -> bool:
        """True when the radicand sits close enough to the cut to be fragile."""
        return branch_proximity(self.radicand)


def boost_forward(b: Boost, event: Event) -> Event:
    """Map an event from the rest frame into the frame moving at ``b.v``."""
    r = b.root
    s = b.gauge_s
    z = ensure_finite(event.z, "z")
    t = ensure_finite(event.t, "t")
    return Event(
        z=s * (z - b.v * t) / r,
        t=s * (t - b.v_over_c2 * z) / r,
    )


def boost_inverse(b: Boost, event: Event) -> Event:
    """Inverse of :func:`boost_forward`: gauge ``1/s`` and velocity ``+v``."""
    r = b.root
    s = b.gauge_s
    z = ensure_finite(event.z, "z")
    t = ensure_finite(event.t, "t")
    return Event(
        z=(z + b.v * t) / (s * r),
        t=(t + b.v_over_c2 * z) / (s * r),
    )


def add_velocities(u: complex, b: Boost) -> complex:
    """Velocity of a particle as seen from the boosted frame.

    u' = (u - v) / (1 - (v/c^2) u), the Moebius map induced by the boost on
    velocities (any gauge cancels in the ratio z'/t').  Raises
    :class:`~complexrel.errors.VelocityPoleError` on a vanishing denominator.
    """
    u = ensure_finite(u, "u")
    denom = 1.0 - b.v_over_c2 * u
    if denom == 0:
        raise VelocityPoleError(
            f"u = {u!r} maps to the pole of the velocity-addition map for v = {b.v!r}"
        )
    return (u - b.v) / denom


def add_velocities_inverse(u_prime: complex, b: Boost) -> complex:
    """Inverse velocity addition: u = (u' + v) / (1 + (v/c^2) u')."""
    u_prime = ensure_finite(u_prime, "u_prime")
    denom = 1.0 + b.v_over_c2 * u_prime
    if denom == 0:
        raise VelocityPoleError(
            f"u' = {u_prime!r} maps to the pole of the inverse addition map "
            f"for v = {b.v!r}"
        )
    return (u_prime + b.v) / denom


def worldline_time(b: Boost, t: complex) -> complex:
    """Transformed time along the comoving worldline z = v*t.

    Substituting z = v*t collapses both rows to t' = s * t * sqrt(1 -
    v^2/c^2).  In OPTION2 the radicand is real, so t' is real for real t
    when |v| < c_mag; past that the factor turns imaginary and a
    :class:`~complexrel.errors.SuperluminalWarning` is emitted.
    """
    t = ensure_finite(t, "t")
    result = b.gauge_s * t * b.root
    if b.mode is BoostMode.OPTION2 and b.radicand.real < 0:
        warnings.warn(
            "comoving time factor is imaginary for |v| > c_mag",
            SuperluminalWarning,
            stacklevel=2,
        )
    return result


def _unit_direction(direction) -> np.ndarray:
    n = np.asarray(direction, dtype=complex)
    if n.shape != (3,):
        raise ValueError("direction must be a 3-vector")
    # Bilinear (non-conjugating) normalization: n.n = 1, not |n| = 1.
    norm_sq = n @ n
    if abs(norm_sq - 1.0) > _UNIT_TOL:
        raise ValueError(f"direction is not bilinear-normalized: n.n = {norm_sq!r}")
    return n


def _split_collinear(b: Boost, event: Event3, direction) -> tuple:
    if b.mode is BoostMode.OPTION2:
        raise ValueError(
            "option 2 couples the transform to conj(v) and does not extend "
            "to the collinear 3D form; use option 1 or general mode"
        )
    n = _unit_direction(direction)
    zvec = np.asarray(
        [ensure_finite(zi, "z component") for zi in event.z], dtype=complex
    )
    z_par = zvec @ n
    z_perp = zvec - z_par * n
    return n, z_par, z_perp


def boost3d_forward(b: Boost, direction, event: Event3) -> Event3:
    """Boost along a bilinear-unit complex direction; transverse part rides along.

    The component z.n and the time transform exactly as the 1D pair; the
    transverse remainder is untouched.  OPTION2 is rejected because its
    conjugated time row does not decompose this way.
    """
    n, z_par, z_perp = _split_collinear(b, event, direction)
    flat = boost_forward(b, Event(z=z_par, t=event.t))
    zvec = z_perp + flat.z * n
    return Event3(z=tuple(zvec), t=flat.t)


def boost3d_inverse(b: Boost, direction, event: Event3) -> Event3:
    """Inverse of :func:`boost3d_forward` with the same direction vector."""
    n, z_par, z_perp = _split_collinear(b, event, direction)
    flat = boost_inverse(b, Event(z=z_par, t=event.t))
    zvec = z_perp + flat.z * n
    return Event3(z=tuple(zvec), t=flat.t)
