"""complexrel: special relativity continued to complex-valued space-time.

The package takes one family of coordinate transforms,

    z' = s * (z - v*t) / sqrt(1 - v^2/c^2)
    t' = s * (t - (v/c^2)*z) / sqrt(1 - v^2/c^2)

and follows it through everything it touches when position, time, velocity,
the invariant speed and the gauge factor ``s`` are all allowed to be complex:
velocity addition and its fixed points at +/-c, momentum-energy transforms
carrying the reciprocal gauge, the gauged dispersion relation, plane waves
and their phase invariance, and the non-Hermitian Klein-Gordon, square-root
Schroedinger and Dirac equations built on top.

Layout:

``core``
    Unit systems, the principal square root with explicit branch handling,
    and numerically verified holomorphic derivatives.
``kinematics``
    Boosts (three invariant-speed modes), velocity addition, worldline
    time, the collinear 3D extension.
``dynamics``
    Momentum-energy transforms and the gauge-aware invariant mass.
``waves``
    Plane waves, (omega, k) extraction from field samples, de Broglie maps,
    wave-vector transforms.
``rqm``
    Dirac matrices, dispersion roots, plane-wave spinors, and
    finite-difference residuals on line grids through the complex plane.
``checks``
    Seeded identity suites covering all of the above.
``tables``
    Curve tabulation helpers.
``serialization``
    JSON/CSV conventions for complex values.
``service`` / ``cli``
    A FastAPI app exposing the handlers over HTTP, and a click CLI that
    runs the same handlers in process (or against a server with --server).
"""

from .core import (
    NATURAL,
    SI,
    PhysicalConstants,
    WirtingerResult,
    branch_proximity,
    constants_for,
    principal_sqrt,
    wirtinger_derivative,
)
from .dynamics import (
    FourMomentum,
    invariant_mass_sq,
    lp_forward,
    lp_inverse,
    momentum_energy_from_rest,
)
from .errors import (
    BranchCutWarning,
    BranchPointError,
    DefectiveEigenproblemError,
    DomainError,
    NodeError,
    NonHolomorphicError,
    SuperluminalWarning,
    VelocityPoleError,
)
from .kinematics import (
    Boost,
    BoostMode,
    Event,
    Event3,
    add_velocities,
    add_velocities_inverse,
    boost3d_forward,
    boost3d_inverse,
    boost_forward,
    boost_inverse,
    gamma_product,
    worldline_time,
)
from .rqm import (
    DIRAC,
    ComplexLineGrid,
    DiracMatrices,
    bilinear_square,
    build_dirac_matrices,
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
from .waves import (
    PlaneWave,
    WaveFourVector,
    de_broglie,
    de_broglie_inverse,
    evaluate_planewave,
    extract_omega_k,
    qhjt_momentum_energy,
    transform_wave,
    transform_wave_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "NATURAL",
    "SI",
    "PhysicalConstants",
    "WirtingerResult",
    "branch_proximity",
    "constants_for",
    "principal_sqrt",
    "wirtinger_derivative",
    "FourMomentum",
    "invariant_mass_sq",
    "lp_forward",
    "lp_inverse",
    "momentum_energy_from_rest",
    "BranchCutWarning",
    "BranchPointError",
    "DefectiveEigenproblemError",
    "DomainError",
    "NodeError",
    "NonHolomorphicError",
    "SuperluminalWarning",
    "VelocityPoleError",
    "Boost",
    "BoostMode",
    "Event",
    "Event3",
    "add_velocities",
    "add_velocities_inverse",
    "boost3d_forward",
    "boost3d_inverse",
    "boost_forward",
    "boost_inverse",
    "gamma_product",
    "worldline_time",
    "DIRAC",
    "ComplexLineGrid",
    "DiracMatrices",
    "bilinear_square",
    "build_dirac_matrices",
    "dirac_factorization_check",
    "dirac_hamiltonian",
    "dirac_plane_spinors",
    "dirac_residual_grid",
    "kgf_dispersion_roots",
    "kgf_residual_grid",
    "kgf_residual_planewave",
    "kgf_scalar",
    "nonrel_expansion",
    "schrodinger_sqrt_energy",
    "PlaneWave",
    "WaveFourVector",
    "de_broglie",
    "de_broglie_inverse",
    "evaluate_planewave",
    "extract_omega_k",
    "qhjt_momentum_energy",
    "transform_wave",
    "transform_wave_inverse",
    "__version__",
]
