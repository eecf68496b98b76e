"""Exception and warning types shared by every module.

Errors signal inputs on which the requested map is genuinely undefined
(branch points, poles, wave-function nodes).  Warnings flag inputs that are
merely delicate: the result is still returned, but downstream code can
surface the flag.
"""


class DomainError(ValueError):
    """Base class for inputs outside the mathematical domain of an operation."""


class BranchPointError(DomainError):
    """The boost is undefined because v^2 equals the squared invariant speed."""


class VelocityPoleError(DomainError):
    """Velocity addition hit the pole of the Moebius map (zero denominator)."""


class NodeError(DomainError):
    """Wave amplitude below the node threshold; the log-derivative blows up."""


class NonHolomorphicError(DomainError):
    """Directional derivative estimates disagree beyond the caller's tolerance."""

    def __init__(self, message: str, deviation: float):
        super().__init__(message)
        self.deviation = deviation


class DefectiveEigenproblemError(DomainError):
    """Constructed eigenvector fails its residual check; matrix is defective."""


class BranchCutWarning(UserWarning):
    """Input lies within angular tolerance of the square-root branch cut."""


class SuperluminalWarning(UserWarning):
    """|v| exceeds the invariant speed magnitude where a real-valued result
    was expected; the returned value has picked up an imaginary part."""
