"""Typed errors raised by the design, solver and analysis paths.

Input-validation problems raise plain ``ValueError``; everything that is a
property of the geometry or of the numerics raises one of these, so the
CLI can map them to its infeasible/non-convergent exit code.
"""


class CrossSecError(Exception):
    """Base class for all crosssec-specific errors."""


class InfeasibleSpec(CrossSecError):
    """A design spec violates at least one feasibility condition.

    Attributes:
        violations: Names of the violated conditions, e.g. ``("w > H_s",)``.
    """

    def __init__(self, violations, message=None):
        self.violations = tuple(violations)
        if message is None:
            message = "infeasible spec: " + "; ".join(self.violations)
        super().__init__(message)


class DomainError(CrossSecError):
    """An input lies outside the mathematical domain of a closed form."""


class NonpositiveTension(CrossSecError):
    """Membrane tension must be positive for curvature to be defined."""


class SolverError(CrossSecError):
    """Base class for root-finder failures.

    Attributes:
        channel: ``"center"`` or ``"side"`` when the failure is attributable
            to one channel's solve, else ``None``.
    """

    def __init__(self, message, channel=None):
        self.channel = channel
        if channel is not None:
            message = f"{channel} channel: {message}"
        super().__init__(message)


class NoBracket(SolverError):
    """The residual has no sign change over the search interval."""


class NonConvergence(SolverError):
    """The root finder exhausted max_iter before meeting tolerance."""


class DegeneratePolygon(CrossSecError):
    """Polygon unusable for area computation (non-positive area or
    self-intersecting boundary)."""


class OracleMismatch(CrossSecError):
    """The brute-force area maximum disagrees with the analytic root by
    more than one grid step; signals a bug, not a user error."""
