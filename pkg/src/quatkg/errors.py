"""Exception types shared across the toolkit."""


class QuatKGError(Exception):
    """Base class for all toolkit errors."""


class DegenerateInput(QuatKGError):
    """Input for which the requested representation is undefined (e.g. polar angles of 0)."""


class BranchViolation(QuatKGError):
    """The evanescent branch m^2 - theta.theta < 0 was requested; only oscillatory solutions are supported."""


class ConstraintIncompatible(QuatKGError):
    """Two constraint equations cannot hold simultaneously for the given inputs.

    Attributes:
        which: short tag naming the conflicting relations, e.g. "e12 vs e13".
        residual: size of the violation.
    """

    def __init__(self, which, residual):
        super().__init__(f"incompatible constraints ({which}), residual {residual:.3e}")
        self.which = which
        self.residual = residual


class ZeroMass(QuatKGError):
    """The 1/m current normalization is undefined at m = 0; use unnormalized=True."""


class TrivialSolution(QuatKGError):
    """The requested configuration only admits the trivial (zero-momentum) solution."""


class DegenerateStep(QuatKGError):
    """Step matching is singular (beta = -1)."""


class ZeroIncidentFlux(QuatKGError):
    """Incident flux vanishes; reflection/transmission coefficients undefined."""
