"""Exception types raised by the geometry and quadrature layers."""


class ConicError(ValueError):
    """Base class for invalid geometric input."""


class NegativeEccentricity(ConicError):
    pass


class NonFinite(ConicError):
    pass


class NonPositiveInput(ConicError):
    pass


class InfeasibleSagitta(ConicError):
    """The sagitta is too large for an arc of the requested eccentricity."""


class ParabolaHasNoCentre(ConicError):
    pass


class OutOfAngularRange(ConicError):
    pass


class AsymptoteDomain(ConicError):
    pass


class DegenerateSampleCount(ConicError):
    pass


class WrongClass(ConicError):
    pass


class QuadratureNonConvergence(RuntimeError):
    """Error estimate still above tolerance after the subdivision budget."""
