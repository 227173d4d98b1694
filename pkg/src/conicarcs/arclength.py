"""Arc lengths of symmetric conic arcs.

The primary route integrates the focus-centred polar form,

    c = integral_{-beta}^{beta} sqrt(r^2 + r'^2) dtheta
      = p * integral_{-beta}^{beta} sqrt(1 + 2 e cos(theta) + e^2)
                                    / (1 + e cos(theta))^2 dtheta,

so the chord length factors out completely: c = g(e, k) * l.  The integral
has no elementary antiderivative in general, hence adaptive quadrature; the
circle and parabola do have elementary closed forms, kept here as independent
oracles, together with a brute-force polyline length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .conic import ConicArc, ConicClass, _check_feasible, construct_arc, sample_points
from .errors import QuadratureNonConvergence, WrongClass

__all__ = [
    "QuadratureSettings",
    "ArcLengthResult",
    "arc_length",
    "closed_form_circle",
    "closed_form_parabola",
    "polyline_length",
    "g_factor",
]


@dataclass(frozen=True)
class QuadratureSettings:
    rel_tol: float = 1e-12
    abs_tol: float = 0.0
    max_subdivisions: int = 60

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0.0):
            raise ValueError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.abs_tol < 0.0:
            raise ValueError(f"abs_tol must be >= 0, got {self.abs_tol}")
        if self.max_subdivisions < 10:
            raise ValueError(f"max_subdivisions must be >= 10, got {self.max_subdivisions}")


DEFAULT_SETTINGS = QuadratureSettings()


@dataclass(frozen=True)
class ArcLengthResult:
    length: float
    error_estimate: float
    evaluations: int


def arc_length(arc: ConicArc, settings: QuadratureSettings = DEFAULT_SETTINGS) -> ArcLengthResult:
    """Arc length by adaptive quadrature of the polar integrand.

    The dimensionless integral over [-beta, beta] is evaluated first and then
    scaled by the semi-latus rectum, so equal (e, k) give bitwise-equal length
    ratios across chords.  Raises ``QuadratureNonConvergence`` if the error
    estimate still exceeds ``max(abs_tol, rel_tol * c)`` after the subdivision
    budget, which only happens extremely close to the hyperbola's asymptote
    domain.
    """
    e = arc.e
    esq = e * e

    def integrand(theta: float) -> float:
        denom = 1.0 + e * math.cos(theta)
        return math.sqrt(1.0 + 2.0 * e * math.cos(theta) + esq) / (denom * denom)

    out = quad(
        integrand,
        -arc.beta,
        arc.beta,
        epsabs=settings.abs_tol / arc.p,
        epsrel=settings.rel_tol,
        limit=settings.max_subdivisions,
        full_output=1,
    )
    value, abserr, info = out[0], out[1], out[2]
    length = arc.p * value
    error = arc.p * abserr
    if error > max(settings.abs_tol, settings.rel_tol * abs(length)):
        raise QuadratureNonConvergence(
            f"error estimate {error:g} above tolerance after "
            f"{settings.max_subdivisions} subdivisions (e={e:g}, k={arc.k:g})"
        )
    return ArcLengthResult(length=length, error_estimate=error, evaluations=int(info["neval"]))


def closed_form_circle(arc: ConicArc) -> float:
    """Exact circular arc length 2 R asin(l / 2R) = 2 R beta."""
    if arc.conic_class is not ConicClass.CIRCLE:
        raise WrongClass(f"expected a circle, got {arc.conic_class.value}")
    R = arc.a
    return 2.0 * R * math.asin(arc.l / (2.0 * R))


def closed_form_parabola(arc: ConicArc) -> float:
    """Exact parabolic arc length from the Cartesian sqrt(1 + y'^2) antiderivative.

    For y = f (1 - 4 x^2 / l^2) over [-l/2, l/2] this reduces to
    p * (u sqrt(1 + u^2) + asinh(u)) with u = 4/k.
    """
    if arc.conic_class is not ConicClass.PARABOLA:
        raise WrongClass(f"expected a parabola, got {arc.conic_class.value}")
    u = 4.0 / arc.k
    return arc.p * (u * math.sqrt(1.0 + u * u) + math.asinh(u))


def polyline_length(arc: ConicArc, n: int) -> float:
    """Length of the inscribed n-segment polyline through sample_points(arc, n).

    Non-decreasing under subdivision doubling and converges to the true arc
    length from below.
    """
    pts = sample_points(arc, n)
    seg = np.diff(pts, axis=0)
    return float(np.hypot(seg[:, 0], seg[:, 1]).sum())


def g_factor(e: float, k: float, settings: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """Arc length per unit chord: c(l, l/k, e) = g_factor(e, k) * l."""
    _check_feasible(e, k)
    return arc_length(construct_arc(1.0, 1.0 / k, e), settings).length
