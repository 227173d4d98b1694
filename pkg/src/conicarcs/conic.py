"""Symmetric conic arcs on a chord.

An arc of eccentricity ``e`` is erected on a chord of length ``l`` so that it
is symmetric about the chord's perpendicular bisector and bulges out to a
sagitta of height ``f``.  Everything lives in the *chord frame*: the chord on
the x-axis centred at the origin, the arc in the upper half plane, apex at
``(0, f)``.

All shape quantities depend on the pair ``(e, k)`` with ``k = l/f`` only;
lengths scale linearly with ``l``.  The construction is feasible only for
``k > 2*sqrt(|1 - e^2|)`` (strict), which for the circle restricts arcs to
the minor-arc regime.

The focus-centred polar form is ``r(theta) = p / (1 + e*cos(theta))`` with
``theta = 0`` pointing from the focus towards the apex, where

    p / l = k/8 + (1 - e^2) / (2k)        (semi-latus rectum, all classes)
    s / l = k/(8(1+e)) - (1+e) / (2k)     (signed focus-to-chord offset)

and the chord endpoints sit at the angles ``+-beta``, ``beta = atan2(l/2, s)``.
``s < 0`` (obtuse ``beta``) occurs for ``2*sqrt(|1-e^2|) < k < 2(1+e)``, so
angles are always taken with ``atan2``, never a bare arctangent.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AsymptoteDomain,
    DegenerateSampleCount,
    InfeasibleSagitta,
    NegativeEccentricity,
    NonFinite,
    NonPositiveInput,
    OutOfAngularRange,
    ParabolaHasNoCentre,
)

__all__ = [
    "ConicClass",
    "ChordSagitta",
    "ConicArc",
    "classify",
    "feasibility_min_k",
    "construct_arc",
    "centre_half_angle",
    "focus_half_angle",
    "polar_radius",
    "sample_points",
    "canonical_residual",
]


class ConicClass(enum.Enum):
    CIRCLE = "circle"
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"


def _check_eccentricity(e: float) -> float:
    e = float(e)
    if not math.isfinite(e):
        raise NonFinite(f"eccentricity must be finite, got {e}")
    if e < 0.0:
        raise NegativeEccentricity(f"eccentricity must be >= 0, got {e}")
    return e


def classify(e: float) -> ConicClass:
    """Conic class for eccentricity ``e`` (0 circle, (0,1) ellipse, 1 parabola, >1 hyperbola)."""
    e = _check_eccentricity(e)
    if e == 0.0:
        return ConicClass.CIRCLE
    if e < 1.0:
        return ConicClass.ELLIPSE
    if e == 1.0:
        return ConicClass.PARABOLA
    return ConicClass.HYPERBOLA


def feasibility_min_k(e: float) -> float:
    """Lower bound on k = l/f below which no symmetric arc of eccentricity e exists.

    Equals ``2*sqrt(|1 - e^2|)``; arcs require k strictly above it.  For the
    parabola (e = 1) there is no constraint and 0 is returned.
    """
    e = _check_eccentricity(e)
    return 2.0 * math.sqrt(abs(1.0 - e * e))


def _check_feasible(e: float, k: float) -> float:
    k_min = feasibility_min_k(e)
    if not (k > k_min):
        if k_min > 0.0:
            msg = (f"sagitta too large for e={e:g}: k = l/f = {k:g} must exceed "
                   f"{k_min:g} (requires f < l/{k_min:g})")
        else:
            msg = f"k = l/f = {k:g} must be positive"
        raise InfeasibleSagitta(msg)
    return k_min


# Dimensionless shape factors (values per unit chord length).

def _latus_unit(e: float, k: float) -> float:
    return k / 8.0 + (1.0 - e * e) / (2.0 * k)


def _offset_unit(e: float, k: float) -> float:
    return k / (8.0 * (1.0 + e)) - (1.0 + e) / (2.0 * k)


@dataclass(frozen=True)
class ChordSagitta:
    """Chord length, sagitta height, and their ratio k = l/f (always derived)."""

    l: float
    f: float
    k: float = field(init=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.l) and math.isfinite(self.f)):
            raise NonFinite(f"chord and sagitta must be finite, got l={self.l}, f={self.f}")
        if self.l <= 0.0 or self.f <= 0.0:
            raise NonPositiveInput(f"chord and sagitta must be positive, got l={self.l}, f={self.f}")
        object.__setattr__(self, "k", self.l / self.f)


@dataclass(frozen=True)
class ConicArc:
    """Fully resolved symmetric arc.

    ``m`` is the axial coordinate of the chord in the conic's canonical frame
    (centre at the origin, apex vertex on the positive axis): ``m = a - f``
    for circle/ellipse, ``m = a + f`` for the hyperbola (chord beyond the
    near-branch vertex), and the focal length ``F`` for the parabola, whose
    canonical frame has no centre.  ``s`` is the signed offset from the focus
    to the chord, positive towards the apex; ``beta`` and ``alpha`` are the
    focus and centre half-angles subtended by the chord.
    """

    conic_class: ConicClass
    e: float
    chord: ChordSagitta
    a: float | None
    b: float | None
    c_focal: float | None
    m: float
    p: float
    s: float
    beta: float
    alpha: float | None

    @property
    def l(self) -> float:
        return self.chord.l

    @property
    def f(self) -> float:
        return self.chord.f

    @property
    def k(self) -> float:
        return self.chord.k


def construct_arc(l: float, f: float, e: float) -> ConicArc:
    """Build the unique symmetric arc of eccentricity ``e`` on chord ``l`` with sagitta ``f``.

    Raises ``InfeasibleSagitta`` when ``l/f <= feasibility_min_k(e)`` and
    ``NonPositiveInput`` for non-positive lengths.
    """
    cls = classify(e)
    chord = ChordSagitta(float(l), float(f))
    l, f, k = chord.l, chord.f, chord.k
    _check_feasible(e, k)

    p = l * _latus_unit(e, k)
    s_u = _offset_unit(e, k)
    s = l * s_u
    beta = math.atan2(0.5, s_u)

    if cls is ConicClass.PARABOLA:
        return ConicArc(cls, e, chord, None, None, None, m=l * k / 16.0, p=p,
                        s=s, beta=beta, alpha=None)

    # a and m each from their own closed form, so that alpha here and
    # centre_half_angle agree bit for bit
    if cls is ConicClass.HYPERBOLA:
        a_u = k / (8.0 * (e * e - 1.0)) - 1.0 / (2.0 * k)
        m_u = k / (8.0 * (e * e - 1.0)) + 1.0 / (2.0 * k)
        b_val = l * a_u * math.sqrt(e * e - 1.0)
    else:  # circle or ellipse
        a_u = k / (8.0 * (1.0 - e * e)) + 1.0 / (2.0 * k)
        m_u = k / (8.0 * (1.0 - e * e)) - 1.0 / (2.0 * k)
        b_val = l * a_u * math.sqrt(1.0 - e * e)
    return ConicArc(cls, e, chord, a=l * a_u, b=b_val, c_focal=e * l * a_u,
                    m=l * m_u, p=p, s=s, beta=beta, alpha=math.atan2(0.5, m_u))


def centre_half_angle(e: float, k: float) -> float:
    """Half-angle subtended by the chord at the conic's centre; function of (e, k) only."""
    cls = classify(e)
    if cls is ConicClass.PARABOLA:
        raise ParabolaHasNoCentre("a parabola has no centre")
    _check_feasible(e, k)
    if cls is ConicClass.HYPERBOLA:
        m_u = k / (8.0 * (e * e - 1.0)) + 1.0 / (2.0 * k)
    else:
        m_u = k / (8.0 * (1.0 - e * e)) - 1.0 / (2.0 * k)
    return math.atan2(0.5, m_u)


def focus_half_angle(e: float, k: float) -> float:
    """Half-angle subtended by the chord at the focus; function of (e, k) only.

    Obtuse for ``feasibility_min_k(e) < k < 2(1+e)``.
    """
    _check_feasible(e, k)
    return math.atan2(0.5, _offset_unit(e, k))


def polar_radius(arc: ConicArc, theta: float) -> float:
    """Focal distance r(theta) = p / (1 + e cos theta), theta = 0 towards the apex."""
    if abs(theta) > arc.beta:
        raise OutOfAngularRange(f"|theta| = {abs(theta):g} exceeds beta = {arc.beta:g}")
    denom = 1.0 + arc.e * math.cos(theta)
    if denom <= 0.0:
        raise AsymptoteDomain(f"1 + e*cos(theta) = {denom:g} <= 0")
    return arc.p / denom


def sample_points(arc: ConicArc, n: int) -> np.ndarray:
    """Sample the arc at n+1 uniformly spaced polar angles in [-beta, beta].

    Returns an (n+1, 2) array of chord-frame points running from (-l/2, 0) to
    (l/2, 0); both endpoints are exact and for even n the middle sample is the
    apex (0, f) to rounding error.
    """
    if n < 2:
        raise DegenerateSampleCount(f"need n >= 2 samples, got {n}")
    theta = np.linspace(-arc.beta, arc.beta, n + 1)
    if n % 2 == 0:
        theta[n // 2] = 0.0
    r = arc.p / (1.0 + arc.e * np.cos(theta))
    pts = np.column_stack((r * np.sin(theta), r * np.cos(theta) - arc.s))
    pts[0] = (-arc.l / 2.0, 0.0)
    pts[-1] = (arc.l / 2.0, 0.0)
    return pts


def canonical_residual(arc: ConicArc, x: float, y: float) -> float:
    """Dimensionless residual of the canonical conic equation at chord-frame (x, y).

    Zero (to rounding) iff the point lies on the conic carrying the arc.  Used
    as the construction oracle: maps the point into the canonical frame and
    evaluates x^2/a^2 +- y^2/b^2 - 1, or the normalised parabola equation.
    """
    cls = arc.conic_class
    if cls is ConicClass.PARABOLA:
        # vertex at origin, opens towards the chord: Y^2 = 4 F X
        X = arc.f - y
        Y = x
        return (Y * Y - 4.0 * arc.m * X) / (arc.l / 2.0) ** 2
    if cls is ConicClass.HYPERBOLA:
        X = arc.m - y
        Y = x
        return (X / arc.a) ** 2 - (Y / arc.b) ** 2 - 1.0
    X = arc.m + y
    Y = x
    return (X / arc.a) ** 2 + (Y / arc.b) ** 2 - 1.0
