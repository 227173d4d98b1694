"""Triples of conic arcs on the sides of a right triangle.

For a fixed eccentricity e and side-to-sagitta ratio k, the arcs erected on
the hypotenuse and the two legs have lengths c_i = g(e, k) * l_i, so they
inherit the quadratic side relation: c1^2 = c2^2 + c3^2.  This module builds
such triples, measures the identity's residual, and sweeps (e, k) grids.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

from .arclength import DEFAULT_SETTINGS, QuadratureSettings, arc_length
from .conic import ConicArc, _check_feasible, construct_arc
from .errors import InfeasibleSagitta, NonFinite, NonPositiveInput
from .textfmt import fmt

__all__ = [
    "RightTriangle",
    "ConicTriple",
    "SweepRow",
    "make_right_triangle",
    "conic_triple",
    "pythagorean_residual",
    "sweep",
    "sweep_csv",
    "SWEEP_CSV_HEADER",
]


@dataclass(frozen=True)
class RightTriangle:
    """Side lengths with l1 the hypotenuse; legs normalized so l2 >= l3."""

    l1: float
    l2: float
    l3: float


def make_right_triangle(l2: float, l3: float) -> RightTriangle:
    """Right triangle from its two legs; the hypotenuse is derived."""
    l2, l3 = float(l2), float(l3)
    if not (math.isfinite(l2) and math.isfinite(l3)):
        raise NonFinite(f"legs must be finite, got {l2}, {l3}")
    if l2 <= 0.0 or l3 <= 0.0:
        raise NonPositiveInput(f"legs must be positive, got {l2}, {l3}")
    if l3 > l2:
        l2, l3 = l3, l2
    return RightTriangle(l1=math.hypot(l2, l3), l2=l2, l3=l3)


@dataclass(frozen=True)
class ConicTriple:
    e: float
    k: float
    arcs: tuple[ConicArc, ConicArc, ConicArc]
    lengths: tuple[float, float, float]
    residual: float


def _residual(c1: float, c2: float, c3: float) -> float:
    return abs(c1 * c1 - c2 * c2 - c3 * c3) / (c1 * c1)


def pythagorean_residual(triple: ConicTriple) -> float:
    """Relative defect |c1^2 - c2^2 - c3^2| / c1^2 of the stored lengths."""
    return _residual(*triple.lengths)


def conic_triple(
    tri: RightTriangle,
    e: float,
    k: float,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> ConicTriple:
    """Arcs of one (e, k) family on all three sides, with lengths and residual.

    Each side i carries the arc with sagitta f_i = l_i / k; infeasible (e, k)
    propagates ``InfeasibleSagitta`` from the construction.
    """
    _check_feasible(e, k)  # rejects k <= 0 before any division
    arcs = tuple(construct_arc(l, l / k, e) for l in (tri.l1, tri.l2, tri.l3))
    lengths = tuple(arc_length(a, settings).length for a in arcs)
    return ConicTriple(e=e, k=k, arcs=arcs, lengths=lengths,
                       residual=_residual(*lengths))


@dataclass(frozen=True)
class SweepRow:
    """One (e, k) cell of a verification sweep; numeric fields absent when infeasible."""

    e: float
    k: float
    feasible: bool
    c1: float | None = None
    c2: float | None = None
    c3: float | None = None
    residual: float | None = None
    g: float | None = None


def sweep(
    tri: RightTriangle,
    e_values: list[float],
    k_values: list[float],
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> list[SweepRow]:
    """Evaluate the (e, k) grid in ascending order; infeasible cells are flagged rows."""
    if not e_values or not k_values:
        raise NonPositiveInput("e_values and k_values must be non-empty")
    if not all(math.isfinite(v) for v in list(e_values) + list(k_values)):
        raise NonFinite("sweep grid values must be finite")
    rows = []
    for e in sorted(e_values):
        for k in sorted(k_values):
            try:
                t = conic_triple(tri, e, k, settings)
            except InfeasibleSagitta:
                rows.append(SweepRow(e=e, k=k, feasible=False))
                continue
            rows.append(SweepRow(e=e, k=k, feasible=True, c1=t.lengths[0],
                                 c2=t.lengths[1], c3=t.lengths[2],
                                 residual=t.residual, g=t.lengths[0] / tri.l1))
    return rows


SWEEP_CSV_HEADER = "e,k,feasible,c1,c2,c3,residual,g"


def sweep_csv(rows: list[SweepRow]) -> str:
    """Serialize sweep rows to CSV (17 significant digits, empty cells when infeasible)."""
    buf = io.StringIO()
    buf.write(SWEEP_CSV_HEADER + "\n")
    for r in rows:
        cells = [fmt(r.e), fmt(r.k), "true" if r.feasible else "false"]
        cells += ["" if v is None else fmt(v) for v in (r.c1, r.c2, r.c3, r.residual, r.g)]
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()
