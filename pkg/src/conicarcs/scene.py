"""Drawable scenes: triangle, arc triple, envelope, altitude, centre.

Arcs are sampled in their chord frame and mapped onto each side so they bulge
away from the triangle interior.  Scenes serialize to JSON (named layers with
point arrays) and to stroke-only SVG with a deterministic element order, so
identical input yields byte-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .conic import _check_feasible, construct_arc, sample_points
from .homothety import (
    PlanarTriangle,
    Point,
    altitude_from_right_angle,
    enveloping_triangle,
    pythagorean_centre,
)
from .textfmt import fmt

__all__ = ["Scene", "build_scene", "scene_to_json", "scene_to_svg"]


@dataclass(frozen=True)
class Scene:
    triangle: np.ndarray
    arcs: tuple[np.ndarray, np.ndarray, np.ndarray]
    envelope: np.ndarray
    altitude: np.ndarray
    centre: np.ndarray

    def layers(self) -> list[tuple[str, np.ndarray]]:
        """Layer name/points pairs in the fixed emission order."""
        return [
            ("triangle", self.triangle),
            ("arc1", self.arcs[0]),
            ("arc2", self.arcs[1]),
            ("arc3", self.arcs[2]),
            ("envelope", self.envelope),
            ("altitude", self.altitude),
            ("centre", self.centre.reshape(1, 2)),
        ]


def _arc_on_side(a: Point, b: Point, length: float, sagitta: float, e: float,
                 samples: int, orient: float) -> np.ndarray:
    arc = construct_arc(length, sagitta, e)
    pts = sample_points(arc, samples)
    mid = np.array([(a.x + b.x) / 2.0, (a.y + b.y) / 2.0])
    span = math.hypot(b.x - a.x, b.y - a.y)
    t = np.array([b.x - a.x, b.y - a.y]) / span
    n = orient * np.array([t[1], -t[0]])
    return mid + np.outer(pts[:, 0], t) + np.outer(pts[:, 1], n)


def build_scene(tri: PlanarTriangle, e: float, k: float, samples: int) -> Scene:
    """Assemble the full drawing for one (e, k) family on an embedded triangle."""
    _check_feasible(e, k)  # rejects k <= 0 before any division
    orient = math.copysign(
        1.0,
        (tri.p2.x - tri.p1.x) * (tri.p3.y - tri.p1.y)
        - (tri.p2.y - tri.p1.y) * (tri.p3.x - tri.p1.x),
    )
    sides = (
        (tri.p2, tri.p3, tri.l1),  # hypotenuse first, matching arc1..arc3
        (tri.p1, tri.p2, tri.l2),
        (tri.p3, tri.p1, tri.l3),
    )
    arcs = tuple(
        _arc_on_side(a, b, l, l / k, e, samples, orient) for a, b, l in sides
    )
    env = enveloping_triangle(tri, k)
    foot, _ = altitude_from_right_angle(tri)
    centre = pythagorean_centre(tri)
    as_row = lambda p: [p.x, p.y]
    return Scene(
        triangle=np.array([as_row(tri.p1), as_row(tri.p2), as_row(tri.p3)]),
        arcs=arcs,
        envelope=np.array([as_row(env.p1), as_row(env.p2), as_row(env.p3)]),
        altitude=np.array([as_row(tri.p1), as_row(foot)]),
        centre=np.array(as_row(centre)),
    )


def scene_to_json(scene: Scene) -> str:
    """JSON document with one point array per layer, floats at 17 significant digits."""
    parts = []
    for name, pts in scene.layers():
        body = ", ".join(f"[{fmt(x)}, {fmt(y)}]" for x, y in pts)
        parts.append(f'  "{name}": [{body}]')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _path(pts: np.ndarray, closed: bool) -> str:
    # SVG y grows downward; negate to keep the drawing upright.
    cmds = [f"{'M' if i == 0 else 'L'} {fmt(x)} {fmt(-y)}" for i, (x, y) in enumerate(pts)]
    if closed:
        cmds.append("Z")
    return " ".join(cmds)


def scene_to_svg(scene: Scene) -> str:
    """Stroke-only SVG, one path per layer, viewBox = scene bounds + 5% margin."""
    all_pts = np.vstack([pts for _, pts in scene.layers()])
    lo = all_pts.min(axis=0)
    hi = all_pts.max(axis=0)
    pad = 0.05 * max(hi[0] - lo[0], hi[1] - lo[1])
    width = hi[0] - lo[0] + 2.0 * pad
    height = hi[1] - lo[1] + 2.0 * pad
    view = f"{fmt(lo[0] - pad)} {fmt(-hi[1] - pad)} {fmt(width)} {fmt(height)}"
    stroke = 0.004 * max(width, height)
    tick = 0.02 * max(width, height)

    paths = []
    for name, pts in scene.layers():
        if name == "centre":
            cx, cy = pts[0, 0], -pts[0, 1]
            d = (f"M {fmt(cx - tick)} {fmt(cy - tick)} L {fmt(cx + tick)} {fmt(cy + tick)} "
                 f"M {fmt(cx - tick)} {fmt(cy + tick)} L {fmt(cx + tick)} {fmt(cy - tick)}")
        else:
            d = _path(pts, closed=name in ("triangle", "envelope"))
        paths.append(f'  <path id="{name}" d="{d}" fill="none" stroke="black" '
                     f'stroke-width="{fmt(stroke)}"/>')

    head = f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}">'
    return "\n".join(['<?xml version="1.0" encoding="UTF-8"?>', head, *paths, "</svg>"]) + "\n"
