"""Command-line front end.

Subcommands: construct, arclen, verify, sweep, scene, centre, oracle.
Exit codes: 0 success, 1 usage or invalid input, 2 verification failure,
3 infeasible (e, k).  All numeric output uses 17 significant digits and
repeated invocations with identical arguments produce byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import sys

from .arclength import (
    QuadratureSettings,
    arc_length,
    closed_form_circle,
    closed_form_parabola,
    polyline_length,
)
from .conic import ConicClass, construct_arc
from .errors import ConicError, InfeasibleSagitta, QuadratureNonConvergence
from .homothety import place_triangle, verify_homothety
from .scene import build_scene, scene_to_json, scene_to_svg
from .textfmt import fmt
from .triples import conic_triple, make_right_triangle, sweep, sweep_csv

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract reserves 2 for
    # verification failure, so remap parse errors to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _finite(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"value must be finite, got {text!r}")
    return value


def _finite_list(text: str) -> list[float]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")
    return [_finite(t) for t in items]


def _settings(args) -> QuadratureSettings:
    return QuadratureSettings(rel_tol=getattr(args, "rel_tol", 1e-12))


def _cmd_construct(args) -> int:
    arc = construct_arc(args.l, args.f, args.e)
    opt = lambda v: "null" if v is None else fmt(v)
    fields = [
        f'"class": "{arc.conic_class.value}"',
        f'"e": {fmt(arc.e)}',
        f'"l": {fmt(arc.l)}',
        f'"f": {fmt(arc.f)}',
        f'"k": {fmt(arc.k)}',
        f'"a": {opt(arc.a)}',
        f'"b": {opt(arc.b)}',
        f'"c_focal": {opt(arc.c_focal)}',
        f'"m": {fmt(arc.m)}',
        f'"p": {fmt(arc.p)}',
        f'"s": {fmt(arc.s)}',
        f'"beta": {fmt(arc.beta)}',
        f'"alpha": {opt(arc.alpha)}',
    ]
    print("{" + ", ".join(fields) + "}")
    return 0


def _cmd_arclen(args) -> int:
    arc = construct_arc(args.l, args.f, args.e)
    res = arc_length(arc, _settings(args))
    print(f"length={fmt(res.length)}")
    print(f"error_estimate={fmt(res.error_estimate)}")
    print(f"evaluations={res.evaluations}")
    return 0


def _cmd_verify(args) -> int:
    tri = make_right_triangle(args.leg2, args.leg3)
    triple = conic_triple(tri, args.e, args.k, _settings(args))
    c1, c2, c3 = triple.lengths
    print(f"c1={fmt(c1)}")
    print(f"c2={fmt(c2)}")
    print(f"c3={fmt(c3)}")
    print(f"residual={fmt(triple.residual)}")
    return 0 if triple.residual < args.threshold else 2


def _cmd_sweep(args) -> int:
    tri = make_right_triangle(args.leg2, args.leg3)
    rows = sweep(tri, args.e_list, args.k_list, _settings(args))
    sys.stdout.write(sweep_csv(rows))
    return 0


def _cmd_scene(args) -> int:
    tri = place_triangle(args.leg2, args.leg3)
    scene = build_scene(tri, args.e, args.k, args.samples)
    doc = scene_to_svg(scene) if args.format == "svg" else scene_to_json(scene)
    sys.stdout.write(doc)
    return 0


def _cmd_centre(args) -> int:
    tri = place_triangle(args.leg2, args.leg3)
    first = verify_homothety(tri, args.k_list[0])
    print(f"centre_x={fmt(first.centre.x)}")
    print(f"centre_y={fmt(first.centre.y)}")
    for k in args.k_list:
        rep = verify_homothety(tri, k)
        print(f"k={fmt(k)} ratio={fmt(rep.ratio)} max_deviation={fmt(rep.max_deviation)}")
    return 0


def _cmd_oracle(args) -> int:
    arc = construct_arc(args.l, args.f, args.e)
    res = arc_length(arc, _settings(args))
    rows = [("quadrature", res.length, None)]
    poly = polyline_length(arc, args.n)
    rows.append(("polyline", poly, abs(poly - res.length) / res.length))
    if arc.conic_class is ConicClass.CIRCLE:
        cf = closed_form_circle(arc)
        rows.append(("closed_form", cf, abs(cf - res.length) / res.length))
    elif arc.conic_class is ConicClass.PARABOLA:
        cf = closed_form_parabola(arc)
        rows.append(("closed_form", cf, abs(cf - res.length) / res.length))
    print("method,value,rel_gap_vs_quadrature")
    for name, value, gap in rows:
        print(f"{name},{fmt(value)},{'' if gap is None else fmt(gap)}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="conicarcs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **flags):
        p = sub.add_parser(name)
        for flag, opts in flags.items():
            p.add_argument(f"--{flag.replace('_', '-')}", **opts)
        p.set_defaults(func=func)
        return p

    num = {"type": _finite, "required": True}
    nums = {"type": _finite_list, "required": True}
    rel = {"type": _finite, "default": 1e-12}

    add("construct", _cmd_construct, l=num, f=num, e=num)
    add("arclen", _cmd_arclen, l=num, f=num, e=num, rel_tol=rel)
    add("verify", _cmd_verify, leg2=num, leg3=num, e=num, k=num, rel_tol=rel,
        threshold={"type": _finite, "default": 1e-8})
    add("sweep", _cmd_sweep, leg2=num, leg3=num, e_list=nums, k_list=nums, rel_tol=rel)
    add("scene", _cmd_scene, leg2=num, leg3=num, e=num, k=num,
        samples={"type": int, "default": 64},
        format={"choices": ("svg", "json"), "default": "svg"})
    add("centre", _cmd_centre, leg2=num, leg3=num,
        k_list={"type": _finite_list, "default": [4.0, 8.0, 16.0]})
    add("oracle", _cmd_oracle, l=num, f=num, e=num, n={"type": int, "default": 100000},
        rel_tol=rel)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InfeasibleSagitta as exc:
        print(f"conicarcs: infeasible: {exc}", file=sys.stderr)
        return 3
    except (ConicError, QuadratureNonConvergence, ValueError) as exc:
        print(f"conicarcs: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
