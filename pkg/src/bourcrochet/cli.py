"""Command line front end: ``bourcrochet {pattern,info,mesh,validate}``."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import validation
from .arclength import InversionError, circumference, intrinsic_radius
from .intersection import (SQRT3, bour3_sectors, enneper_first_intersection_radius,
                           enneper_section_arcs, richmond_crossing_angle)
from .mesh import GridSpec, sample_mesh, sample_radial_polyline, sample_round_polyline, write_obj
from .pattern import (Gauge, ScaleError, ScalePolicy, ScheduleError, enneper_intersection_schedule,
                      generate_pattern, render, resolve_scale, to_dict)
from .surface import DomainError, SurfaceSpec, fundamental_form, gaussian_curvature, richmond_order

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GAUGE_ENV = "BOURCROCHET_GAUGE"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _number(text: str) -> float:
    return float(Fraction(text)) if "/" in text else float(text)


def _pair(text: str) -> tuple[float, float]:
    try:
        a, b = (_number(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return a, b


def parse_selector(text: str, r_range: tuple[float, float] | None = None, scale: float = 1.0) -> SurfaceSpec:
    """Resolve ``enneper:<k>``, ``richmond:<k>``, ``bour3`` or ``bm:<m>`` to a SurfaceSpec."""
    name, _, arg = text.partition(":")
    try:
        if name == "enneper":
            k = int(arg)
            if k < 1:
                raise ValueError
            m = (k + 1) / k
        elif name == "richmond":
            k = int(arg)
            if k < 1:
                raise ValueError
            m = k / (k + 1)
        elif name == "bour3" and not arg:
            m = 3.0
        elif name == "bm":
            m = _number(arg)
        else:
            raise UsageError(f"unknown surface {text!r}; use enneper:<k>, richmond:<k>, bour3 or bm:<m>")
    except ValueError:
        raise UsageError(f"bad surface argument in {text!r}") from None
    if r_range is None:
        if name == "bour3":
            r_range = (0.0, 1.0)
        else:
            r_range = (0.0, 10.0) if m > 1 else (0.1, 10.0)
    return SurfaceSpec(m, scale, r_range[0], r_range[1])


def _default_gauge():
    raw = os.environ.get(GAUGE_ENV)
    if not raw:
        return None, None
    try:
        return _pair(raw)
    except argparse.ArgumentTypeError:
        raise UsageError(f"{GAUGE_ENV} must be 'H,W', got {raw!r}") from None


def _scale_policy(text: str, rounds: int | None, spec: SurfaceSpec) -> ScalePolicy:
    if text == "fit-intersection":
        if spec.m != 2:
            raise UsageError("fit-intersection needs Enneper's surface with m=2 (enneper:1)")
        if rounds is None:
            raise UsageError("fit-intersection needs --rounds")
        return ScalePolicy.fit_round(rounds, SQRT3)
    if text.startswith("fit-count:"):
        try:
            l, n = (int(t) for t in text.split(":", 1)[1].split(","))
        except ValueError:
            raise UsageError(f"expected fit-count:<round>,<stitches>, got {text!r}") from None
        return ScalePolicy.fit_count(l, n)
    try:
        return ScalePolicy.explicit(_number(text))
    except ValueError:
        raise UsageError(f"bad --scale {text!r}") from None


def cmd_pattern(args, out) -> int:
    H0, W0 = _default_gauge()
    H = args.gauge_h if args.gauge_h is not None else H0
    W = args.gauge_w if args.gauge_w is not None else W0
    if H is None or W is None:
        raise UsageError(f"gauge missing: pass --gauge-h and --gauge-w or set {GAUGE_ENV}")
    gauge = Gauge(H, W)
    base = parse_selector(args.surface, args.r_range)
    policy = _scale_policy(args.scale, args.rounds, base)
    spec = base.with_scale(resolve_scale(base, gauge, policy))
    rounds = args.rounds
    if rounds is None:
        if policy.kind == "explicit":
            raise UsageError("--rounds is required with an explicit scale")
        rounds = policy.round

    if not args.intersect:
        out.write(render(generate_pattern(spec, gauge, rounds), args.format))
        return EXIT_OK
    if spec.m != 2:
        raise UsageError("--intersect is only available for enneper:1 (m=2)")
    sched = enneper_intersection_schedule(spec, gauge, rounds)
    if args.format == "json":
        out.write(json.dumps({"pattern": to_dict(sched.lead), "schedule": to_dict(sched)}, indent=2) + "\n")
    else:
        out.write(render(sched.lead, args.format))
        out.write("\n")
        out.write(render(sched, args.format))
    return EXIT_OK


def cmd_info(args, out) -> int:
    spec = parse_selector(args.surface, args.r_range, args.scale)
    r = args.r
    ff = fundamental_form(spec, (r, 0.0)) if not (r == 0 and spec.m < 2) else None
    lines = [
        f"surface: m={spec.m:g} s={spec.s:g} r in [{spec.r_min:g}, {spec.r_max:g}]",
        f"r = {r:.10g}",
        f"circumference C(r) = {circumference(spec, r):.10g}",
        f"intrinsic radius R(r) = {intrinsic_radius(spec, r):.10g}",
        f"Gaussian curvature K(r) = {gaussian_curvature(spec, (r, 0.0)):.10g}",
    ]
    if ff is not None:
        lines.append(f"first fundamental form E = {ff.E:.10g}, F = {ff.F:g}, G = {ff.G:.10g}")
    if spec.m == 2:
        r1 = enneper_first_intersection_radius()
        lines.append(f"first intersection radius = {r1:.10g} (R = {intrinsic_radius(spec, r1):.10g})")
        if math.isclose(r, r1, rel_tol=1e-6) or r >= r1:
            arcs = enneper_section_arcs(spec, max(r, r1))
            note = " (first intersection)" if math.isclose(r, r1, rel_tol=1e-6) else ""
            lines.append(f"crossing angle theta_cr = {arcs.theta_cr:.10g}{note}")
            lines.append(f"inner arc = {arcs.inner_arc:.10g}, outer arc = {arcs.outer_arc:.10g} (x{arcs.sections})")
        else:
            lines.append("crossing angle: none (no self-intersection yet)")
    elif richmond_order(spec.m) == 1 and r >= SQRT3:
        lines.append(f"Enneper-type crossing angle theta_cr = {richmond_crossing_angle(r):.10g}")
    elif spec.m == 3:
        layout = bour3_sectors()
        lines.append(f"sectors: {layout.count} of width {layout.sectors[0].width:.10g} rad; "
                     f"stitches migrate between sectors: {'yes' if layout.stitches_migrate else 'no'}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_mesh(args, out) -> int:
    spec = parse_selector(args.surface, args.r_range, args.scale)
    if args.round is not None:
        obj = sample_round_polyline(spec, args.round, args.theta_steps)
        kind = f"round polyline: {len(obj.points)} points, length {obj.length:.10g}"
    elif args.radial is not None:
        obj = sample_radial_polyline(spec, args.radial, args.r_steps)
        kind = f"radial polyline: {len(obj.points)} points, length {obj.length:.10g}"
    else:
        obj = sample_mesh(spec, GridSpec(args.r_steps, args.theta_steps, theta_range=args.theta_range))
        kind = f"mesh: {len(obj.vertices)} vertices, {len(obj.faces)} faces"
    if args.out == "-":
        out.write(write_obj(obj).decode("utf-8"))
    else:
        write_obj(obj, args.out)
        out.write(kind + "\n")
    return EXIT_OK


def cmd_validate(args, out) -> int:
    checks = validation.run_all(args.gauge_h)
    for check in checks:
        out.write(f"[{'PASS' if check.passed else 'FAIL'}] {check.name}\n")
        for line in check.details:
            out.write(f"    {line}\n")
    out.write("informational:\n")
    for line in validation.informational(args.gauge_h):
        out.write(f"    {line}\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bourcrochet", description="Bour minimal surface geometry and crochet patterns")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pp = sub.add_parser("pattern", help="stitches per round")
    pp.add_argument("surface")
    pp.add_argument("--gauge-h", type=float)
    pp.add_argument("--gauge-w", type=float)
    pp.add_argument("--rounds", type=int)
    pp.add_argument("--scale", default="1", help="number, fit-intersection or fit-count:<round>,<stitches>")
    pp.add_argument("--format", choices=("text", "csv", "json"), default="text")
    pp.add_argument("--intersect", action="store_true", help="inner/outer schedule past r=sqrt(3) (m=2)")
    pp.add_argument("--r-range", type=_pair)
    pp.set_defaults(func=cmd_pattern)

    pi = sub.add_parser("info", help="geometry at one parameter radius")
    pi.add_argument("surface")
    pi.add_argument("--r", type=float, required=True)
    pi.add_argument("--scale", type=float, default=1.0)
    pi.add_argument("--r-range", type=_pair)
    pi.set_defaults(func=cmd_info)

    pm = sub.add_parser("mesh", help="export an OBJ mesh or polyline")
    pm.add_argument("surface")
    pm.add_argument("--r-steps", type=int, default=32)
    pm.add_argument("--theta-steps", type=int, default=128)
    pm.add_argument("--r-range", type=_pair)
    pm.add_argument("--theta-range", type=_pair)
    pm.add_argument("--scale", type=float, default=1.0)
    group = pm.add_mutually_exclusive_group()
    group.add_argument("--round", type=float, metavar="R", help="closed polyline of the round at r=R")
    group.add_argument("--radial", type=float, metavar="THETA", help="polyline along the ray theta")
    pm.add_argument("--out", required=True)
    pm.set_defaults(func=cmd_mesh)

    pv = sub.add_parser("validate", help="compare against the published tables")
    pv.add_argument("--gauge-h", type=float, default=0.45, help="stitch height used for the H=0.45 models")
    pv.set_defaults(func=cmd_validate)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"bourcrochet: error: {exc}\n")
    except (DomainError, ScaleError, ScheduleError, InversionError, ValueError, OSError) as exc:
        err.write(f"bourcrochet: error: {exc}\n")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
