"""Command-line front end.

Subcommands: curvature (point evaluation), profile (1-D sweep to CSV),
trace (sample a constant-angle curve to CSV/SVG), verify (numerical
battery), figure (regenerate a named SVG).

Exit codes: 0 success, 1 inadmissible input ("domain error: ..." on
stderr), 2 verification failure, 3 malformed flags.  All output is
deterministic; floats are written in shortest round-trip form (17
significant digits suffice to re-read them exactly).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import List, Optional, Sequence

import numpy as np

from . import closed_form as cf
from . import curves as cv
from . import polar as pl
from . import verify as vf
from .errors import DomainError, GeometryError
from .svg import render_figure, trace_svg
from .surfaces import (
    JET_MODE_ANALYTIC,
    JET_MODE_FD,
    plane_patch,
    sphere_patch,
)

_JETS = {"analytic": JET_MODE_ANALYTIC, "fd": JET_MODE_FD}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; the contract here is 3."""

    def error(self, message: str):  # noqa: D401 - argparse hook
        self.exit(3, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return repr(float(x))


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _resolve_theta(args, parser: _Parser, default: Optional[float]) -> float:
    if getattr(args, "theta_deg", None) is not None:
        if args.theta is not None:
            parser.error("--theta and --theta-deg are mutually exclusive")
        return math.radians(args.theta_deg)
    if args.theta is not None:
        return args.theta
    if default is None:
        parser.error("one of --theta or --theta-deg is required")
    return default


def build_parser() -> _Parser:
    parser = _Parser(prog="spiralcurv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_theta(p):
        p.add_argument("--theta", type=float, default=None, help="angle in radians")
        p.add_argument("--theta-deg", type=float, default=None, help="angle in degrees")

    p = sub.add_parser("curvature", help="evaluate the spiral curvature at one point")
    p.add_argument("--K", type=float, default=0.0, help="ambient Gaussian curvature")
    p.add_argument("--r", type=float, default=1.0, help="geodesic radius")
    add_theta(p)
    p.add_argument("--series", action="store_true", help="force the series branch")
    p.add_argument("--terms", type=int, default=4, help="series term count (2..6)")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("profile", help="sweep curvature along r or K to CSV")
    p.add_argument("--axis", choices=("r", "K"), required=True)
    p.add_argument("--fixed", type=float, required=True, help="value of the non-swept variable")
    p.add_argument("--min", dest="x_min", type=float, required=True)
    p.add_argument("--max", dest="x_max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    add_theta(p)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("trace", help="sample a constant-angle curve")
    p.add_argument(
        "--surface", choices=("plane", "sphere", "pseudosphere", "polar"), required=True
    )
    p.add_argument("--K", type=float, default=None, help="curvature for --surface polar")
    p.add_argument("--R", type=float, default=1.0, help="radius scale of the surface")
    add_theta(p)
    p.add_argument("--r0", type=float, required=True)
    p.add_argument("--r1", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--jets", choices=tuple(_JETS), default="analytic")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--suite", choices=vf.SUITES, required=True)
    p.add_argument("--jets", choices=tuple(_JETS), default="analytic")
    p.add_argument("--tol-scale", type=float, default=1.0)
    p.add_argument("--format", choices=("report-text", "report-json"), default="report-text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="regenerate a named SVG figure")
    p.add_argument(
        "--name",
        choices=(
            "spiral",
            "pseudosphere",
            "sphere-loxodrome",
            "pseudosphere-loxodrome",
            "k-surface",
        ),
        required=True,
    )
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_figure)

    return parser


def cmd_curvature(args, parser: _Parser) -> int:
    theta = _resolve_theta(args, parser, default=math.pi / 4.0)
    if args.series:
        k = cf.spiral_curvature_series(args.K, args.r, theta, args.terms)
    else:
        k = cf.spiral_curvature(args.K, args.r, theta)
    print(f"{k:.17g}")
    return 0


def cmd_profile(args, parser: _Parser) -> int:
    if args.steps < 2:
        parser.error("--steps must be at least 2")
    theta = _resolve_theta(args, parser, default=math.pi / 4.0)
    prof = cf.profile(args.axis, args.fixed, args.x_min, args.x_max, args.steps, theta)
    lines = ["x,k,method"]
    for (x, k), method in zip(prof.samples, prof.sample_methods):
        lines.append(f"{_fmt(x)},{_fmt(k)},{method}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _build_trace_curve(args, theta: float):
    if args.surface == "plane":
        a = math.tan(theta)
        curve = cv.plane_log_spiral(a)
        t0 = -math.log(args.r0) / a
        t1 = -math.log(args.r1) / a
        return curve, t0, t1
    if args.surface == "sphere":
        a = math.cos(theta) / math.sin(theta)
        curve = cv.sphere_loxodrome(args.R, a)
        t0 = (math.pi - args.r0 / args.R) / 2.0
        t1 = (math.pi - args.r1 / args.R) / 2.0
        return curve, t0, t1
    if args.surface == "pseudosphere":
        curve = cv.pseudosphere_loxodrome(args.R, theta)
        return curve, args.r0, args.r1
    # intrinsic polar trace, embedded into the matching model surface
    K = args.K if args.K is not None else 0.0
    if K < 0.0:
        raise DomainError("polar traces embed only for K >= 0")
    patch = plane_patch() if K == 0.0 else sphere_patch(1.0 / math.sqrt(K))
    # Dense interpolation grid, padded past the requested range so the
    # emitted end points sit on interpolated (not extrapolated) spline
    # pieces; --samples only controls the emitted rows.
    lo, hi = sorted((args.r0, args.r1))
    pad = min(0.02 * (hi - lo), 0.5 * lo)
    if K > 0.0:
        pad = min(pad, 0.5 * (math.pi / math.sqrt(K) - hi))
    pad = max(pad, 0.0)
    rs = np.linspace(lo - pad, hi + pad, 600)
    pts = [pl.spiral_chart_trace(K, theta, lo, 0.0, float(r)) for r in rs]
    curve = pl.embed_polar_trace(patch, pts)
    return curve, args.r0, args.r1


def cmd_trace(args, parser: _Parser) -> int:
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    theta = _resolve_theta(args, parser, default=None)
    mode = _JETS[args.jets]
    curve, t0, t1 = _build_trace_curve(args, theta)

    rows = []
    positions = []
    for i in range(args.samples):
        t = t0 + (t1 - t0) * i / (args.samples - 1)
        s = cv.sample(curve, t, mode)
        u, v = curve.trace(t)
        p = s.position
        positions.append((p.x, p.y, p.z))
        rows.append(
            ",".join(_fmt(val) for val in (t, p.x, p.y, p.z, u, v, s.k, s.theta))
        )

    if args.format == "svg":
        _write_text(args.out, trace_svg(positions))
    else:
        _write_text(args.out, "\n".join(["t,x,y,z,u,v,k,theta_meas"] + rows) + "\n")
    return 0


def cmd_verify(args, parser: _Parser) -> int:
    mode = _JETS[args.jets]
    scale = args.tol_scale * (100.0 if mode == JET_MODE_FD else 1.0)
    reports = vf.run_suites(args.suite, mode, scale)
    if args.format == "report-json":
        _write_text(args.out, vf.reports_to_json(reports) + "\n")
    else:
        _write_text(args.out, vf.reports_to_text(reports) + "\n")
    return 0 if all(r.passed for r in reports) else 2


def cmd_figure(args, parser: _Parser) -> int:
    _write_text(args.out, render_figure(args.name))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except GeometryError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
