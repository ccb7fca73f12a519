"""Hand-emitted SVG 1.1 figures.

No plotting dependencies: elements are accumulated as data, auto-scaled to
a ~600-unit box at render time, and written with fixed two-decimal
coordinates so that repeated runs produce byte-identical files.  The
viewBox is the drawing's bounding box plus a 5% margin.
"""

from __future__ import annotations

import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import closed_form as cf
from . import curves as cv
from .errors import BadParameter
from .surfaces import pseudosphere_patch, sphere_patch

_TARGET = 600.0

Point = Tuple[float, float]


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


class Canvas:
    """Deferred-layout SVG canvas in data coordinates (y up)."""

    def __init__(self) -> None:
        self._polylines: List[Tuple[List[Point], str, float, float]] = []
        self._texts: List[Tuple[float, float, str, int, str, str]] = []
        self._circles: List[Tuple[float, float, float, str]] = []

    def polyline(
        self,
        pts: Sequence[Point],
        stroke: str = "#333333",
        width: float = 1.3,
        opacity: float = 1.0,
    ) -> None:
        if len(pts) >= 2:
            self._polylines.append(([tuple(p) for p in pts], stroke, width, opacity))

    def line(self, a: Point, b: Point, stroke: str = "#333333", width: float = 1.0) -> None:
        self.polyline([a, b], stroke, width)

    def circle(self, center: Point, radius_px: float, fill: str = "#333333") -> None:
        self._circles.append((center[0], center[1], radius_px, fill))

    def text(
        self,
        pos: Point,
        s: str,
        size: int = 12,
        anchor: str = "middle",
        fill: str = "#333333",
    ) -> None:
        self._texts.append((pos[0], pos[1], s, size, anchor, fill))

    def render(self) -> str:
        xs: List[float] = []
        ys: List[float] = []
        for pts, *_ in self._polylines:
            xs.extend(p[0] for p in pts)
            ys.extend(p[1] for p in pts)
        for x, y, *_ in self._circles:
            xs.append(x)
            ys.append(y)
        for x, y, *_ in self._texts:
            xs.append(x)
            ys.append(y)
        if not xs:
            xs = ys = [0.0, 1.0]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, 1e-9)
        scale = _TARGET / span

        def tx(x: float) -> float:
            return (x - x0) * scale

        def ty(y: float) -> float:
            return (y1 - y) * scale

        width = (x1 - x0) * scale
        height = (y1 - y0) * scale
        margin = 0.05 * _TARGET
        vb = (-margin, -margin, width + 2.0 * margin, height + 2.0 * margin)
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            (
                '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{_fmt(vb[2])}" height="{_fmt(vb[3])}" '
                f'viewBox="{_fmt(vb[0])} {_fmt(vb[1])} {_fmt(vb[2])} {_fmt(vb[3])}">'
            ),
        ]
        for pts, stroke, w, opacity in self._polylines:
            coords = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in pts)
            style = f'fill="none" stroke="{stroke}" stroke-width="{_fmt(w)}"'
            if opacity != 1.0:
                style += f' stroke-opacity="{_fmt(opacity)}"'
            out.append(f"<polyline {style} points=\"{coords}\"/>")
        for x, y, r, fill in self._circles:
            out.append(
                f'<circle cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" r="{_fmt(r)}" fill="{fill}"/>'
            )
        for x, y, s, size, anchor, fill in self._texts:
            out.append(
                f'<text x="{_fmt(tx(x))}" y="{_fmt(ty(y))}" font-family="sans-serif" '
                f'font-size="{size}" text-anchor="{anchor}" fill="{fill}">{s}</text>'
            )
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _project(azimuth: float, elevation: float) -> Callable[[Sequence[float]], Point]:
    sa, ca = math.sin(azimuth), math.cos(azimuth)
    se, ce = math.sin(elevation), math.cos(elevation)

    def proj(p: Sequence[float]) -> Point:
        x, y, z = p[0], p[1], p[2]
        return (y * ca - x * sa, z * ce - (x * ca + y * sa) * se)

    return proj


def _wireframe(canvas: Canvas, patch, us, vs, proj, stroke="#bbbbbb") -> None:
    for u in us:
        pts = [proj(patch.eval(u, v).as_array()) for v in vs]
        canvas.polyline(pts, stroke=stroke, width=0.8)
    for v in vs:
        pts = [proj(patch.eval(u, v).as_array()) for u in us]
        canvas.polyline(pts, stroke=stroke, width=0.8)


def _curve_points(curve, t0: float, t1: float, n: int, proj) -> List[Point]:
    pts = []
    for i in range(n):
        t = t0 + (t1 - t0) * i / (n - 1)
        pts.append(proj(curve.embedded(t)))
    return pts


def figure_spiral() -> str:
    canvas = Canvas()
    a = 0.14
    n = 900
    pts = []
    for i in range(n):
        t = 12.0 * math.pi * i / (n - 1)
        r = math.exp(-a * t)
        pts.append((r * math.cos(t), r * math.sin(t)))
    canvas.line((-1.1, 0.0), (1.1, 0.0), stroke="#dddddd")
    canvas.line((0.0, -1.1), (0.0, 1.1), stroke="#dddddd")
    canvas.polyline(pts, stroke="#1f77b4", width=1.6)
    canvas.circle((0.0, 0.0), 2.5, fill="#1f77b4")
    return canvas.render()


def figure_pseudosphere() -> str:
    canvas = Canvas()
    patch = pseudosphere_patch(1.0)
    proj = _project(0.55, 0.32)
    us = [2.0 * math.pi * k / 16.0 for k in range(17)]
    vs = [0.16 + (math.pi / 2.0 - 0.16) * k / 23.0 for k in range(24)]
    _wireframe(canvas, patch, us, vs, proj, stroke="#888888")
    return canvas.render()


def figure_sphere_loxodrome() -> str:
    canvas = Canvas()
    patch = sphere_patch(1.0)
    proj = _project(0.55, 0.32)
    us = [2.0 * math.pi * k / 12.0 for k in range(13)]
    vs = [0.08 + (math.pi - 0.16) * k / 17.0 for k in range(18)]
    _wireframe(canvas, patch, us, vs, proj)
    curve = cv.sphere_loxodrome(1.0, 6.0)
    pts = _curve_points(curve, 0.04, math.pi / 2.0 - 0.04, 1400, proj)
    canvas.polyline(pts, stroke="#d62728", width=1.6)
    return canvas.render()


def figure_pseudosphere_loxodrome() -> str:
    canvas = Canvas()
    patch = pseudosphere_patch(1.0)
    proj = _project(0.55, 0.32)
    us = [2.0 * math.pi * k / 16.0 for k in range(17)]
    vs = [0.16 + (math.pi / 2.0 - 0.16) * k / 23.0 for k in range(24)]
    _wireframe(canvas, patch, us, vs, proj)
    curve = cv.pseudosphere_loxodrome(1.0, math.pi / 6.0)
    pts = _curve_points(curve, 0.12, math.pi / 2.0, 1200, proj)
    canvas.polyline(pts, stroke="#d62728", width=1.6)
    return canvas.render()


def _iso_radius(K: float, level: float) -> Optional[float]:
    """Radius where the circle curvature hits `level`, or None.

    The circle curvature decreases from +inf to its r->r_max limit, so a
    bisection bracket exists iff the value at r_max lies below the level.
    """
    if K > 0.0:
        hi = 0.999 * math.pi / math.sqrt(K)
    else:
        hi = 60.0
        if K < 0.0 and math.sqrt(-K) >= level:
            return None
    lo = 1e-6
    if cf.geodesic_circle_curvature(K, hi) >= level:
        return None
    for _ in range(70):
        mid = 0.5 * (lo + hi)
        if cf.geodesic_circle_curvature(K, mid) > level:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def figure_k_surface() -> str:
    canvas = Canvas()
    k_lo, k_hi, r_cap = -4.0, 4.0, 2.4
    x_scale, y_scale = 60.0, 180.0

    def place(K: float, r: float) -> Point:
        return (K * x_scale, r * y_scale)

    canvas.line(place(k_lo, 0.0), place(k_hi, 0.0), stroke="#444444")
    canvas.line(place(0.0, 0.0), place(0.0, r_cap), stroke="#dddddd")
    for K in (-4, -2, 0, 2, 4):
        p = place(float(K), 0.0)
        canvas.line(p, (p[0], p[1] - 6.0), stroke="#444444")
        canvas.text((p[0], p[1] - 24.0), str(K))
    canvas.text(place(k_hi, -0.26), "K", anchor="end")
    for r_tick in (1.0, 2.0):
        p = place(k_lo, r_tick)
        canvas.line(p, (p[0] - 6.0, p[1]), stroke="#444444")
        canvas.text((p[0] - 20.0, p[1] - 4.0 / y_scale), f"{r_tick:g}", anchor="end")
    canvas.text(place(k_lo - 0.55, r_cap), "r")

    palette = ("#1f77b4", "#2ca02c", "#ff7f0e", "#d62728", "#9467bd")
    levels = (0.8, 1.2, 2.0, 3.0, 4.5)
    n = 161
    for level, color in zip(levels, palette):
        pts: List[Point] = []
        segments: List[List[Point]] = []
        for i in range(n):
            K = k_lo + (k_hi - k_lo) * i / (n - 1)
            r = _iso_radius(K, level)
            if r is None or r > r_cap:
                if pts:
                    segments.append(pts)
                    pts = []
                continue
            pts.append(place(K, r))
        if pts:
            segments.append(pts)
        for seg in segments:
            canvas.polyline(seg, stroke=color, width=1.5)
        if segments and segments[-1]:
            tail = segments[-1][-1]
            canvas.text((tail[0] + 14.0, tail[1]), f"{level:g}", size=11, fill=color)
    return canvas.render()


FIGURES: Dict[str, Callable[[], str]] = {
    "spiral": figure_spiral,
    "pseudosphere": figure_pseudosphere,
    "sphere-loxodrome": figure_sphere_loxodrome,
    "pseudosphere-loxodrome": figure_pseudosphere_loxodrome,
    "k-surface": figure_k_surface,
}


def render_figure(name: str) -> str:
    try:
        builder = FIGURES[name]
    except KeyError:
        raise BadParameter(f"unknown figure {name!r}") from None
    return builder()


def trace_svg(points_xyz: Sequence[Sequence[float]]) -> str:
    """Orthographic projection of an embedded trace along +z (x right, y up)."""
    canvas = Canvas()
    pts = [(p[0], p[1]) for p in points_xyz]
    canvas.polyline(pts, stroke="#1f77b4", width=1.6)
    return canvas.render()
