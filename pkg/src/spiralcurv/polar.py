"""Geodesic polar coordinates on constant-curvature surfaces.

The metric is dr^2 + G(r) du^2 with sqrt(G) = sin(r sqrt(K))/sqrt(K), r,
or sinh(r sqrt(-K))/sqrt(-K) according to the sign of K; near r = 0 a short
series keeps the evaluation stable.  The circle curvature computed from the
metric quotient (sqrt(G))_r / sqrt(G) gives an independent route to the
closed-form module's circle curvature.

Intrinsic constant-angle traces u(r) are produced in closed form; they can
be embedded into the plane and sphere charts.  The polar angular coordinate
winds opposite to the revolution-chart angle (the (r, u) system is
positively oriented, the (u, v) charts are not), so the embedding maps
u_polar -> -u_chart; embedded traces are parametrized by r and traversed
toward the pole, which makes the measured angle equal +theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Sequence

from scipy.interpolate import CubicSpline

from .curves import ChartCurve
from .errors import BadParameter, DomainError, OutOfDomain, Unsupported
from .surfaces import SurfacePatch

THETA_CLAMP = 1e-3
_SERIES_Q = 1e-6


@dataclass(frozen=True)
class PolarMetric:
    """Radial metric data: sqrt(G) and its r-derivative, plus the first
    conjugate radius (pi/sqrt(K) for K > 0, else +inf)."""

    K: float
    sqrtG: Callable[[float], float]
    sqrtG_r: Callable[[float], float]
    r_limit: float


@dataclass(frozen=True)
class PolarTracePoint:
    """One point of an intrinsic polar trace."""

    r: float
    u: float


def polar_metric(K: float) -> PolarMetric:
    """Geodesic polar metric for constant curvature K."""
    r_limit = math.pi / math.sqrt(K) if K > 0.0 else math.inf

    def check(r: float) -> None:
        if not 0.0 < r < r_limit:
            raise DomainError(f"r={r} outside admissible (0, {r_limit})")

    def sqrtG(r: float) -> float:
        check(r)
        q = K * r * r
        if abs(q) < _SERIES_Q:
            return r * (1.0 - q / 6.0 + q * q / 120.0 - q**3 / 5040.0)
        if K > 0.0:
            s = math.sqrt(K)
            return math.sin(r * s) / s
        b = math.sqrt(-K)
        return math.sinh(r * b) / b

    def sqrtG_r(r: float) -> float:
        check(r)
        q = K * r * r
        if abs(q) < _SERIES_Q:
            return 1.0 - q / 2.0 + q * q / 24.0 - q**3 / 720.0
        if K > 0.0:
            return math.cos(r * math.sqrt(K))
        return math.cosh(r * math.sqrt(-K))

    return PolarMetric(K=K, sqrtG=sqrtG, sqrtG_r=sqrtG_r, r_limit=r_limit)


def circle_curvature(K: float, r: float) -> float:
    """Curvature of the geodesic circle of radius r, from the metric:
    G_r / (2 G sqrt(E)) = (sqrt(G))_r / sqrt(G).

    Agrees with closed_form.geodesic_circle_curvature to ~1e-13 relative
    while being computed along an independent route.
    """
    m = polar_metric(K)
    return m.sqrtG_r(r) / m.sqrtG(r)


def spiral_chart_trace(
    K: float, theta: float, r0: float, u0: float, r: float
) -> PolarTracePoint:
    """Intrinsic constant-angle trace through (r0, u0), evaluated at r.

    Integrates du/dr = cot(theta)/sqrt(G(r)) in closed form:
    cot(theta) * ln(r/r0) for K = 0 and the corresponding
    ln tan / ln tanh differences of (r/2)*sqrt(|K|) otherwise.  theta is
    restricted to [1e-3, pi - 1e-3] to keep both cot(theta) and the
    trace parametrization well-conditioned.
    """
    if not THETA_CLAMP <= theta <= math.pi - THETA_CLAMP:
        raise DomainError(
            f"theta={theta} outside [{THETA_CLAMP}, pi - {THETA_CLAMP}]"
        )
    m = polar_metric(K)
    for rr in (r0, r):
        if not 0.0 < rr < m.r_limit:
            raise DomainError(f"r={rr} outside admissible (0, {m.r_limit})")
    cot = math.cos(theta) / math.sin(theta)

    q_max = abs(K) * max(r, r0) ** 2
    if q_max < 1e-8:
        # ln tan(x) = ln x + x^2/3 + ..., so the leading K-correction to
        # the flat formula is K (r^2 - r0^2)/12 for either sign of K.
        adv = math.log(r / r0) + K * (r * r - r0 * r0) / 12.0
    elif K > 0.0:
        s = math.sqrt(K)
        adv = math.log(math.tan(r * s / 2.0)) - math.log(math.tan(r0 * s / 2.0))
    elif K < 0.0:
        b = math.sqrt(-K)
        adv = math.log(math.tanh(r * b / 2.0)) - math.log(math.tanh(r0 * b / 2.0))
    else:
        adv = math.log(r / r0)
    return PolarTracePoint(r=r, u=u0 + cot * adv)


def embed_polar_trace(
    patch: SurfacePatch,
    points: Sequence[PolarTracePoint],
    center: str = "pole",
) -> ChartCurve:
    """Embed an intrinsic polar trace as a chart curve on a plane or
    sphere patch (pole at the chart center).

    The patch is recognized by its known constant curvature: 0 -> plane
    chart (angle, radius), K > 0 -> sphere chart with colatitude r/R.
    Negative curvature is refused (the tractroid chart does not contain a
    full geodesic disk about any pole).  The returned curve interpolates
    the supplied points with a cubic spline, is parametrized by t = r,
    and carries direction_sign = -1 so it is traversed toward the pole.
    """
    if center != "pole":
        raise Unsupported(f"center convention {center!r} not implemented")
    if patch.known_K is None:
        raise Unsupported(f"{patch.name} has no known constant curvature")
    if patch.known_K < 0.0:
        raise Unsupported(
            "embedding into a negatively curved chart is not supported"
        )
    if len(points) < 4:
        raise BadParameter("need at least 4 trace points to interpolate")
    rs = [p.r for p in points]
    us = [p.u for p in points]
    if any(b <= a for a, b in zip(rs, rs[1:])):
        raise BadParameter("trace points must be strictly increasing in r")

    if patch.known_K > 0.0:
        v_scale = math.sqrt(patch.known_K)  # v = r / R
    else:
        v_scale = 1.0
    for r in (rs[0], rs[-1]):
        if not patch.domain.v.contains(r * v_scale):
            raise OutOfDomain(f"r={r} maps outside the chart of {patch.name}")

    spline = CubicSpline(rs, us)
    d_spline = spline.derivative()

    # Pad the parameter domain a little past the data so difference
    # stencils fit at the end points (the spline extrapolates there);
    # stay inside the chart and away from r = 0.
    pad = min(0.02 * (rs[-1] - rs[0]), 0.5 * rs[0])
    v_hi = patch.domain.v.hi
    if math.isfinite(v_hi):
        pad = min(pad, 0.5 * (v_hi / v_scale - rs[-1]))
    pad = max(pad, 0.0)

    return ChartCurve(
        patch=patch,
        trace=lambda t: (-float(spline(t)), t * v_scale),
        t_domain=(rs[0] - pad, rs[-1] + pad),
        direction_sign=-1,
        trace_velocity=lambda t: (-float(d_spline(t)), v_scale),
        center_distance=lambda t: t,
        label=f"polar trace on {patch.name}",
    )
