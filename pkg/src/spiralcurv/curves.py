"""Curves on surface patches: constructors, lengths, angles, curvature.

A ChartCurve is a parametrized trace t -> (u, v) drawn on a SurfacePatch.
The geodesic curvature is measured numerically from the embedded curve
(central differences of the position with Richardson extrapolation), so it
serves as an independent cross-check of the closed-form predictions.

Sign conventions: curvature and angles are measured against the patch's
oriented normal; direction_sign = -1 traverses the same point set backwards
and negates both the measured angle's sine and the curvature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.integrate import quad, solve_ivp

from .errors import (
    BadParameter,
    DegenerateJet,
    NumericalBreakdown,
    OutOfDomain,
)
from .numdiff import (
    STEP_FIRST_FINE,
    STEP_SECOND_FINE,
    central_first,
    central_second,
    fit_step,
    richardson_first,
    scaled_step,
)
from .surfaces import (
    SurfacePatch,
    _pick_mode,
    eval_jet,
    plane_patch,
    pseudosphere_patch,
    sphere_patch,
    unit_normal,
)
from .vec import Vec3

BREAKDOWN_TOL = 1e-4

PARALLEL = "parallel"
MERIDIAN = "meridian"


@dataclass(frozen=True)
class ChartCurve:
    """A curve given by its chart trace on a patch.

    trace maps the parameter t to chart coordinates (u, v).  When the
    velocity of the trace is known in closed form it should be supplied
    as trace_velocity; otherwise it is recovered by finite differences.
    center_distance, when present, gives the geodesic distance to the
    spiral's pole as a function of t.
    """

    patch: SurfacePatch
    trace: Callable[[float], Tuple[float, float]]
    t_domain: Tuple[float, float]
    direction_sign: int = 1
    trace_velocity: Optional[Callable[[float], Tuple[float, float]]] = None
    center_distance: Optional[Callable[[float], float]] = None
    label: str = ""

    def contains(self, t: float) -> bool:
        return self.t_domain[0] <= t <= self.t_domain[1]

    def embedded(self, t: float) -> np.ndarray:
        u, v = self.trace(t)
        return self.patch.eval(u, v).as_array()

    def velocity(self, t: float) -> Tuple[float, float]:
        """Chart velocity (du/dt, dv/dt), before any direction flip."""
        if self.trace_velocity is not None:
            return self.trace_velocity(t)
        lo, hi = self.t_domain
        h = fit_step(scaled_step(t, STEP_FIRST_FINE), t, lo, hi)
        if h <= 0.0:
            raise OutOfDomain(f"t={t} leaves no room to differentiate the trace")
        du, _ = richardson_first(lambda s: self.trace(s)[0], t, h)
        dv, _ = richardson_first(lambda s: self.trace(s)[1], t, h)
        return du, dv


@dataclass(frozen=True)
class CurveSample:
    """One measured point of a curve."""

    t: float
    position: Vec3
    k: float
    theta: float
    r: Optional[float] = None


def _require_param(curve: ChartCurve, t: float) -> None:
    if not curve.contains(t):
        raise OutOfDomain(f"t={t} outside parameter domain {curve.t_domain}")


# ---------------------------------------------------------------------------
# constructors


def plane_log_spiral(a: float) -> ChartCurve:
    """Logarithmic spiral in the plane, chart trace (t, exp(-a t)).

    For a > 0 the curve winds counterclockwise into the origin; its
    constant angle to the circles about the origin is arctan(a).  a = 0
    would be a circle, not a spiral, and is rejected.
    """
    if a == 0.0:
        raise BadParameter("a must be nonzero (a = 0 gives a circle)")
    return ChartCurve(
        patch=plane_patch(),
        trace=lambda t: (t, math.exp(-a * t)),
        t_domain=(-math.inf, math.inf),
        trace_velocity=lambda t: (1.0, -a * math.exp(-a * t)),
        center_distance=lambda t: math.exp(-a * t),
        label=f"plane_log_spiral(a={a:g})",
    )


def sphere_loxodrome(R: float, a: float) -> ChartCurve:
    """Loxodrome on the sphere of radius R, constant angle arccot(a) to
    the parallels.

    Chart trace (a*ln tan t, pi - 2t) for t in (0, pi/2): the curve
    crosses the equator at t = pi/4 and spirals into the north pole as
    t -> pi/2, at constant speed 2R*sqrt(1+a^2).
    """
    if R <= 0.0:
        raise BadParameter("sphere radius must be positive")
    return ChartCurve(
        patch=sphere_patch(R),
        trace=lambda t: (a * math.log(math.tan(t)), math.pi - 2.0 * t),
        t_domain=(0.0, math.pi / 2.0),
        trace_velocity=lambda t: (2.0 * a / math.sin(2.0 * t), -2.0),
        center_distance=lambda t: R * (math.pi - 2.0 * t),
        label=f"sphere_loxodrome(R={R:g}, a={a:g})",
    )


def pseudosphere_loxodrome(
    R: float, theta: float, u0: float = 0.0, v_floor: float = 1e-3
) -> ChartCurve:
    """Loxodrome on the tractroid, constant angle theta to the parallels.

    The chart trace (u(v), v) is obtained by integrating the
    constant-angle condition du/dv = cot(theta) * sqrt(G/E) =
    cot(theta) * cos(v)/sin(v)^2 with an 8th-order Runge-Kutta scheme
    (rel tol 1e-12, dense output) from the rim v = pi/2 down to
    v_floor; the curve is parametrized by t = v.
    """
    if R <= 0.0:
        raise BadParameter("pseudosphere radius must be positive")
    if not 0.0 < theta < math.pi:
        raise BadParameter(f"theta={theta} outside (0, pi)")
    patch = pseudosphere_patch(R, v_floor)
    cot = math.cos(theta) / math.sin(theta)

    def rate(v: float) -> float:
        s = math.sin(v)
        return cot * math.cos(v) / (s * s)

    top = math.pi / 2.0
    sol = solve_ivp(
        lambda v, y: [rate(v)],
        (top, v_floor),
        [0.0],
        method="DOP853",
        rtol=1e-12,
        atol=1e-13,
        dense_output=True,
    )
    if not sol.success:
        raise NumericalBreakdown(f"constant-angle integration failed: {sol.message}")

    def chart_u(v: float) -> float:
        if not v_floor <= v <= top:
            raise OutOfDomain(f"v={v} outside [{v_floor}, {top}]")
        return u0 + float(sol.sol(v)[0])

    return ChartCurve(
        patch=patch,
        trace=lambda t: (chart_u(t), t),
        t_domain=(v_floor, top),
        trace_velocity=lambda t: (rate(t), 1.0),
        label=f"pseudosphere_loxodrome(R={R:g}, theta={theta:g})",
    )


def coordinate_curve(patch: SurfacePatch, kind: str, fixed: float) -> ChartCurve:
    """Coordinate curve of a patch: a parallel (v = fixed, parametrized by
    u) or a meridian (u = fixed, parametrized by v)."""
    if kind == PARALLEL:
        if not patch.domain.v.contains(fixed):
            raise OutOfDomain(f"v={fixed} outside domain of {patch.name}")
        lo, hi = patch.domain.u.lo, patch.domain.u.hi
        return ChartCurve(
            patch=patch,
            trace=lambda t: (t, fixed),
            t_domain=(lo, hi),
            trace_velocity=lambda t: (1.0, 0.0),
            label=f"{patch.name} parallel v={fixed:g}",
        )
    if kind == MERIDIAN:
        if not patch.domain.u.contains(fixed):
            raise OutOfDomain(f"u={fixed} outside domain of {patch.name}")
        lo, hi = patch.domain.v.lo, patch.domain.v.hi
        return ChartCurve(
            patch=patch,
            trace=lambda t: (fixed, t),
            t_domain=(lo, hi),
            trace_velocity=lambda t: (0.0, 1.0),
            label=f"{patch.name} meridian u={fixed:g}",
        )
    raise BadParameter(f"kind must be {PARALLEL!r} or {MERIDIAN!r}, got {kind!r}")


# ---------------------------------------------------------------------------
# measurements


def speed(curve: ChartCurve, t: float, mode: Optional[str] = None) -> float:
    """|d gamma/dt| through the first fundamental form."""
    _require_param(curve, t)
    u, v = curve.trace(t)
    jet = eval_jet(curve.patch, u, v, _pick_mode(curve.patch, mode))
    du, dv = curve.velocity(t)
    E = jet.p_u.dot(jet.p_u)
    F = jet.p_u.dot(jet.p_v)
    G = jet.p_v.dot(jet.p_v)
    return math.sqrt(E * du * du + 2.0 * F * du * dv + G * dv * dv)


def arc_length(curve: ChartCurve, t0: float, t1: float, mode: Optional[str] = None) -> float:
    """Arc length by adaptive Gauss-Kronrod quadrature (rel tol 1e-10).

    Antisymmetric under swapping the endpoints; additive over adjacent
    intervals to the quadrature tolerance.
    """
    _require_param(curve, t0)
    _require_param(curve, t1)
    value, _ = quad(
        lambda t: speed(curve, t, mode), t0, t1, epsabs=1e-12, epsrel=1e-10, limit=200
    )
    return value


def geodesic_curvature_numeric(
    curve: ChartCurve, t: float, mode: Optional[str] = None
) -> float:
    """Geodesic curvature measured from the embedded curve.

    The position is differenced centrally (with one Richardson level) to
    get gamma' and gamma''; the unit-speed chain rule reduces the signed
    normal-frame curvature to <gamma'', N x gamma'>/|gamma'|^3.  The
    Richardson correction of the second derivative serves as an error
    estimate: if it exceeds 1e-4 relative to the curvature scale, the
    measurement is rejected with NumericalBreakdown.
    """
    _require_param(curve, t)
    lo, hi = curve.t_domain
    h1 = fit_step(scaled_step(t, STEP_FIRST_FINE), t, lo, hi)
    h2 = fit_step(scaled_step(t, STEP_SECOND_FINE), t, lo, hi)
    if min(h1, h2) <= 0.0:
        raise OutOfDomain(f"t={t} leaves no room for the difference stencil")

    g = curve.embedded
    d1a = central_first(g, t, h1)
    d1b = central_first(g, t, h1 / 2.0)
    d1 = d1b + (d1b - d1a) / 3.0

    d2a = central_second(g, t, h2)
    d2b = central_second(g, t, h2 / 2.0)
    d2 = d2b + (d2b - d2a) / 3.0
    err = float(np.linalg.norm(d2 - d2b))

    sp = float(np.linalg.norm(d1))
    if sp == 0.0:
        raise DegenerateJet(f"curve is not regular at t={t}")
    scale = max(float(np.linalg.norm(d2)), sp * sp)
    if err / scale > BREAKDOWN_TOL:
        raise NumericalBreakdown(
            f"second-derivative estimate unreliable at t={t} "
            f"(relative error ~{err / scale:.2e})"
        )

    u, v = curve.trace(t)
    jet = eval_jet(curve.patch, u, v, _pick_mode(curve.patch, mode))
    n = unit_normal(jet, curve.patch.orientation_sign).as_array()
    k = float(np.dot(d2, np.cross(n, d1))) / sp**3
    return curve.direction_sign * k


def angle_to_parallel(curve: ChartCurve, t: float, mode: Optional[str] = None) -> float:
    """Signed angle in (-pi, pi] from the parallel direction to the curve.

    Measured in-chart through the first fundamental form: the cosine
    leg is <gamma', p_u> and the sine leg is the signed area
    orientation_sign * dv * sqrt(EG - F^2), which matches the ambient
    triple product <N, p_u x gamma'>.
    """
    _require_param(curve, t)
    u, v = curve.trace(t)
    jet = eval_jet(curve.patch, u, v, _pick_mode(curve.patch, mode))
    E = jet.p_u.dot(jet.p_u)
    F = jet.p_u.dot(jet.p_v)
    G = jet.p_v.dot(jet.p_v)
    area2 = E * G - F * F
    if area2 <= 0.0 or E <= 0.0:
        raise DegenerateJet("first form is not positive definite")
    du, dv = curve.velocity(t)
    du *= curve.direction_sign
    dv *= curve.direction_sign
    if E * du * du + 2.0 * F * du * dv + G * dv * dv <= 0.0:
        raise DegenerateJet(f"curve velocity vanishes at t={t}")
    sin_leg = curve.patch.orientation_sign * dv * math.sqrt(area2)
    cos_leg = E * du + F * dv
    theta = math.atan2(sin_leg, cos_leg)
    if theta <= -math.pi:
        theta += 2.0 * math.pi
    return theta


def sample(curve: ChartCurve, t: float, mode: Optional[str] = None) -> CurveSample:
    """Measure position, curvature and angle at one parameter value."""
    u, v = curve.trace(t)
    return CurveSample(
        t=t,
        position=curve.patch.eval(u, v),
        k=geodesic_curvature_numeric(curve, t, mode),
        theta=angle_to_parallel(curve, t, mode),
        r=curve.center_distance(t) if curve.center_distance is not None else None,
    )
