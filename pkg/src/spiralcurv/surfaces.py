"""Parametrized surface patches, 2-jets, fundamental forms, Gaussian curvature.

A patch is a map (u, v) -> R^3 on a rectangle, carrying an orientation sign
that fixes which of the two unit normals the rest of the package uses.  The
second-form coefficients follow the convention e = <N_u, p_u>,
f = <N_u, p_v>, g = <N_v, p_v>; flipping the orientation flips (e, f, g)
jointly and leaves the curvature untouched.

Jets can be evaluated analytically (when the patch provides derivatives of
its profile functions) or by pure central differences of the position map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BadParameter, DegenerateJet, OutOfDomain
from .numdiff import (
    STEP_FIRST,
    STEP_SECOND,
    central_first,
    central_second,
    fit_step,
    scaled_step,
)
from .vec import Vec3

DEGENERACY_THRESHOLD = 1e-12

JET_MODE_ANALYTIC = "analytic"
JET_MODE_FD = "finite_difference"


@dataclass(frozen=True)
class Interval:
    """Closed/open interval; infinite endpoints are always open."""

    lo: float
    hi: float
    closed_lo: bool = False
    closed_hi: bool = False

    def contains(self, x: float) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not (self.closed_lo and math.isfinite(self.lo)):
            return False
        if x == self.hi and not (self.closed_hi and math.isfinite(self.hi)):
            return False
        return True


@dataclass(frozen=True)
class Rect:
    u: Interval
    v: Interval

    def contains(self, u: float, v: float) -> bool:
        return self.u.contains(u) and self.v.contains(v)


@dataclass(frozen=True)
class Jet2:
    """Position and partial derivatives through second order at one point."""

    p: Vec3
    p_u: Vec3
    p_v: Vec3
    p_uu: Vec3
    p_uv: Vec3
    p_vv: Vec3


@dataclass(frozen=True)
class FormCoefficients:
    """First (E, F, G) and second (e, f, g) fundamental form coefficients."""

    E: float
    F: float
    G: float
    e: float
    f: float
    g: float


@dataclass(frozen=True)
class SurfacePatch:
    """A parametrized surface patch.

    Attributes
    ----------
    eval : callable
        Position map (u, v) -> Vec3.
    domain : Rect
        Admissible chart rectangle; closed edges may be evaluated but the
        jet there can be degenerate.
    orientation_sign : int
        +1 or -1; the unit normal is orientation_sign * (p_u x p_v)/|...|.
    jet : callable or None
        Analytic 2-jet (u, v) -> Jet2, present for the built-in surfaces.
    known_K : float or None
        The constant Gaussian curvature this patch is supposed to have,
        for downstream cross-checks; None if not constant/known.
    """

    eval: Callable[[float, float], Vec3]
    domain: Rect
    orientation_sign: int = 1
    jet: Optional[Callable[[float, float], Jet2]] = None
    known_K: Optional[float] = None
    name: str = "patch"


def eval_jet(patch: SurfacePatch, u: float, v: float, mode: str = JET_MODE_ANALYTIC) -> Jet2:
    """Evaluate the 2-jet of a patch at a chart point.

    Parameters
    ----------
    mode : "analytic" or "finite_difference"
        Analytic mode requires the patch to carry an analytic jet.
        Finite-difference mode uses only the position map: central
        differences with step cbrt(eps)*max(1,|coord|) for first partials
        and the fourth root for second partials, one Richardson level each.

    Raises
    ------
    OutOfDomain
        If (u, v) is outside the domain (closed edges count as inside),
        or if a finite-difference stencil cannot fit inside the domain.
    BadParameter
        If mode is unknown or analytic mode is requested without an
        analytic jet.
    """
    if not patch.domain.contains(u, v):
        raise OutOfDomain(f"({u}, {v}) outside domain of {patch.name}")
    if mode == JET_MODE_ANALYTIC:
        if patch.jet is None:
            raise BadParameter(f"{patch.name} has no analytic jet; use finite_difference")
        return patch.jet(u, v)
    if mode != JET_MODE_FD:
        raise BadParameter(f"unknown jet mode {mode!r}")
    return _fd_jet(patch, u, v)


def _fd_jet(patch: SurfacePatch, u: float, v: float) -> Jet2:
    dom = patch.domain
    hu1 = fit_step(scaled_step(u, STEP_FIRST), u, dom.u.lo, dom.u.hi)
    hv1 = fit_step(scaled_step(v, STEP_FIRST), v, dom.v.lo, dom.v.hi)
    hu2 = fit_step(scaled_step(u, STEP_SECOND), u, dom.u.lo, dom.u.hi)
    hv2 = fit_step(scaled_step(v, STEP_SECOND), v, dom.v.lo, dom.v.hi)
    if min(hu1, hv1, hu2, hv2) <= 0.0:
        raise OutOfDomain(
            f"no room for finite-difference stencil at ({u}, {v}) in {patch.name}"
        )

    fu = lambda uu: patch.eval(uu, v).as_array()
    fv = lambda vv: patch.eval(u, vv).as_array()

    p = patch.eval(u, v)
    p_u = _rich(central_first, fu, u, hu1)
    p_v = _rich(central_first, fv, v, hv1)
    p_uu = _rich(central_second, fu, u, hu2)
    p_vv = _rich(central_second, fv, v, hv2)
    p_uv = _rich_mixed(patch, u, v, hu2, hv2)
    return Jet2(
        p=p,
        p_u=Vec3.from_array(p_u),
        p_v=Vec3.from_array(p_v),
        p_uu=Vec3.from_array(p_uu),
        p_uv=Vec3.from_array(p_uv),
        p_vv=Vec3.from_array(p_vv),
    )


def _rich(op, f, x, h):
    d1 = op(f, x, h)
    d2 = op(f, x, h / 2.0)
    return d2 + (d2 - d1) / 3.0


def _cross_stencil(patch, u, v, h, k):
    e = lambda uu, vv: patch.eval(uu, vv).as_array()
    return (
        e(u + h, v + k) - e(u + h, v - k) - e(u - h, v + k) + e(u - h, v - k)
    ) / (4.0 * h * k)


def _rich_mixed(patch, u, v, h, k):
    d1 = _cross_stencil(patch, u, v, h, k)
    d2 = _cross_stencil(patch, u, v, h / 2.0, k / 2.0)
    return d2 + (d2 - d1) / 3.0


def unit_normal(jet: Jet2, sign: int) -> Vec3:
    """Unit normal for the given orientation sign.

    Raises DegenerateJet when |p_u x p_v| < 1e-12.
    """
    if sign not in (1, -1):
        raise BadParameter("orientation sign must be +1 or -1")
    c = jet.p_u.cross(jet.p_v)
    n = c.norm()
    if n < DEGENERACY_THRESHOLD:
        raise DegenerateJet(f"|p_u x p_v| = {n:.3e} below degeneracy threshold")
    return c * (sign / n)


def fundamental_forms(
    patch: SurfacePatch, u: float, v: float, mode: Optional[str] = None
) -> FormCoefficients:
    """First and second fundamental form coefficients at a chart point.

    The normal partials N_u, N_v are obtained by differentiating the
    normalized cross product symbolically in terms of the jet's second
    partials, so the same code path serves analytic and finite-difference
    jets.  mode=None picks analytic when the patch has one.
    """
    jet = eval_jet(patch, u, v, _pick_mode(patch, mode))
    return forms_from_jet(jet, patch.orientation_sign)


def forms_from_jet(jet: Jet2, sign: int) -> FormCoefficients:
    p_u, p_v = jet.p_u, jet.p_v
    E = p_u.dot(p_u)
    F = p_u.dot(p_v)
    G = p_v.dot(p_v)

    c = p_u.cross(p_v)
    cn = c.norm()
    if cn < DEGENERACY_THRESHOLD:
        raise DegenerateJet(f"|p_u x p_v| = {cn:.3e} below degeneracy threshold")
    c_u = jet.p_uu.cross(p_v) + p_u.cross(jet.p_uv)
    c_v = jet.p_uv.cross(p_v) + p_u.cross(jet.p_vv)
    # d/du [ c/|c| ] = c_u/|c| - c <c, c_u>/|c|^3
    n_u = (c_u / cn - c * (c.dot(c_u) / cn**3)) * sign
    n_v = (c_v / cn - c * (c.dot(c_v) / cn**3)) * sign

    e = n_u.dot(p_u)
    f = n_u.dot(p_v)
    g = n_v.dot(p_v)
    return FormCoefficients(E=E, F=F, G=G, e=e, f=f, g=g)


def gaussian_curvature(
    patch: SurfacePatch, u: float, v: float, mode: Optional[str] = None
) -> float:
    """K = (e*g - f^2) / (E*G - F^2)."""
    forms = fundamental_forms(patch, u, v, mode)
    denom = forms.E * forms.G - forms.F * forms.F
    if denom <= 0.0:
        raise DegenerateJet("first form is not positive definite")
    return (forms.e * forms.g - forms.f * forms.f) / denom


def _pick_mode(patch: SurfacePatch, mode: Optional[str]) -> str:
    if mode is not None:
        return mode
    return JET_MODE_ANALYTIC if patch.jet is not None else JET_MODE_FD


# ---------------------------------------------------------------------------
# built-in surfaces


def surface_of_revolution(
    x: Callable[[float], float],
    z: Callable[[float], float],
    *,
    dx: Optional[Callable[[float], float]] = None,
    d2x: Optional[Callable[[float], float]] = None,
    dz: Optional[Callable[[float], float]] = None,
    d2z: Optional[Callable[[float], float]] = None,
    v_domain,
    u_domain=Interval(-math.inf, math.inf),
    orientation_sign: int = 1,
    known_K: Optional[float] = None,
    name: str = "revolution",
) -> SurfacePatch:
    """Surface of revolution (x(v) cos u, x(v) sin u, z(v)).

    When all four profile derivatives are supplied the patch carries an
    analytic jet; otherwise only finite-difference jets are available.
    Domains may be Interval instances or plain (lo, hi) pairs, which are
    taken as open intervals.
    """
    if not isinstance(v_domain, Interval):
        v_domain = Interval(*v_domain)
    if not isinstance(u_domain, Interval):
        u_domain = Interval(*u_domain)

    def position(u: float, v: float) -> Vec3:
        r = x(v)
        return Vec3(r * math.cos(u), r * math.sin(u), z(v))

    jet = None
    if all(fn is not None for fn in (dx, d2x, dz, d2z)):

        def jet(u: float, v: float) -> Jet2:
            cu, su = math.cos(u), math.sin(u)
            r, r1, r2 = x(v), dx(v), d2x(v)
            h, h1, h2 = z(v), dz(v), d2z(v)
            return Jet2(
                p=Vec3(r * cu, r * su, h),
                p_u=Vec3(-r * su, r * cu, 0.0),
                p_v=Vec3(r1 * cu, r1 * su, h1),
                p_uu=Vec3(-r * cu, -r * su, 0.0),
                p_uv=Vec3(-r1 * su, r1 * cu, 0.0),
                p_vv=Vec3(r2 * cu, r2 * su, h2),
            )

    return SurfacePatch(
        eval=position,
        domain=Rect(u=u_domain, v=v_domain),
        orientation_sign=orientation_sign,
        jet=jet,
        known_K=known_K,
        name=name,
    )


def plane_patch() -> SurfacePatch:
    """Flat plane in polar-style coordinates (v cos u, v sin u, 0), v > 0.

    Oriented so the unit normal is (0, 0, 1); with chart order (angle,
    radius) that requires orientation_sign = -1.
    """
    return surface_of_revolution(
        x=lambda v: v,
        z=lambda v: 0.0,
        dx=lambda v: 1.0,
        d2x=lambda v: 0.0,
        dz=lambda v: 0.0,
        d2z=lambda v: 0.0,
        v_domain=Interval(0.0, math.inf),
        orientation_sign=-1,
        known_K=0.0,
        name="plane",
    )


def sphere_patch(R: float = 1.0) -> SurfacePatch:
    """Round sphere of radius R, chart (u, v) = (longitude, colatitude).

    Oriented by the outward normal, which for this chart order is
    -(p_u x p_v)/|p_u x p_v|.
    """
    if R <= 0.0:
        raise BadParameter("sphere radius must be positive")
    return surface_of_revolution(
        x=lambda v: R * math.sin(v),
        z=lambda v: R * math.cos(v),
        dx=lambda v: R * math.cos(v),
        d2x=lambda v: -R * math.sin(v),
        dz=lambda v: -R * math.sin(v),
        d2z=lambda v: -R * math.cos(v),
        v_domain=Interval(0.0, math.pi),
        orientation_sign=-1,
        known_K=1.0 / (R * R),
        name=f"sphere(R={R:g})",
    )


def pseudosphere_patch(R: float = 1.0, v_floor: float = 1e-3) -> SurfacePatch:
    """Tractroid of constant curvature -1/R^2.

    Chart (u, v) with v in [v_floor, pi/2]; the rim v = pi/2 is a closed
    edge where the position is fine but the jet is degenerate (the chart
    collapses along the cusp circle).  Oriented by the outward normal,
    which for this chart order is +(p_u x p_v)/|p_u x p_v|.
    """
    if R <= 0.0:
        raise BadParameter("pseudosphere radius must be positive")
    if not 0.0 < v_floor < math.pi / 2:
        raise BadParameter("v_floor must lie in (0, pi/2)")

    def z(v: float) -> float:
        return R * (math.log(math.tan(v / 2.0)) + math.cos(v))

    def dz(v: float) -> float:
        s = math.sin(v)
        c = math.cos(v)
        return R * c * c / s

    def d2z(v: float) -> float:
        s = math.sin(v)
        c = math.cos(v)
        return -R * c * (1.0 + s * s) / (s * s)

    return surface_of_revolution(
        x=lambda v: R * math.sin(v),
        z=z,
        dx=lambda v: R * math.cos(v),
        d2x=lambda v: -R * math.sin(v),
        dz=dz,
        d2z=d2z,
        v_domain=Interval(v_floor, math.pi / 2, closed_lo=True, closed_hi=True),
        orientation_sign=1,
        known_K=-1.0 / (R * R),
        name=f"pseudosphere(R={R:g})",
    )
