import math

import pytest

from spiralcurv import (
    NotOrthogonal,
    SurfacePatch,
    Vec3,
    coordinate_curve,
    liouville_breakdown,
    plane_log_spiral,
    plane_patch,
    pseudosphere_loxodrome,
    sphere_loxodrome,
    sphere_patch,
)
from spiralcurv.curves import MERIDIAN, PARALLEL
from spiralcurv.surfaces import Interval, Rect

PI = math.pi


FAMILIES = [
    (plane_log_spiral(1.0), 0.4),
    (sphere_loxodrome(1.0, 1.0), 1.0),
    (pseudosphere_loxodrome(1.0, PI / 3.0), 0.8),
    (coordinate_curve(sphere_patch(1.0), PARALLEL, 0.9), 2.0),
]


@pytest.mark.parametrize("curve,t", FAMILIES)
def test_decomposition_residual(curve, t):
    b = liouville_breakdown(curve, t)
    assert b.residual < 1e-5
    assert b.k_liouville == pytest.approx(b.k_direct, abs=1e-5)


def test_breakdown_fields_on_a_parallel():
    curve = coordinate_curve(sphere_patch(1.0), PARALLEL, 0.9)
    b = liouville_breakdown(curve, 1.5)
    # the curve is itself a parallel: angle 0, no angle drift, k = k1
    assert abs(b.theta) < 1e-12
    assert abs(b.dtheta_dt) < 1e-7
    assert b.k1 == pytest.approx(math.cos(0.9) / math.sin(0.9), rel=1e-8)
    assert b.k_direct == pytest.approx(b.k1, rel=1e-7)


def test_meridian_component_is_geodesic():
    curve = coordinate_curve(sphere_patch(1.0), MERIDIAN, 0.3)
    b = liouville_breakdown(curve, 1.1)
    # radial direction: the sign of the right angle depends on whether the
    # traversal runs toward or away from the pole
    assert abs(abs(b.theta) - PI / 2.0) < 1e-12
    assert abs(b.k2) < 1e-8
    assert abs(b.k_direct) < 1e-8


def test_spiral_terms_add_up():
    curve = plane_log_spiral(1.0)
    t = 0.3
    b = liouville_breakdown(curve, t)
    r = math.exp(-t)
    assert b.k1 == pytest.approx(1.0 / r, rel=1e-7)
    assert abs(b.k2) < 1e-8
    assert b.theta == pytest.approx(PI / 4.0, abs=1e-10)
    # for the flat spiral dtheta/ds = 0: all curvature comes from k1 cos(theta)
    assert abs(b.dtheta_dt) < 1e-7


def test_sheared_chart_rejected():
    patch = SurfacePatch(
        eval=lambda u, v: Vec3(u + v, v, 0.0),
        domain=Rect(
            u=Interval(-math.inf, math.inf), v=Interval(-math.inf, math.inf)
        ),
        orientation_sign=-1,
        name="sheared plane",
    )
    curve = coordinate_curve(patch, PARALLEL, 0.5)
    with pytest.raises(NotOrthogonal):
        liouville_breakdown(curve, 0.0)
