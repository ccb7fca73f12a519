#!/usr/bin/env python3
"""High-precision reference values for the test suite.

Evaluates every frozen constant used by the tests with mpmath at 250-bit
precision, so the double-precision implementation can be checked against
independently computed numbers.  Run manually; paste the printed values
into the tests when they change (they should not).
"""

import mpmath as mp

mp.mp.prec = 250


def circle_curv(K, r):
    """Geodesic-circle curvature on a constant-curvature surface, directly
    from the defining cot/coth expressions (no series, no double tricks)."""
    K = mp.mpf(K)
    r = mp.mpf(r)
    if K > 0:
        return mp.sqrt(K) / mp.tan(r * mp.sqrt(K))
    if K == 0:
        return 1 / r
    return mp.sqrt(-K) / mp.tanh(r * mp.sqrt(-K))


def circle_curv_dK(K, r):
    K = mp.mpf(K)
    r = mp.mpf(r)
    if K > 0:
        a = r * mp.sqrt(K)
        return (1 / (2 * mp.sqrt(K))) * (1 / mp.tan(a) - a / mp.sin(a) ** 2)
    if K < 0:
        a = r * mp.sqrt(-K)
        return (1 / (2 * mp.sqrt(-K))) * (-1 / mp.tanh(a) + a / mp.sinh(a) ** 2)
    return -r / 3


def show(label, value):
    print(f"{label:<58s} {mp.nstr(value, 25)}")


if __name__ == "__main__":
    pi = mp.pi

    # piecewise curvature values
    show("k(K=-1, r=0.5, theta=pi/3) = cos(pi/3)*coth(0.5)", mp.cos(pi / 3) * circle_curv(-1, "0.5"))
    show("f(-1, r=1) = coth(1)", circle_curv(-1, 1))
    show("f(-4, r=0.5) = 2*coth(1)", circle_curv(-4, "0.5"))
    show("f(2, r=0.7)", circle_curv(2, "0.7"))
    show("k(K=0, r=2, theta=pi/3)", mp.cos(pi / 3) / 2)

    # derivative values
    show("f'(-1, r=1)", circle_curv_dK(-1, 1))
    show("f'(2, r=0.7)", circle_curv_dK(2, "0.7"))
    show("dk/dK(0, r=1, theta=pi/4) = -cos(pi/4)/3", -mp.cos(pi / 4) / 3)
    show("-sqrt(2)/6", -mp.sqrt(2) / 6)

    # geodesic polar metric
    show("G(r=1) for K=-1: sinh(1)^2", mp.sinh(1) ** 2)
    show("sqrtG(r=1.3) for K=2", mp.sin(mp.mpf("1.3") * mp.sqrt(2)) / mp.sqrt(2))

    # series-vs-direct agreement near K = 0
    r = mp.mpf(1)
    for K in (mp.mpf("1e-6"), mp.mpf("-1e-6")):
        x = K * r * r
        series = (1 / r) * (1 - x / 3 - x**2 / 45 - 2 * x**3 / 945)
        show(f"series4 rel err at K={mp.nstr(K, 3)}, r=1",
             abs(series - circle_curv(K, r)) / abs(circle_curv(K, r)))

    # ratio-limit bound at r = 1e-3, K = 4 vs K' = -4
    r = mp.mpf("1e-3")
    ratio = circle_curv(4, r) / circle_curv(-4, r)
    show("|f(4,1e-3)/f(-4,1e-3) - 1|", abs(ratio - 1))
    show("envelope |K-K'| r^2 / 3 * 1.5", 8 * r**2 / 3 * mp.mpf("1.5"))

    # plane spiral arc length, a=1, t in [0, 2]
    show("sqrt(2)*(1-exp(-2))", mp.sqrt(2) * (1 - mp.exp(-2)))

    # pseudosphere loxodrome chart solution u(v) = u0 + cot(theta)*(1 - csc v)
    theta = pi / 3
    for v in (mp.mpf("0.7"), mp.mpf("1.2")):
        show(f"cot(pi/3)*(1 - csc({mp.nstr(v, 3)}))",
             (mp.cos(theta) / mp.sin(theta)) * (1 - 1 / mp.sin(v)))

    # intrinsic spiral angular advance, K = 1/R^2
    R = mp.mpf(1)
    r0, r1 = mp.mpf("0.6"), mp.mpf("1.4")
    adv = mp.log(mp.tan(r1 / (2 * R))) - mp.log(mp.tan(r0 / (2 * R)))
    show("ln tan(0.7) - ln tan(0.3)", adv)
    # same thing for K = -1
    adv_n = mp.log(mp.tanh(r1 / 2)) - mp.log(mp.tanh(r0 / 2))
    show("ln tanh(0.7) - ln tanh(0.3)", adv_n)

    # quadrature cross-check value: integral of 1/sqrt(G) for K=-1, r0=0.6..1.4
    q = mp.quad(lambda s: 1 / mp.sinh(s), [r0, r1])
    show("int 1/sinh from 0.6 to 1.4", q)

    # loxodrome curvature samples on the sphere: cot(v)*cos(arccot(a))
    for Rs, a, v in ((1, 1, mp.mpf("0.8")), (2, mp.mpf("0.5"), mp.mpf("1.1"))):
        th = mp.acot(a)
        show(f"(1/{Rs})cot({mp.nstr(v,3)})cos(arccot({mp.nstr(a,3)}))",
             (1 / mp.mpf(Rs)) * mp.cos(v) / mp.sin(v) * mp.cos(th))
