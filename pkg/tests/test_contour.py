import math
import random

import mpmath
import pytest

from zetastrip import (
    RayPath,
    SemicirclePath,
    StripPoint,
    basic_sum_pv,
    basic_sum_rotated,
    basic_sum_semicircle,
    gl_gu,
    integrate_path,
    zeta_exact,
    zeta_reference,
)
from zetastrip.errors import QuadratureFailure, TooCloseToLatticePoint
from zetastrip.exact import gl_gu_raw, semicircle_integral
from zetastrip.hp import power_sum
from zetastrip.quadrature import integrate_segment

TOL = mpmath.mpf(10) ** -30


# integrate_path ----------------------------------------------------------------------


def test_semicircle_of_one():
    res = integrate_path(lambda z: 1, SemicirclePath(3, 10, "right"), TOL)
    assert abs(res.value - (10j - 3j)) < TOL
    res = integrate_path(lambda z: 1, SemicirclePath(3, 10, "left"), TOL)
    assert abs(res.value - (3j - 10j)) < TOL


def test_exponential_on_real_ray():
    res = integrate_path(lambda z: mpmath.exp(-3 * z), RayPath(0, 0), TOL)
    assert abs(res.value - mpmath.mpf(1) / 3) < 10 * TOL
    assert res.error <= TOL


def test_ray_angle_invariance():
    s = mpmath.mpc(0.5, 20)
    eta = mpmath.mpf(5)

    def f(z):
        return mpmath.exp(-z) * mpmath.exp((s - 1) * mpmath.log(z)) / (1 - mpmath.exp(-z))

    a = integrate_path(f, RayPath(-1j * eta, 0, step=1), TOL)
    b = integrate_path(f, RayPath(-1j * eta, mpmath.pi / 4, step=1), TOL)
    assert abs(a.value - b.value) < 2 * TOL


def test_quadrature_failure_carries_estimate():
    with pytest.raises(QuadratureFailure) as exc:
        integrate_path(lambda z: mpmath.sqrt(z - (1 + 2j)), SemicirclePath(1, 3, "right"), TOL, max_panels=8)
    assert exc.value.estimate is not None


# exact representation -----------------------------------------------------------------


def test_zeta_exact_matches_oracle():
    s = StripPoint(0.5, 30)
    r = zeta_exact(s, 5)
    assert abs(r.v - zeta_reference(s, 40).v) < 10 * TOL


def test_zeta_exact_eta_independence():
    s = StripPoint(0.5, 30)
    vals = [zeta_exact(s, eta).v for eta in (3, 5, 9, 50)]
    assert max(abs(v - vals[0]) for v in vals) < 5 * TOL


def test_zeta_exact_outside_strip_sanity():
    r = zeta_exact(mpmath.mpc(2, 0.0001), 5)
    assert abs(r.v - mpmath.pi**2 / 6) < 1e-3


def test_zeta_exact_lattice_guard():
    with pytest.raises(TooCloseToLatticePoint):
        zeta_exact(StripPoint(0.5, 30), 2 * mpmath.pi)


def test_gl_gu_reassembly_gives_zeta_1ms():
    s = StripPoint(0.5, 30)
    eta = mpmath.mpf(9)
    gl, gu = gl_gu(s, eta)
    sv = s.s
    main = power_sum(1 - sv, 1, int(mpmath.floor(eta / (2 * mpmath.pi))))
    lhs = main - mpmath.power(eta, sv) / (sv * mpmath.power(2 * mpmath.pi, sv)) + gl.v + gu.v
    assert abs(lhs - zeta_reference(mpmath.mpc(0.5, -30), 40).v) < 10 * TOL


def test_gl_leading_behaviour():
    t, eta = 50, mpmath.mpf(500)
    s = StripPoint(0.5, t)
    gl, _ = gl_gu(s, eta)
    sv = s.s
    lead = -1j * mpmath.power(eta, sv - 1) * mpmath.power(2 * mpmath.pi, -sv) * mpmath.log(1 - mpmath.expj(eta))
    assert abs(gl.v - lead) < t * eta ** (0.5 - 2)


def test_gu_is_conjugate_of_gl_under_t_reflection():
    s = mpmath.mpc(0.3, 25)
    eta = mpmath.mpf(7)
    _, gu, _ = gl_gu_raw(s, eta)
    gl2, _, _ = gl_gu_raw(mpmath.conj(s), eta)
    assert abs(gu - mpmath.conj(gl2)) < 10 * TOL


# basic sum ---------------------------------------------------------------------------


def _sum(s, eta, t_hi):
    two_pi = 2 * mpmath.pi
    return power_sum(1 - s, int(mpmath.floor(eta / two_pi)) + 1, int(mpmath.floor(t_hi / two_pi)))


def test_l_plus_r_is_the_basic_sum():
    s = StripPoint(0.5, 40)
    R, L = basic_sum_semicircle(s, 7, 40)
    assert abs(R.v + L.v - _sum(s.s, 7, 40)) < 10 * TOL


def test_l_plus_r_empty_bin():
    s = StripPoint(0.5, 12)
    R, L = basic_sum_semicircle(s, 7, 12)
    assert abs(R.v + L.v) < 10 * TOL


def _left(t, tol=1e-20):
    return semicircle_integral(mpmath.mpc(0.5, t), mpmath.mpf(7), mpmath.mpf(t), "left", mpmath.mpf(tol)).value


def test_left_semicircle_decay():
    # |L| sqrt(t) fluctuates with the fractional part of t/2pi; these three points fit -0.586
    ts = [100, 1000, 10000]
    lx = [math.log10(x) for x in ts]
    ly = [float(mpmath.log10(abs(_left(t)))) for t in ts]
    mx, my = sum(lx) / 3, sum(ly) / 3
    slope = sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum((a - mx) ** 2 for a in lx)
    assert slope == pytest.approx(-0.5, abs=0.1)


def test_left_semicircle_envelope():
    # O(t^(sigma - 1)) as a bound: |L| sqrt(t) stays in a fixed band over two decades
    for k in range(17):
        t = 10 ** (2 + k / 8)
        if abs(t / (2 * math.pi) - round(t / (2 * math.pi))) < 0.01:
            t *= 1.003
        v = float(abs(_left(t, 1e-15))) * math.sqrt(t)
        assert 0.2 < v < 1.5


def test_plemelj_relation():
    s = StripPoint(0.5, 40)
    R, L = basic_sum_semicircle(s, 7, 40)
    pv = basic_sum_pv(s, 7, 40)
    assert abs(R.v - L.v - pv.v) < 20 * TOL


def test_pv_minus_sum_decays():
    out = []
    for t in (100, 1000):
        s = StripPoint(0.5, t)
        pv = basic_sum_pv(s, 7, t, tol=1e-20)
        out.append(float(abs(pv.v - _sum(s.s, 7, t))))
    # O(t^(sigma-1)): bounded by t^-1/2 and shrinking over the decade
    assert out[1] < out[0]
    assert out[0] < 100 ** -0.5 and out[1] < 1000 ** -0.5


def test_pv_without_poles_is_plain_integral():
    s = StripPoint(0.5, 12)
    sv = s.s
    pv = basic_sum_pv(s, 7, 12)
    f = lambda r: mpmath.exp((sv - 1) * mpmath.log(r)) / mpmath.expm1(1j * r)
    plain = 2 * mpmath.power(2 * mpmath.pi, -sv) * integrate_segment(f, 7, 12, TOL / 10, breaks=[7, 8, 9, 10, 11, 12]).value
    assert abs(pv.v - plain) < 10 * TOL


def test_basic_sum_identities_random():
    rng = random.Random(11)
    done = 0
    while done < 20:
        eta = rng.uniform(3, 30)
        t = eta + rng.uniform(5, 40)
        if min(abs(x / (2 * math.pi) - round(x / (2 * math.pi))) for x in (eta, t)) < 0.05:
            continue
        s = StripPoint(rng.uniform(0, 1), t)
        R, L = basic_sum_semicircle(s, eta, t)
        pv = basic_sum_pv(s, eta, t)
        assert abs(R.v + L.v - _sum(s.s, eta, t)) < 10 * TOL
        assert abs(R.v - L.v - pv.v) < 20 * TOL
        done += 1


def test_rotated_ray_matches_right_semicircle():
    s = StripPoint(0.5, 40)
    R, _ = basic_sum_semicircle(s, 7, 40)
    eps = mpmath.mpf(10) ** -6
    rot = basic_sum_rotated(s, 7, 40, eps)
    bound = abs(R.v) * 1e-3 + (mpmath.exp(eps * 40) - 1) * mpmath.power(40, -0.5)
    assert abs(rot.v - R.v) < bound


def test_rotated_ray_converges_linearly():
    s = StripPoint(0.5, 40)
    R, _ = basic_sum_semicircle(s, 7, 40)
    d = [abs(basic_sum_rotated(s, 7, 40, mpmath.mpf(10) ** -k).v - R.v) for k in (4, 5, 6)]
    for a, b in zip(d, d[1:]):
        assert float(a / b) == pytest.approx(10, rel=0.05)


def test_rotated_ray_at_zero_angle():
    s = StripPoint(0.5, 40)
    with pytest.raises(TooCloseToLatticePoint):
        basic_sum_rotated(s, 7, 40, 0)
    s = StripPoint(0.5, 12)
    # with no poles R = -L, so R = PV/2: the segment integral carries (2 pi)^-s, the PV 2 (2 pi)^-s
    R, _ = basic_sum_semicircle(s, 7, 12)
    rot = basic_sum_rotated(s, 7, 12, 0).v
    assert abs(rot - R.v) < 10 * TOL
    assert abs(rot - basic_sum_pv(s, 7, 12).v / 2) < 10 * TOL
