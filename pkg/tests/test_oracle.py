import math

import mpmath
import pytest

from zetastrip import StripPoint, zeta_reference, zeta_reference_result, zeta_truncated_dirichlet
from zetastrip.errors import PoleAt, RegimeViolation


def test_zeta_two():
    for d in (30, 60):
        assert abs(zeta_reference(2, d).v - mpmath.pi**2 / 6) < mpmath.mpf(10) ** -d


def test_conjugate_symmetry():
    a = zeta_reference(mpmath.mpc(0.5, 25)).v
    b = zeta_reference(mpmath.mpc(0.5, -25)).v
    assert abs(a - mpmath.conj(b)) < mpmath.mpf(10) ** -30


def _Z(t, digits):
    with mpmath.workprec(256):
        t = mpmath.mpf(t)
        theta = mpmath.im(mpmath.loggamma(mpmath.mpf(1) / 4 + 1j * t / 2)) - t / 2 * mpmath.log(mpmath.pi)
        return mpmath.re(mpmath.expj(theta) * zeta_reference(mpmath.mpc(0.5, t), digits).v)


def test_first_zero_bracket():
    lo, hi = mpmath.mpf("14.1"), mpmath.mpf("14.2")
    for digits in (20, 40):
        zl, zh = _Z(lo, digits), _Z(hi, digits)
        assert zl * zh < 0
    a, b = lo, hi
    za = _Z(a, 30)
    for _ in range(40):
        m = (a + b) / 2
        zm = _Z(m, 30)
        if zm * za < 0:
            b = m
        else:
            a, za = m, zm
    assert 14.1 < a < 14.2
    assert abs(a - mpmath.mpf("14.134725141734693790457251983562")) < 1e-10


def test_digit_ladder():
    for s in (mpmath.mpc(0.5, 100), mpmath.mpc(0.2, 1234.5), mpmath.mpc(1, 10)):
        a = zeta_reference(s, 30).v
        b = zeta_reference(s, 40).v
        assert abs(a - b) < mpmath.mpf(10) ** -30


def test_reference_carries_bound():
    r = zeta_reference_result(mpmath.mpc(0.5, 1e6), 30)
    assert r.predicted_error_mag < 1e-30
    assert r.meta["N"] > 0 and r.meta["K"] > 0


def test_reference_pole_and_budget():
    with pytest.raises(PoleAt):
        zeta_reference(1)
    with pytest.raises(ValueError):
        zeta_reference(mpmath.mpc(0.5, 10), digits=500)


def test_truncated_dirichlet_residual():
    s = StripPoint(0.5, 50)
    r = zeta_truncated_dirichlet(s, 1000)
    assert abs(r.v - zeta_reference(s).v) < 10 * 1000**-0.5
    assert r.predicted_error_mag == pytest.approx(1000**-0.5)


def test_truncated_dirichlet_slope():
    s = StripPoint(0.7, 50)
    ref = zeta_reference(s).v
    xs = [1e3, 1e4, 1e5]
    ly = [math.log10(float(abs(zeta_truncated_dirichlet(s, x).v - ref))) for x in xs]
    lx = [math.log10(x) for x in xs]
    mx, my = sum(lx) / 3, sum(ly) / 3
    slope = sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum((a - mx) ** 2 for a in lx)
    assert slope == pytest.approx(-0.7, abs=0.1)


def test_truncated_dirichlet_regime():
    with pytest.raises(RegimeViolation):
        zeta_truncated_dirichlet(StripPoint(0.5, 1000), 100)
    with pytest.raises(RegimeViolation):
        zeta_truncated_dirichlet(StripPoint(0, 10), 100)
