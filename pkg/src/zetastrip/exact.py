"""Exact integral representations of zeta and of the basic sum.

* ``zeta_exact``: zeta(1-s) = sum_{n<=[eta/2pi]} n^(s-1) - eta^s/(s (2pi)^s) + G_L + G_U,
  zeta(s) = chi(s) zeta(1-s), with

      G_L = e^(i pi s/2)/(2pi)^s  int_{-i eta}^{inf e^(i phi1)} e^-z z^(s-1)/(1 - e^-z) dz,
      G_U = e^(-i pi s/2)/(2pi)^s int_{ i eta}^{inf e^(i phi2)} (same),

  logarithm cut along the negative real axis.
* ``basic_sum_semicircle``: R and L over the right/left semicircles joining
  i eta and i t, with R + L = sum_{[eta/2pi] < n <= [t/2pi]} n^(s-1).
* ``basic_sum_pv``: R - L = 2 (2pi)^-s PV int_eta^t rho^(s-1)/(e^(i rho) - 1) d rho.
* ``basic_sum_rotated``: the same integral along a ray rotated by -eps.
"""

import math

import mpmath

from .config import DEFAULT_DELTA, DEFAULT_PRECISION_BITS, DEFAULT_QUAD_TOL
from .errors import QuadratureFailure, TooCloseToLatticePoint
from .hp import ComplexHP, as_point, check_eta_lattice, ifloor, make_result, power_sum
from .quadrature import RayPath, SemicirclePath, integrate_path, integrate_segment
from .special import _chi

mp = mpmath.mp


def _kernel(s):
    """z -> z^(s-1)/(e^z - 1) = e^-z z^(s-1)/(1 - e^-z), principal branch."""
    sm1 = s - 1

    def f(z):
        return mpmath.exp(sm1 * mpmath.log(z)) / mpmath.expm1(z)

    return f


def _peak_bits(f, path, samples):
    """log2 of the largest |f| over sample points of the path, at low precision."""
    best = 0.0
    with mp.workprec(64):
        for x in samples:
            try:
                v = abs(f(path.z(x)))
            except (ZeroDivisionError, ValueError):
                continue
            if v > 0:
                best = max(best, float(mpmath.log(v, 2)))
    return max(0, int(math.ceil(best)))


def _ray_samples(limit=400.0, k=200):
    return [limit * (j / k) ** 2 for j in range(k + 1)]


def _auto_angle(t, sign):
    """Ray angle for the integral from sign*i*eta.

    When sign*t > 0 the integrand times its prefactor grows like
    e^(t (pi/2 - |arg z|)) along a horizontal ray before cancelling; tilting the
    ray to pi/2 - delta caps that growth at e^(t delta), delta = 40/|t|.
    """
    t = float(t)
    if sign * t <= 0:
        return mpmath.mpf(0)
    delta = min(math.pi / 2, 40 / abs(t))
    return sign * (mpmath.pi / 2 - delta)


def _ray_integral(s, eta, sign, phi, tol):
    """Prefactor times the ray integral from sign*i*eta (sign = -1: G_L, +1: G_U)."""
    if phi is None:
        phi = _auto_angle(mpmath.im(s), sign)
    pref = mpmath.exp(sign * -1j * mpmath.pi * s / 2) * mpmath.power(2 * mpmath.pi, -s)
    ker = _kernel(s)

    def f(z):
        return pref * ker(z)

    path = RayPath(sign * 1j * eta, phi, step=1)
    extra = _peak_bits(f, path, _ray_samples(limit=float(max(60, 4 * abs(float(mpmath.im(s)))))))
    with mp.workprec(mp.prec + extra):
        res = integrate_path(f, path, tol, r_max=1e7)
    return res


def _check_eta(eta, delta):
    check_eta_lattice(eta, delta)
    if not mpmath.mpf(eta) > 0:
        raise ValueError("eta must be positive")


def gl_gu_raw(s, eta, tol=DEFAULT_QUAD_TOL, phi1=None, phi2=None):
    """(G_L, G_U, error estimate) for any complex s at the ambient precision."""
    gl = _ray_integral(s, eta, -1, phi1, tol / 2)
    gu = _ray_integral(s, eta, +1, phi2, tol / 2)
    return gl.value, gu.value, gl.error + gu.error


def gl_gu(s, eta, tol=DEFAULT_QUAD_TOL, phi1=None, phi2=None, prec=None, delta=DEFAULT_DELTA):
    """The two ray integrals G_L and G_U with their prefactors; ray angles default to
    a t-dependent choice (see _auto_angle)."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    _check_eta(eta, delta)
    with mp.workprec(prec + 20):
        gl, gu, _ = gl_gu_raw(p.s, mpmath.mpf(eta), tol, phi1, phi2)
    return ComplexHP(gl, prec), ComplexHP(gu, prec)


def zeta_exact(s, eta, tol=DEFAULT_QUAD_TOL, phi1=None, phi2=None, prec=None, delta=DEFAULT_DELTA):
    """zeta(s) from the exact representation; terms expose zeta(1-s)."""
    p = as_point(s, relaxed=isinstance(s, tuple) is False and not hasattr(s, "sigma"))
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    _check_eta(eta, delta)
    with mp.workprec(prec + 20):
        sv = p.s
        eta = mpmath.mpf(eta)
        M = ifloor(eta / (2 * mpmath.pi))
        main = power_sum(1 - sv, 1, M)
        eterm = -mpmath.power(eta, sv) / (sv * mpmath.power(2 * mpmath.pi, sv))
        gl, gu, qerr = gl_gu_raw(sv, eta, tol, phi1, phi2)
        z1ms = main + eterm + gl + gu
        ch = _chi(sv)
        val = ch * z1ms
        err = abs(ch) * qerr
    with mp.workprec(prec):
        return make_result(
            val,
            err,
            {"sum": main, "eta_term": eterm, "G_L": gl, "G_U": gu},
            "exact",
            prec,
            meta={"zeta_1ms": ComplexHP(z1ms, prec), "chi": ComplexHP(ch, prec), "quad_error": float(qerr)},
        )


# basic sum -----------------------------------------------------------------------


def _semicircle_breaks(path, t_hi, eta):
    a, b = path.domain()
    r = float(path.radius)
    # integrand varies on scale ~1 near i t and ~eta/t near i eta
    fine = min(1.0, float(eta) / float(t_hi)) / max(r, 1.0)
    pts = {a, b, (a + b) / 2}
    half = (b - a) / 2
    d = half
    while d > fine / 4:
        pts.add(a + d)
        pts.add(b - d)
        d /= 2
    return sorted(pts)


def semicircle_integral(s, eta, t_hi, side, tol=DEFAULT_QUAD_TOL):
    pref = mpmath.exp(-1j * mpmath.pi * s / 2) * mpmath.power(2 * mpmath.pi, -s)
    ker = _kernel(s)

    def f(z):
        return pref * ker(z)

    path = SemicirclePath(eta, t_hi, side)
    a, b = path.domain()
    extra = _peak_bits(f, path, [a + (b - a) * j / 200 for j in range(201)])
    with mp.workprec(mp.prec + extra):
        res = integrate_path(f, path, tol, breaks=_semicircle_breaks(path, t_hi, eta))
    return res


def _check_pair(eta, t_hi, delta):
    check_eta_lattice(eta, delta, "eta")
    check_eta_lattice(t_hi, delta, "t")
    if not 0 < mpmath.mpf(eta) < mpmath.mpf(t_hi):
        raise ValueError("need 0 < eta < t")


def basic_sum_semicircle(s, eta, t_hi, tol=DEFAULT_QUAD_TOL, prec=None, delta=DEFAULT_DELTA):
    """(R, L) semicircle integrals between i eta and i t_hi."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    _check_pair(eta, t_hi, delta)
    with mp.workprec(prec + 20):
        R = semicircle_integral(p.s, mpmath.mpf(eta), mpmath.mpf(t_hi), "right", tol / 2)
        L = semicircle_integral(p.s, mpmath.mpf(eta), mpmath.mpf(t_hi), "left", tol / 2)
    return ComplexHP(R.value, prec), ComplexHP(L.value, prec)


def _real_breaks(a, b, t):
    """Initial panels on [a, b]: width ~ 4 rho/t to follow the phase t log rho."""
    pts = [a]
    x = a
    while x < b:
        x = min(b, x + max(mpmath.mpf(0.05), min(mpmath.mpf(2), 4 * x / max(t, 1))))
        pts.append(x)
    return pts


def _pv_integral(s, eta, t_hi, tol):
    """PV int_eta^t rho^(s-1)/(e^(i rho) - 1) d rho, poles at 2 pi n excised symmetrically."""
    sm1 = s - 1
    t = mpmath.im(s)

    def f(r):
        return mpmath.exp(sm1 * mpmath.log(r)) / mpmath.expm1(1j * r)

    two_pi = 2 * mpmath.pi
    n_lo = ifloor(eta / two_pi) + 1
    n_hi = ifloor(t_hi / two_pi)
    pieces = []
    left = eta
    for n in range(n_lo, n_hi + 1):
        c = two_pi * n
        h = min(mpmath.pi, c - eta, t_hi - c) / 2 if n in (n_lo, n_hi) else mpmath.pi / 2
        pieces.append(("reg", left, c - h))
        pieces.append(("pv", c, h))
        left = c + h
    pieces.append(("reg", left, t_hi))
    npieces = len(pieces)
    total = mpmath.mpc(0)
    err = mpmath.mpf(0)
    for kind, a, b in pieces:
        if kind == "reg":
            if b <= a:
                continue
            res = integrate_segment(f, a, b, tol / npieces, breaks=_real_breaks(a, b, t))
        else:
            c, h = a, b

            def sym(x, c=c):
                return f(c + x) + f(c - x)

            res = integrate_segment(sym, 0, h, tol / npieces, breaks=_real_breaks(mpmath.mpf(0), h, t * h / c))
        total += res.value
        err += res.error
    return total, err


def basic_sum_pv(s, eta, t_hi, tol=DEFAULT_QUAD_TOL, prec=None, delta=DEFAULT_DELTA):
    """2 (2 pi)^-s PV int_eta^t rho^(s-1)/(e^(i rho) - 1) d rho  (= R - L)."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    _check_pair(eta, t_hi, delta)
    with mp.workprec(prec + 20):
        sv = p.s
        scale = 2 * mpmath.power(2 * mpmath.pi, -sv)
        I, _ = _pv_integral(sv, mpmath.mpf(eta), mpmath.mpf(t_hi), tol / abs(scale))
        v = scale * I
    return ComplexHP(v, prec)


def basic_sum_rotated(s, eta, t_hi, eps, tol=DEFAULT_QUAD_TOL, prec=None, delta=DEFAULT_DELTA):
    """e^(-i eps s)(2 pi)^-s int_eta^t u^(s-1)/(e^(i u e^(-i eps)) - 1) du.

    The near-poles u_k = 2 pi k e^(i eps) are handled by subtracting
    res_k/(u - u_k) and adding back res_k [log(b - u_k) - log(a - u_k)].
    With eps = 0 the integral is only defined when no 2 pi k lies in range.
    """
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    _check_pair(eta, t_hi, delta)
    with mp.workprec(prec + 40):
        sv = p.s
        eps = mpmath.mpf(eps)
        eta = mpmath.mpf(eta)
        t_hi = mpmath.mpf(t_hi)
        rot = mpmath.expj(-eps)
        sm1 = sv - 1
        t = p.tt
        two_pi = 2 * mpmath.pi
        n_lo = ifloor(eta / two_pi) + 1
        n_hi = ifloor(t_hi / two_pi)
        if eps == 0 and n_hi >= n_lo:
            raise TooCloseToLatticePoint("eps = 0 with poles of the integrand inside (eta, t)")

        def f(u):
            return mpmath.exp(sm1 * mpmath.log(u)) / mpmath.expm1(1j * u * rot)

        total = mpmath.mpc(0)
        left = eta
        npieces = 2 * max(n_hi - n_lo + 1, 0) + 1
        for n in range(n_lo, n_hi + 1):
            uk = two_pi * n / rot
            res_k = mpmath.exp(sm1 * mpmath.log(uk)) / (1j * rot)
            c = two_pi * n
            h = min(mpmath.pi, c - eta, t_hi - c) / 2 if n in (n_lo, n_hi) else mpmath.pi / 2
            total += integrate_segment(f, left, c - h, tol / npieces, breaks=_real_breaks(left, c - h, t)).value

            def g(u, uk=uk, res_k=res_k):
                return f(u) - res_k / (u - uk)

            a, b = c - h, c + h
            total += integrate_segment(g, a, b, tol / npieces, breaks=[a, c, b]).value
            total += res_k * (mpmath.log(b - uk) - mpmath.log(a - uk))
            left = b
        total += integrate_segment(f, left, t_hi, tol / npieces, breaks=_real_breaks(left, t_hi, t)).value
        v = mpmath.exp(-1j * eps * sv) * mpmath.power(two_pi, -sv) * total
    return ComplexHP(v, prec)
