"""Gamma, the functional-equation factor chi, their large-t forms, and
polylogarithms on the unit circle.

Functions with a leading underscore take and return raw mpmath numbers at
the ambient precision; the public ones wrap results in ComplexHP.
"""

from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .bernoulli import bernoulli_even
from .config import DEFAULT_DELTA, DEFAULT_PRECISION_BITS
from .errors import OutOfAsymptoticRange, PoleAt
from .hp import ComplexHP, as_point, check_eta_lattice

mp = mpmath.mp


def _prec(prec):
    return DEFAULT_PRECISION_BITS if prec is None else int(prec)


# Gamma and chi ------------------------------------------------------------------


def _gamma(z):
    z = mpmath.mpmathify(z)
    if mpmath.im(z) == 0 and mpmath.re(z) <= 0 and mpmath.re(z) == mpmath.floor(mpmath.re(z)):
        raise PoleAt(z)
    return mpmath.gamma(z)


def gamma(s, prec=None):
    """Gamma(s) at ``prec`` bits."""
    prec = _prec(prec)
    if isinstance(s, ComplexHP):
        prec, s = s.prec, s.v
    with mp.workprec(prec + 10):
        v = _gamma(s)
    return ComplexHP(v, prec)


def _chi(s):
    """chi(s) = (2 pi)^s / pi * sin(pi s / 2) * Gamma(1 - s)."""
    s = mpmath.mpmathify(s)
    if s == 1:
        raise PoleAt(s, "chi has a pole at s = 1")
    return mpmath.power(2 * mpmath.pi, s) / mpmath.pi * mpmath.sin(mpmath.pi * s / 2) * _gamma(1 - s)


def chi(s, prec=None):
    prec = _prec(prec)
    p = as_point(s, relaxed=not hasattr(s, "sigma"))
    with mp.workprec(prec + 10 + _extra_bits(p.t)):
        v = _chi(p.s)
    return ComplexHP(v, prec)


def _extra_bits(t):
    t = abs(float(t))
    return int(mpmath.log(t + 2, 2)) + 4


def c_sigma(sigma):
    """c(sigma) = sigma(1 - sigma)/2 - 1/12."""
    sigma = mpmath.mpmathify(sigma)
    return sigma * (1 - sigma) / 2 - mpmath.mpf(1) / 12


@dataclass(frozen=True)
class ChiAsymptotic:
    value: ComplexHP
    order: str  # "leading" or "with_1_over_t"


def chi_asymptotic(s, order="with_1_over_t", prec=None):
    """(2 pi)^(s-1/2) t^(1/2-s) e^(i pi/4) e^(it) [1 - i c(sigma)/t]."""
    prec = _prec(prec)
    p = as_point(s)
    if mpmath.mpf(p.t) < 10:
        raise OutOfAsymptoticRange(f"t = {p.t} < 10")
    with mp.workprec(prec + 10 + _extra_bits(p.t)):
        sv, t = p.s, p.tt
        v = mpmath.power(2 * mpmath.pi, sv - 0.5) * mpmath.power(t, 0.5 - sv)
        v *= mpmath.expjpi(mpmath.mpf(1) / 4) * mpmath.expj(t)
        if order == "with_1_over_t":
            v *= 1 - 1j * c_sigma(p.sig) / t
        elif order != "leading":
            raise ValueError(order)
    return ChiAsymptotic(ComplexHP(v, prec), order)


def gamma1ms_asymptotic(s, order="with_1_over_t", prec=None):
    """sqrt(2 pi) t^(1/2-s) e^(-i pi (1-s)/2) e^(i pi/4) e^(it) [1 - i c(sigma)/t]."""
    prec = _prec(prec)
    p = as_point(s)
    if mpmath.mpf(p.t) < 10:
        raise OutOfAsymptoticRange(f"t = {p.t} < 10")
    with mp.workprec(prec + 10 + _extra_bits(p.t)):
        sv, t = p.s, p.tt
        v = mpmath.sqrt(2 * mpmath.pi) * mpmath.power(t, 0.5 - sv)
        v *= mpmath.exp(-1j * mpmath.pi * (1 - sv) / 2) * mpmath.expjpi(mpmath.mpf(1) / 4) * mpmath.expj(t)
        if order == "with_1_over_t":
            v *= 1 - 1j * c_sigma(p.sig) / t
        elif order != "leading":
            raise ValueError(order)
    return ComplexHP(v, prec)


# polylogarithm on the unit circle -------------------------------------------------


@lru_cache(maxsize=4096)
def _zeta_int_cached(n, prec):
    with mp.workprec(prec):
        if n % 2 == 0:
            b = bernoulli_even(n // 2)
            return (-1) ** (n // 2 + 1) * mpmath.mpf(b.numerator) / b.denominator * (2 * mpmath.pi) ** n / (
                2 * mpmath.factorial(n)
            )
        return mpmath.zeta(n)


def _zeta_at_int(n):
    """zeta(n) for an integer n != 1 at the current precision."""
    if n >= 2:
        return _zeta_int_cached(n, mp.prec)
    if n == 0:
        return mpmath.mpf(-0.5)
    k = -n  # zeta(-k) = -B_(k+1)/(k+1)
    if k % 2 == 0:
        return mpmath.mpf(0)
    b = bernoulli_even((k + 1) // 2)
    return -mpmath.mpf(b.numerator) / b.denominator / (k + 1)


def _reduce_angle(eta):
    """eta mod 2 pi in (-pi, pi]."""
    eta = mpmath.mpf(eta)
    two_pi = 2 * mpmath.pi
    th = eta - two_pi * mpmath.floor(eta / two_pi)
    if th > mpmath.pi:
        th -= two_pi
    return th


class UnitPolylog:
    """Li_m(e^(i eta)) for many m at a fixed angle, at the ambient precision.

    Small m use the expansion about the singular point,
        Li_m(e^w) = sum_{k != m-1} zeta(m-k) w^k/k! + w^(m-1)/(m-1)! (H_(m-1) - log(-w)),
    valid for |w| < 2 pi with w = i theta, theta the reduced angle.  Large m
    use the defining series, whose tail after K terms is below
    1/((m-1) K^(m-1)).
    """

    def __init__(self, eta):
        self.prec = mp.prec
        self.theta = _reduce_angle(eta)
        self.x = mpmath.expj(self.theta)
        self._cache = {}
        self._wpow = None

    def _powers(self):
        if self._wpow is None:
            eps = mpmath.mpf(2) ** (-self.prec - 8)
            w = 1j * self.theta
            r = abs(self.theta) / (2 * mpmath.pi)
            pw = [mpmath.mpc(1)]
            k = 0
            # terms beyond k are bounded by ~ 4 r^k
            while True:
                k += 1
                pw.append(pw[-1] * w / k)
                if k > 8 and 4 * r ** k < eps:
                    break
            self._wpow = pw
        return self._wpow

    def __call__(self, m):
        m = int(m)
        if m < 1:
            raise ValueError("m must be >= 1")
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        if self.theta == 0:
            if m == 1:
                raise PoleAt(1, "Li_1 has a singularity at z = 1")
            v = _zeta_at_int(m)
        elif m == 1:
            v = -mpmath.log(1 - self.x)
        else:
            K = self._direct_terms(m)
            if K is not None:
                v = self._direct(m, K)
            else:
                v = self._expansion(m)
        self._cache[m] = v
        return v

    def _direct_terms(self, m):
        bits = self.prec + 8
        # need (m-1) K^(m-1) > 2^bits
        K = int(mpmath.ceil(mpmath.power(2, mpmath.mpf(bits) / (m - 1)) / mpmath.power(m - 1, mpmath.mpf(1) / (m - 1))))
        return max(K, 2) if K <= 400 else None

    def _direct(self, m, K):
        acc = mpmath.mpc(0)
        xn = mpmath.mpc(1)
        for n in range(1, K + 1):
            xn *= self.x
            acc += xn / mpmath.mpf(n) ** m
        return acc

    def _expansion(self, m):
        pw = self._powers()
        w = 1j * self.theta
        acc = mpmath.mpc(0)
        for k, p in enumerate(pw):
            if k == m - 1:
                continue
            z = _zeta_at_int(m - k)
            if z:
                acc += z * p
        H = mpmath.fsum(mpmath.mpf(1) / j for j in range(1, m))
        acc += pw[m - 1] * (H - mpmath.log(-w)) if m - 1 < len(pw) else (
            w ** (m - 1) / mpmath.factorial(m - 1) * (H - mpmath.log(-w))
        )
        return acc


def _li_unit(m, eta):
    return UnitPolylog(eta)(m)


def polylog_unit(m, eta, prec=None, delta=DEFAULT_DELTA):
    """Li_m(e^(i eta)) for integer m >= 1 at ``prec`` bits."""
    prec = _prec(prec)
    if int(m) != m or m < 1:
        raise ValueError("m must be an integer >= 1")
    check_eta_lattice(eta, delta)
    with mp.workprec(prec + 16):
        v = UnitPolylog(eta)(int(m))
    return ComplexHP(v, prec)


def polylog_partial(m, eta, K):
    """Partial sum of the defining series, sum_{n<=K} e^(i n eta)/n^m, and its tail bound."""
    x = mpmath.expj(mpmath.mpf(eta))
    acc = mpmath.mpc(0)
    xn = mpmath.mpc(1)
    for n in range(1, K + 1):
        xn *= x
        acc += xn / mpmath.mpf(n) ** m
    bound = mpmath.inf if m == 1 else mpmath.mpf(1) / ((m - 1) * mpmath.mpf(K) ** (m - 1))
    return acc, bound
