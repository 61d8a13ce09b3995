"""Asymptotic expansions of zeta(s) in the critical strip, to all orders.

Six evaluators, each with an N-term generic path and (where one is printed)
an N = 3 closed form:

* ``zeta_region1``       (1 + eps) t < eta, operator sums at z = +-i eta
* ``zeta_confluent``     eta = t, with the c_k(sigma) tail
* ``zeta_small_eta``     1 < eta < sqrt(t), even Taylor coefficients of phi
* ``zeta_large_eta_mirror``  2 pi sqrt(t) < eta < (2 pi/eps) t, by reflection
* ``zeta_sqrt_region``   eps sqrt(t) < eta < t, S_N built from Phi
* ``zeta_sqrt_mirror``   2 pi < eta < sqrt(t)/eps, by reflection

All evaluators return an EvalResult whose value is the sum of its terms.
Regime conditions raise RegimeViolation when ``strict`` is true and are
recorded in ``warnings`` otherwise.
"""

import math

import mpmath

from .config import DEFAULT_DELTA, DEFAULT_PRECISION_BITS, REGIME_A
from .errors import RegimeViolation, TooCloseToLatticePoint
from .hp import ComplexHP, as_point, dist_to_int, ifloor, make_result, power_sum
from .jets import Jet, jet_reversion
from .phi import PhiArg, _phi_jet_raw
from .sigma_rational import operator_terms
from .special import UnitPolylog, _chi

mp = mpmath.mp

# rational tau with larger p or q goes to quadrature instead of the closed form
PHI_CLOSED_MAX = 5000


# helpers -------------------------------------------------------------------------


class _Checks:
    def __init__(self, method, strict, delta):
        self.method = method
        self.strict = strict
        self.delta = delta
        self.warnings = []

    def regime(self, ok, condition):
        if ok:
            return
        if self.strict:
            raise RegimeViolation(self.method, condition)
        self.warnings.append(f"regime: {condition} violated")

    def soft(self, ok, condition):
        # conditions that only carry an unspecified constant (N < A t ...)
        if not ok:
            self.warnings.append(f"regime: {condition} violated")

    def lattice(self, x, what):
        """x/(2 pi) must stay delta away from the integers."""
        if self.delta is None:
            return
        if dist_to_int(x / (2 * mpmath.pi)) < self.delta:
            msg = f"{what}/(2 pi) within {self.delta} of an integer"
            if self.strict:
                raise TooCloseToLatticePoint(msg)
            self.warnings.append("lattice: " + msg)

    def integer_ratio(self, x, what):
        if self.delta is None:
            return
        if dist_to_int(x) < self.delta:
            msg = f"{what} within {self.delta} of an integer"
            if self.strict:
                raise TooCloseToLatticePoint(msg)
            self.warnings.append("lattice: " + msg)


def _prec(prec, t):
    base = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    return base


def _work(prec, t):
    return prec + 30 + int(math.log2(abs(float(t)) + 2))


def _double_factorial_odd(N):
    out = 1
    for k in range(1, 2 * N + 2, 2):
        out *= k
    return out


def _log_abs_eips_gamma(s):
    """log |e^(-i pi s) Gamma(1 - s)| = pi t + Re log Gamma(1 - s)."""
    return float(mpmath.pi * mpmath.im(s) + mpmath.re(mpmath.loggamma(1 - s)))


def _eips_gamma(s):
    """e^(-i pi s) Gamma(1 - s) via log Gamma."""
    return mpmath.exp(-1j * mpmath.pi * s + mpmath.loggamma(1 - s))


# coefficient machinery -----------------------------------------------------------


def _ck_raw(K, sigma):
    rho = Jet.variable(0, K + 2)
    v = rho - 1j * (1 - 1j * rho).log()
    r = jet_reversion(v, K + 1)  # rho as a series in lambda = sqrt(v)
    q = r.shift_down(1)  # rho/lambda
    f = ((1 - 1j * r).log() * sigma).exp().truncate(K) * q.reciprocal()
    return f.c[: K + 1]


def ck_coefficients(K, sigma, prec=None):
    """c_0(sigma)..c_K(sigma), with (1 - i rho)^sigma / rho = v^(-1/2) sum_k c_k v^(k/2)
    and v = rho - i log(1 - i rho)."""
    if K > 40:
        raise ValueError("K must be <= 40")
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    with mp.workprec(prec + 30):
        cs = _ck_raw(int(K), mpmath.mpf(sigma))
    return [ComplexHP(c, prec) for c in cs]


def _an_raw(sigma, t, eta, N):
    a = [mpmath.mpc(1)]
    for n in range(0, N - 1):
        am2 = a[n - 2] if n >= 2 else 0
        a.append(((sigma - n - 1) * a[n] - 1j * t / eta ** 2 * am2) / (1j * eta * (n + 1)))
    return a[:N]


def an_coefficients(s, eta, N, prec=None):
    """a_0..a_(N-1) from i eta (n+1) a_(n+1) = (sigma - n - 1) a_n - (i t/eta^2) a_(n-2)."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    with mp.workprec(prec + 20):
        a = _an_raw(p.sig, p.tt, mpmath.mpf(eta), int(N))
    return [ComplexHP(x, prec) for x in a]


def _phi_series_raw(s, eta, K):
    z = Jet.variable(0, K)
    t = mpmath.im(s)
    L = ifloor(t / eta)
    num = ((1 + z / (1j * eta)).log() * (s - 1) - z * z * (1j * t / (2 * eta ** 2)) - z * L).exp()
    den = z.exp() - mpmath.expj(-eta)
    return num / den


def _psi_series_raw(s, eta, K):
    z = Jet.variable(0, K)
    t = mpmath.im(s)
    M = ifloor(eta / (2 * mpmath.pi))
    num = ((1 + z * (1j * eta / (2 * mpmath.pi * t))).log() * (-s) + z * z * (1j * eta ** 2 / (8 * mpmath.pi ** 2 * t)) - z * M).exp()
    den = z.exp() - mpmath.expj(2 * mpmath.pi * t / eta)
    return num / den


def phi_series_coeffs(s, eta, K, prec=None, delta=DEFAULT_DELTA):
    """Taylor coefficients phi^(k)(0)/k!, k <= K, of
    phi(z) = exp((s-1) log(1 + z/(i eta)) - i t z^2/(2 eta^2) - [t/eta] z) / (e^z - e^(-i eta))."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    _Checks("phi_series", True, delta).lattice(mpmath.mpf(eta), "eta")
    with mp.workprec(_work(prec, p.t)):
        j = _phi_series_raw(p.s, mpmath.mpf(eta), int(K))
    with mp.workprec(prec):
        return Jet([+c for c in j.c])


def psi_series_coeffs(s, eta, K, prec=None, delta=DEFAULT_DELTA):
    """Taylor coefficients of
    psi(z) = exp(-s log(1 + i eta z/(2 pi t)) + i eta^2 z^2/(8 pi^2 t) - [eta/2pi] z) / (e^z - e^(2 pi i t/eta))."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    with mp.workprec(_work(prec, p.t)):
        _Checks("psi_series", True, delta).lattice(2 * mpmath.pi * p.tt / mpmath.mpf(eta), "2 pi t/eta")
        j = _psi_series_raw(p.s, mpmath.mpf(eta), int(K))
    with mp.workprec(prec):
        return Jet([+c for c in j.c])


# operator sums --------------------------------------------------------------------


def _operator_sum_raw(s, eta, N, sign, n_start=1, L=None):
    """sum_{n >= n_start} sum_{j < N} e^(-nz - it ln z) (op)^j z^(-sigma)/(n + it/z) at z = sign*i*eta.

    The j-th term equals n^-(j+1) z^(-s-j) e^(-nz) R_j(w), w = it/(nz) = sign t/(n eta),
    with R_j = P_j(w)/(1 + w)^(2j+1).  Terms with n < n0 (|w| > 1/8) are summed
    directly; beyond n0, R_j is expanded in powers of w and each power sums
    to a polylogarithm tail Li_p(e^(-i sign eta)) - sum_{n<n0}.
    """
    t = mpmath.im(s)
    sigma = mpmath.re(s)
    if L is None:
        L = UnitPolylog(eta)
    terms = operator_terms(sigma, N)
    w1 = sign * t / eta
    # n + it/z vanishes at n = -w1; only reachable outside the regime
    if sign < 0 and n_start <= -w1 and abs(-w1 - mpmath.nint(-w1)) < mpmath.mpf(2) ** (-mp.prec // 2):
        raise TooCloseToLatticePoint("n + it/z = 0 for an integer n (t/eta integer)")
    n0 = max(n_start, int(mpmath.ceil(8 * abs(w1))) + 1)
    logz = mpmath.log(eta) + sign * 1j * mpmath.pi / 2
    x = mpmath.expj(-sign * eta)
    xs = [mpmath.mpc(1)]
    for n in range(1, n0):
        xs.append(xs[-1] * x)
    M = int((mp.prec + 40) / 3) + 4 * N + 8

    def li(p):
        v = L(p)
        return mpmath.conj(v) if sign > 0 else v

    tails = {}

    def tail(p):
        if p not in tails:
            part = mpmath.fsum(xs[n] / mpmath.mpf(n) ** p for n in range(1, n0))
            tails[p] = li(p) - part
        return tails[p]

    total = mpmath.mpc(0)
    for j, term in enumerate(terms):
        direct = mpmath.mpc(0)
        for n in range(n_start, n0):
            direct += xs[n] / mpmath.mpf(n) ** (j + 1) * term.rational_part(w1 / n)
        r = term.as_jet_coefficients(M)
        acc = mpmath.mpc(0)
        wp = mpmath.mpf(1)
        for m in range(M + 1):
            if r[m]:
                acc += r[m] * wp * tail(j + 1 + m)
            wp *= w1
        total += mpmath.exp(-(s + j) * logz) * (direct + acc)
    return total


def operator_sum(s, eta, N, sign=1, n_start=1, prec=None, delta=DEFAULT_DELTA):
    """Double sum over n >= n_start and j < N of the operator terms at z = sign * i * eta.

    The n-sum runs to infinity: the tail beyond |w| <= 1/8 is summed
    exactly through polylogarithms rather than truncated.
    """
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    sign = {"plus": 1, "minus": -1, 1: 1, -1: -1}[sign]
    _Checks("operator_sum", True, delta).lattice(mpmath.mpf(eta), "eta")
    with mp.workprec(_work(prec, p.t)):
        v = _operator_sum_raw(p.s, mpmath.mpf(eta), int(N), sign, int(n_start))
    return ComplexHP(v, prec)


def _main_sum_integral(s, x):
    """sum_{n <= [x/2pi]} n^-s - (x/2pi)^(1-s)/(1-s)."""
    main = power_sum(s, 1, ifloor(x / (2 * mpmath.pi)))
    integral = -mpmath.power(x / (2 * mpmath.pi), 1 - s) / (1 - s)
    return main, integral


def _pref(s, sign):
    """e^(-+ i pi (1-s)/2) / (2 pi)^(1-s) for the sums at z = +-i eta."""
    return mpmath.exp(-sign * 1j * mpmath.pi * (1 - s) / 2) / mpmath.power(2 * mpmath.pi, 1 - s)


# region 1: (1 + eps) t < eta ------------------------------------------------------


def _region1_closed_bracket(s, eta, L):
    sigma = mpmath.re(s)
    t = mpmath.im(s)
    li1 = L(1)
    li2 = L(2)
    li3 = L(3)
    arg = -mpmath.im(li1)  # arg(1 - e^(i eta)) = -Im Li_1
    br = -1j * arg + (t - 1j * sigma) / eta * mpmath.re(li2)
    br += (1j * t ** 2 - 3j * sigma * t - (sigma - 1) * t - 1j * sigma * (sigma + 1)) / eta ** 2 * mpmath.im(li3)
    return 2j * mpmath.power(eta, -s) / mpmath.power(2 * mpmath.pi, 1 - s) * br


def _region1_raw(s, eta, N, closed_form):
    main, integral = _main_sum_integral(s, eta)
    L = UnitPolylog(eta)
    if closed_form:
        return {"main_sum": main, "integral": integral, "polylog_bracket": _region1_closed_bracket(s, eta, L)}
    plus = _pref(s, 1) * _operator_sum_raw(s, eta, N, 1, 1, L)
    minus = _pref(s, -1) * _operator_sum_raw(s, eta, N, -1, 1, L)
    return {"main_sum": main, "integral": integral, "plus_sum": plus, "minus_sum": minus}


def _region1_error(sigma, t, eta, N, eps, closed_form):
    r = (1 + eps) / eps
    if closed_form:
        return (t ** 3 + r ** 8) / eta ** (3 + sigma)
    return _double_factorial_odd(N) * N * r ** (2 * (N + 1)) * eta ** (-sigma - N)


def _eps_margin(eps, t, eta):
    """Largest admissible margin when none is given: (1 + eps) t = eta."""
    if eps is not None:
        return float(eps)
    return max(float(eta / t) - 1, 1e-12)


def zeta_region1(s, eta, N=3, epsilon=None, closed_form=False, strict=True, prec=None, delta=DEFAULT_DELTA):
    """zeta(s) for (1 + eps) t < eta.

    Generic path: main sum, integral term and the two operator double sums
    at z = +-i eta with j < N.  ``closed_form`` uses the printed N = 3
    polylogarithm formula instead (N is then ignored).
    """
    p = as_point(s)
    prec = _prec(prec, p.t)
    chk = _Checks("region1", strict, delta)
    with mp.workprec(_work(prec, p.t)):
        sv, t, eta = p.s, p.tt, mpmath.mpf(eta)
        eps = _eps_margin(epsilon, t, eta)
        if epsilon is None:
            chk.regime(t < eta, "t < eta")
        else:
            chk.regime((1 + eps) * t < eta, "(1 + eps) t < eta")
        chk.lattice(eta, "eta")
        if N < 1:
            raise ValueError("N must be >= 1")
        terms = _region1_raw(sv, eta, N, closed_form)
        val = mpmath.fsum(terms.values())
        err = _region1_error(float(p.sig), float(t), float(eta), 3 if closed_form else N, eps, closed_form)
    return make_result(
        val, err, terms, "region1", prec, chk.warnings, {"N": 3 if closed_form else N, "closed_form": closed_form, "eps": eps}
    )


# confluent: eta = t -------------------------------------------------------------


def _ck_tail(s, N):
    """(t/2pi)^(1-s) e^(it) sum_{k <= 2N} conj(c_k(1-sigma)) Gamma((k+1)/2) t^(-(k+1)/2)."""
    sigma = mpmath.re(s)
    t = mpmath.im(s)
    cs = _ck_raw(2 * N, 1 - sigma)
    acc = mpmath.fsum(mpmath.conj(c) * mpmath.gamma(mpmath.mpf(k + 1) / 2) * t ** (-mpmath.mpf(k + 1) / 2) for k, c in enumerate(cs))
    return mpmath.power(t / (2 * mpmath.pi), 1 - s) * mpmath.expj(t) * acc


def _confluent_closed(s):
    sigma = mpmath.re(s)
    t = mpmath.im(s)
    L = UnitPolylog(t)
    li = [None] + [L(m) for m in range(1, 6)]
    re, im = mpmath.re, mpmath.im
    br = mpmath.expj(-t) / (2 * t ** 2) * (-t ** 2 - 1j * t * (sigma - 1) + (sigma - 1) ** 2)
    br += -1j * im(li[1]) + 1j * sigma / t * re(li[2])
    br += (1j * t + sigma + sigma ** 2) / t ** 2 * 1j * im(li[3])
    br += (2 + 3 * sigma) / t ** 2 * re(li[4]) + 3j / t ** 2 * im(li[5])
    pre = mpmath.power(t, -s) * mpmath.expj(t) / mpmath.power(2 * mpmath.pi, 1 - s)
    poly = -2j * pre * br
    sp = mpmath.sqrt(mpmath.pi)
    st = mpmath.sqrt(t)
    g = (1 + 1j) / 2 * mpmath.sqrt(mpmath.pi * t) - 1j * (3 * sigma - 2) / 3
    g += (1j - 1) / (24 * st) * sp * (6 * sigma ** 2 - 6 * sigma + 1)
    g += (45 * sigma ** 3 - 45 * sigma ** 2 + 4) / (135 * t)
    g += -(1 + 1j) / (576 * t * st) * sp * (36 * sigma ** 4 - 24 * sigma ** 3 - 24 * sigma ** 2 + 12 * sigma + 1)
    g += 1j / (2835 * t ** 2) * (189 * sigma ** 5 - 315 * sigma ** 3 + 42 * sigma ** 2 + 84 * sigma - 8)
    g += (1 - 1j) / (103680 * t ** 2 * st) * sp * (
        1080 * sigma ** 6 + 1080 * sigma ** 5 - 2700 * sigma ** 4 - 1440 * sigma ** 3 + 1710 * sigma ** 2 + 270 * sigma - 139
    )
    return poly, pre * g


def _confluent_raw(s, N, closed_form):
    t = mpmath.im(s)
    main, integral = _main_sum_integral(s, t)
    if closed_form:
        poly, gam = _confluent_closed(s)
        return {"main_sum": main, "integral": integral, "polylog_bracket": poly, "ck_bracket": gam}
    L = UnitPolylog(t)
    plus = _pref(s, 1) * _operator_sum_raw(s, t, N, 1, 1, L)
    minus = _pref(s, -1) * _operator_sum_raw(s, t, N, -1, 2, L)
    return {"main_sum": main, "integral": integral, "plus_sum": plus, "minus_sum": minus, "ck_tail": _ck_tail(s, N)}


def zeta_confluent(s, N=3, closed_form=False, strict=True, prec=None, delta=DEFAULT_DELTA):
    """zeta(s) from the eta = t expansion; ``closed_form`` uses the printed N = 3 formula."""
    p = as_point(s)
    prec = _prec(prec, p.t)
    chk = _Checks("confluent", strict, delta)
    with mp.workprec(_work(prec, p.t)):
        chk.lattice(p.tt, "t")
        if N < 1:
            raise ValueError("N must be >= 1")
        terms = _confluent_raw(p.s, N, closed_form)
        val = mpmath.fsum(terms.values())
        n = 3 if closed_form else N
        if closed_form:
            err = float(p.tt) ** (-float(p.sig) - 3)
        else:
            err = _double_factorial_odd(n) * n * math.exp(2 * (n + 1)) * float(p.tt) ** (-float(p.sig) - n)
    return make_result(val, err, terms, "confluent", prec, chk.warnings, {"N": n, "closed_form": closed_form})


# small eta: 1 < eta < sqrt(t) ------------------------------------------------------


def _small_eta_correction(s, eta, N, closed_form):
    """The phi-sum correction term (without the two Dirichlet sums)."""
    t = mpmath.im(s)
    sigma = mpmath.re(s)
    L = ifloor(t / eta)
    pre = -_eips_gamma(s) / (2j * mpmath.pi)
    pre *= mpmath.expj(-(L + 1) * eta) * mpmath.exp(1j * mpmath.pi * (s - 1) / 2 + (s - 1) * mpmath.log(eta))
    pre *= mpmath.expjpi(mpmath.mpf(1) / 4)
    if closed_form:
        E = 1 - mpmath.expj(-eta)
        a = -eta * L - 1j * (sigma - 1) + t
        br = mpmath.sqrt(2 * mpmath.pi) / E * eta / mpmath.sqrt(t)
        inner = E ** 2 * (a ** 2 + sigma - 1) / eta ** 2 - 2 * E * a / eta + mpmath.expj(-eta) + 1
        br += inner / E ** 3 * 1j * mpmath.sqrt(mpmath.pi) * eta ** 3 / (mpmath.sqrt(2) * t * mpmath.sqrt(t))
        return pre * br
    K = (N - 1) // 2
    b = _phi_series_raw(s, eta, 2 * K)
    acc = mpmath.mpc(0)
    for k in range(K + 1):
        acc += b[2 * k] * (1j) ** k * (2 * eta ** 2 / t) ** (k + mpmath.mpf(1) / 2) * mpmath.gamma(k + mpmath.mpf(1) / 2)
    return pre * acc


def _small_eta_error(s, eta, N):
    sigma = float(mpmath.re(s))
    t = float(mpmath.im(s))
    eta = float(eta)
    logpre = _log_abs_eips_gamma(s) - math.pi * t / 2 + (sigma - 1) * math.log(eta)
    if eta < t ** (1.0 / 3):
        case = (3 * N / t) ** (N / 6) * eta / math.sqrt(t)
    else:
        case = N * math.exp(-REGIME_A * t / eta ** 2) + (N * eta ** 2 / t) ** ((N + 1) / 2)
    return math.exp(logpre) * case


def _two_sums(s, eta):
    t = mpmath.im(s)
    first = power_sum(s, 1, ifloor(t / eta))
    ch = _chi(s)
    second = ch * power_sum(1 - s, 1, ifloor(eta / (2 * mpmath.pi)))
    return first, second, ch


def zeta_small_eta(s, eta, N=3, epsilon=1.0, closed_form=False, strict=True, prec=None, delta=DEFAULT_DELTA):
    """zeta(s) for eps < eta < sqrt(t): two Dirichlet sums plus the phi^(2k)(0) series, k <= [(N-1)/2]."""
    p = as_point(s)
    prec = _prec(prec, p.t)
    chk = _Checks("small_eta", strict, delta)
    with mp.workprec(_work(prec, p.t)):
        sv, t, eta = p.s, p.tt, mpmath.mpf(eta)
        chk.regime(epsilon < eta < mpmath.sqrt(t), "eps < eta < sqrt(t)")
        chk.lattice(eta, "eta")
        chk.integer_ratio(t / eta, "t/eta")
        if eta < mpmath.cbrt(t):
            chk.soft(N < REGIME_A * t / eta ** 3, "N < A t/eta^3")
        else:
            chk.soft(N < REGIME_A * t / eta ** 2, "N < A t/eta^2")
        first, second, ch = _two_sums(sv, eta)
        corr = _small_eta_correction(sv, eta, N, closed_form)
        terms = {"sum_t_over_eta": first, "chi_sum": second, "correction": corr}
        val = mpmath.fsum(terms.values())
        err = _small_eta_error(sv, eta, 3 if closed_form else N)
    return make_result(val, err, terms, "small_eta", prec, chk.warnings, {"N": N, "closed_form": closed_form})


def zeta_large_eta_mirror(s, eta, N=2, epsilon=0.1, strict=True, prec=None, delta=DEFAULT_DELTA):
    """zeta(s) for 2 pi sqrt(t) < eta < (2 pi/eps) t.

    Reflection of the small-eta expansion: the correction is
    chi(s) * conj(correction at sigma -> 1 - sigma, eta -> 2 pi t/eta).
    """
    p = as_point(s)
    prec = _prec(prec, p.t)
    chk = _Checks("large_eta_mirror", strict, delta)
    with mp.workprec(_work(prec, p.t)):
        sv, t, eta = p.s, p.tt, mpmath.mpf(eta)
        chk.regime(2 * mpmath.pi * mpmath.sqrt(t) < eta < 2 * mpmath.pi / epsilon * t, "2 pi sqrt(t) < eta < (2 pi/eps) t")
        eta2 = 2 * mpmath.pi * t / eta
        chk.lattice(eta2, "2 pi t/eta")
        chk.lattice(eta, "eta")
        first, second, ch = _two_sums(sv, eta)
        refl = mpmath.mpc(1 - p.sig, t)
        corr = ch * mpmath.conj(_small_eta_correction(refl, eta2, N, False))
        terms = {"sum_t_over_eta": first, "chi_sum": second, "correction": corr}
        val = mpmath.fsum(terms.values())
        err = float(abs(ch)) * _small_eta_error(refl, eta2, N)
    return make_result(val, err, terms, "large_eta_mirror", prec, chk.warnings, {"N": N, "eta_reflected": float(eta2)})


# sqrt(t) region: eps sqrt(t) < eta < t -------------------------------------------


def _phi_point(s, eta):
    t = mpmath.im(s)
    M = ifloor(eta / (2 * mpmath.pi))
    L = ifloor(t / eta)
    tau = -2 * mpmath.pi * t / eta ** 2
    u = 2 * t / eta - 2 * mpmath.pi * t / eta ** 2 * M - L - mpmath.mpf(1) / 2
    return tau, u, M, L


def _psi_phi_jet(u, order):
    """Jet of Phi(-1, u) through Siegel's Psi: Phi(-1, a - 1/2) = i Psi(a) e^(i pi (a^2/2 - 5/8))."""
    a = Jet.variable(u + mpmath.mpf(1) / 2, order)
    pi = mpmath.pi
    psi = ((a * a / 2 - a - mpmath.mpf(1) / 8) * pi).cos() / (a * pi).cos()
    return psi * ((a * a / 2 - mpmath.mpf(5) / 8) * (1j * pi)).exp() * 1j


def _sqrt_correction(s, eta, N, phi_source="auto"):
    """e^(-i pi s) Gamma(1-s) e^(i pi (s-1)/2) eta^(s-1) e^(...) S_N(s, eta), plus diagnostics."""
    sigma = mpmath.re(s)
    t = mpmath.im(s)
    tau, u, M, L = _phi_point(s, eta)
    arg = PhiArg.detect(tau, u)
    if phi_source == "psi":
        if arg.rational != (1, 1):
            raise ValueError("the Psi route needs tau = -1")
        jet = _psi_phi_jet(u, N - 1)
    else:
        method = "auto"
        if arg.rational is not None and max(arg.rational) > PHI_CLOSED_MAX:
            method = "quadrature"
        if phi_source in ("closed", "quadrature"):
            method = phi_source
        jet = _phi_jet_raw(arg, N - 1, mpmath.mpf(2) ** (-mp.prec + 40), method)
    d = jet.derivatives()  # d[k] = d^k Phi / du^k
    a = _an_raw(sigma, t, eta, N)
    beta = 2j * M * mpmath.pi - 1j * eta
    S = mpmath.mpc(0)
    for n in range(N):
        inner = mpmath.fsum(mpmath.binomial(n, k) * beta ** k * d[n - k] for k in range(n + 1))
        S += a[n] * inner
    expo = -1j * mpmath.pi * s + mpmath.loggamma(1 - s) + 1j * mpmath.pi * (s - 1) / 2 + (s - 1) * mpmath.log(eta)
    expo += 2 * t / eta * M * mpmath.pi * 1j - 1j * t - 1j * t / (2 * eta ** 2) * (2 * M * mpmath.pi - eta) ** 2
    meta = {"tau": float(tau), "u": float(u), "rational": arg.rational, "S_N": S}
    return mpmath.exp(expo) * S, meta


def _sqrt_error(s, eta, N):
    sigma = float(mpmath.re(s))
    t = float(mpmath.im(s))
    logpre = _log_abs_eips_gamma(s) - math.pi * t / 2
    return math.exp(logpre) * (3 * N / t) ** (N / 6) * float(eta) ** sigma / math.sqrt(t)


def zeta_sqrt_region(s, eta, N=3, epsilon=0.1, closed_form=False, strict=True, prec=None, delta=DEFAULT_DELTA, phi_source="auto"):
    """zeta(s) for eps sqrt(t) < eta < t, with S_N built from a_n and u-derivatives of Phi.

    ``closed_form`` spells out the printed N = 3 bracket (identical to the
    generic S_3).  ``phi_source`` = "psi" takes Phi(-1, .) from Siegel's Psi.
    """
    p = as_point(s)
    prec = _prec(prec, p.t)
    chk = _Checks("sqrt_region", strict, delta)
    if closed_form:
        N = 3
    with mp.workprec(_work(prec, p.t)):
        sv, t, eta = p.s, p.tt, mpmath.mpf(eta)
        chk.regime(epsilon * mpmath.sqrt(t) < eta < t, "eps sqrt(t) < eta < t")
        chk.lattice(eta, "eta")
        chk.integer_ratio(t / eta, "t/eta")
        chk.soft(N < REGIME_A * t, "N < A t")
        first, second, ch = _two_sums(sv, eta)
        if closed_form:
            corr, meta = _sqrt_closed(sv, eta, phi_source)
        else:
            corr, meta = _sqrt_correction(sv, eta, N, phi_source)
        terms = {"sum_t_over_eta": first, "chi_sum": second, "correction": corr}
        val = mpmath.fsum(terms.values())
        err = _sqrt_error(sv, eta, N)
        meta["S_N"] = ComplexHP(meta["S_N"], prec)
    meta.update({"N": N, "closed_form": closed_form})
    return make_result(val, err, terms, "sqrt_region", prec, chk.warnings, meta)


def _sqrt_closed(s, eta, phi_source="auto"):
    """The printed N = 3 bracket: Phi + (sigma-1)/(i eta)(Phi' + beta Phi)
    - (sigma-2)(sigma-1)/(2 eta^2)(Phi'' + 2 beta Phi' + beta^2 Phi)."""
    sigma = mpmath.re(s)
    t = mpmath.im(s)
    tau, u, M, L = _phi_point(s, eta)
    arg = PhiArg.detect(tau, u)
    if phi_source == "psi":
        jet = _psi_phi_jet(u, 2)
    else:
        jet = _phi_jet_raw(arg, 2, mpmath.mpf(2) ** (-mp.prec + 40))
    F, F1, F2 = jet.derivatives()
    beta = 2j * M * mpmath.pi - 1j * eta
    br = F + (sigma - 1) / (1j * eta) * (F1 + beta * F)
    br -= (sigma - 2) * (sigma - 1) / (2 * eta ** 2) * (F2 + 2 * beta * F1 + beta ** 2 * F)
    expo = -1j * mpmath.pi * s + mpmath.loggamma(1 - s) + 1j * mpmath.pi * (s - 1) / 2 + (s - 1) * mpmath.log(eta)
    expo += 2 * t / eta * M * mpmath.pi * 1j - 1j * t - 1j * t / (2 * eta ** 2) * (2 * M * mpmath.pi - eta) ** 2
    return mpmath.exp(expo) * br, {"tau": float(tau), "u": float(u), "rational": arg.rational, "S_N": br}


def zeta_sqrt_mirror(s, eta, N=3, epsilon=0.1, strict=True, prec=None, delta=DEFAULT_DELTA):
    """zeta(s) for 2 pi < eta < sqrt(t)/eps: chi(s) * conj(sqrt-region correction at
    sigma -> 1 - sigma, eta -> 2 pi t/eta) added to the two Dirichlet sums."""
    p = as_point(s)
    prec = _prec(prec, p.t)
    chk = _Checks("sqrt_mirror", strict, delta)
    with mp.workprec(_work(prec, p.t)):
        sv, t, eta = p.s, p.tt, mpmath.mpf(eta)
        chk.regime(2 * mpmath.pi < eta < mpmath.sqrt(t) / epsilon, "2 pi < eta < sqrt(t)/eps")
        eta2 = 2 * mpmath.pi * t / eta
        chk.lattice(eta, "eta")
        chk.lattice(eta2, "2 pi t/eta")
        chk.integer_ratio(t / eta, "t/eta")
        chk.soft(N < REGIME_A * t, "N < A t")
        first, second, ch = _two_sums(sv, eta)
        refl = mpmath.mpc(1 - p.sig, t)
        c, meta = _sqrt_correction(refl, eta2, N)
        corr = ch * mpmath.conj(c)
        terms = {"sum_t_over_eta": first, "chi_sum": second, "correction": corr}
        val = mpmath.fsum(terms.values())
        err = float(abs(ch)) * _sqrt_error(refl, eta2, N)
        meta["S_N"] = ComplexHP(mpmath.conj(meta["S_N"]), prec)
    meta.update({"N": N, "eta_reflected": float(eta2)})
    return make_result(val, err, terms, "sqrt_mirror", prec, chk.warnings, meta)
