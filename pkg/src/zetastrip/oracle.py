"""Reference zeta values by Euler-Maclaurin summation, and the classical
truncated Dirichlet approximation.

The reference is deliberately unrelated to the expansions under test: a
direct sum of N-1 terms, the integral and boundary terms, K Bernoulli
corrections, and the remainder bound

    |R_K| <= |s + 2K + 1| / (sigma + 2K + 1) * |T_(K+1)|,

where T_k = B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1).
"""

from functools import lru_cache
import math

import mpmath

from .bernoulli import bernoulli_even
from .config import DEFAULT_PRECISION_BITS
from .errors import PoleAt, RegimeViolation
from .hp import ComplexHP, as_point, make_result, power_sum

mp = mpmath.mp

K_MAX = 200


def _log_term_bound(s_abs_terms, k, N, sigma):
    """log |T_k| estimate from |B_2k|/(2k)! ~ 2/(2 pi)^(2k)."""
    return math.log(2) + s_abs_terms - 2 * k * math.log(2 * math.pi) - (sigma + 2 * k - 1) * math.log(N)


def _choose_N_K(s, digits):
    sigma = float(mpmath.re(s))
    t = float(abs(mpmath.im(s)))
    target = -(digits + 2) * math.log(10) - 2.0
    N = max(int(0.25 * math.hypot(sigma, t)) + 1, digits // 2 + 10, 12)
    while True:
        logprod = 0.0  # log |s (s+1) ... (s+2k-2)|
        prev = None
        for k in range(1, K_MAX + 1):
            if k == 1:
                logprod = math.log(max(math.hypot(sigma, t), 1e-300))
            else:
                logprod += math.log(math.hypot(sigma + 2 * k - 3, t)) + math.log(math.hypot(sigma + 2 * k - 2, t))
            lt = _log_term_bound(logprod, k, N, sigma)
            # the remainder bound carries |s + 2k - 1| / (sigma + 2k - 1) on top of the term
            lt += math.log(math.hypot(sigma + 2 * k - 1, t) / (sigma + 2 * k - 1))
            if prev is not None and lt > prev and k > 3:
                break
            prev = lt
            if lt < target:
                return N, k
        N = int(N * 1.25) + 1


def _em_sum(s, N, K):
    """Euler-Maclaurin value and certified remainder bound at the ambient precision."""
    total = power_sum(s, 1, N - 1)
    Nm = mpmath.mpf(N)
    Ns = mpmath.exp(-s * mpmath.log(Nm))  # N^-s
    total += Nm * Ns / (s - 1) + Ns / 2
    poch = s  # s (s+1) ... (s+2k-2)
    Npow = Ns / Nm  # N^(-s-2k+1) at k = 1
    fact = mpmath.mpf(2)  # (2k)!
    for k in range(1, K + 1):
        b = bernoulli_even(k)
        total += mpmath.mpf(b.numerator) / b.denominator / fact * poch * Npow
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        Npow /= Nm * Nm
        fact *= (2 * k + 1) * (2 * k + 2)
    b = bernoulli_even(K + 1)
    nxt = abs(mpmath.mpf(b.numerator) / b.denominator / fact * poch * Npow)
    sigma = mpmath.re(s)
    bound = abs(s + 2 * K + 1) / (sigma + 2 * K + 1) * nxt
    return total, bound


@lru_cache(maxsize=512)
def _zeta_reference_cached(sigma, t, digits, prec):
    with mp.workprec(prec):
        s = mpmath.mpc(sigma, t)
        N, K = _choose_N_K(s, digits)
        val, bound = _em_sum(s, N, K)
    return val, bound, N, K


def zeta_reference_result(s, digits=30, prec=None):
    """zeta(s) with |error| < 10^-digits, as an EvalResult carrying the bound."""
    p = as_point(s, relaxed=True)
    if digits > 400:
        raise ValueError("digits beyond the precision budget (400)")
    out_prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    with mp.workprec(out_prec + 20):
        sig, t = mpmath.mpf(p.sigma), mpmath.mpf(p.t)
    if sig == 1 and t == 0:
        raise PoleAt(1)
    wprec = max(out_prec, int(digits * 3.33) + 20) + int(math.log2(abs(float(t)) + 2)) + 30
    val, bound, N, K = _zeta_reference_cached(sig, t, int(digits), wprec)
    if bound >= mpmath.mpf(10) ** (-digits):
        raise ArithmeticError("Euler-Maclaurin bound not met")  # pragma: no cover
    with mp.workprec(out_prec):
        return make_result(val, bound, {"em": val}, "reference", out_prec, meta={"N": N, "K": K})


def zeta_reference(s, digits=30, prec=None):
    """zeta(s) certified to 10^-digits, returned as ComplexHP."""
    return zeta_reference_result(s, digits, prec).value


def _zeta_ref_raw(s_mpc, digits=30):
    """Internal helper: reference value as an mpc at the ambient precision."""
    return zeta_reference_result(s_mpc, digits, prec=mp.prec).value.v


def zeta_truncated_dirichlet(s, x, prec=None):
    """sum_{n<=x} n^-s - x^(1-s)/(1-s), error O(x^-sigma), valid for t < 2 pi x."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    with mp.workprec(prec + 20):
        sv, x = p.s, mpmath.mpf(x)
        if not (p.tt < 2 * mpmath.pi * x):
            raise RegimeViolation("truncated_dirichlet", "t < 2 pi x")
        if not p.sig > 0:
            raise RegimeViolation("truncated_dirichlet", "sigma > 0")
        main = power_sum(sv, 1, int(mpmath.floor(x)))
        corr = -mpmath.power(x, 1 - sv) / (1 - sv)
        val = main + corr
        err = mpmath.power(x, -p.sig)
    with mp.workprec(prec):
        return make_result(val, err, {"main_sum": main, "integral": corr}, "truncated_dirichlet", prec)
