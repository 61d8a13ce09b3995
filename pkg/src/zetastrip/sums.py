"""Partial sums of n^-s and n^(s-1): direct summation and the asymptotic
relations obtained as differences of the zeta expansions at two values of eta.
"""

from dataclasses import dataclass

import mpmath

from .config import DEFAULT_DELTA, DEFAULT_PRECISION_BITS, SUM_CAP
from .errors import SumCapExceeded
from .expansions import (
    _Checks,
    _confluent_raw,
    _eps_margin,
    _region1_error,
    _region1_raw,
    _sqrt_correction,
    _sqrt_error,
    _work,
    _double_factorial_odd,
)
from .hp import ComplexHP, as_point, ifloor, make_result, power_sum
from .special import _chi

mp = mpmath.mp

_EXPONENTS = ("minus_s", "s_minus_1")


@dataclass(frozen=True)
class SumRange:
    """sum_{n=low}^{high} n^-s (exponent "minus_s") or n^(s-1) ("s_minus_1")."""

    low: int
    high: int
    exponent: str = "minus_s"

    def __post_init__(self):
        if int(self.low) < 1:
            raise ValueError("low must be >= 1")
        if self.exponent not in _EXPONENTS:
            raise ValueError(f"exponent must be one of {_EXPONENTS}")


def sum_direct(rng, s, prec=None):
    """The partial sum term by term at ``prec`` bits."""
    p = as_point(s, relaxed=True)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    if rng.high - rng.low > SUM_CAP:
        raise SumCapExceeded(f"range length {rng.high - rng.low} exceeds cap {SUM_CAP}")
    with mp.workprec(_work(prec, p.t)):
        w = p.s if rng.exponent == "minus_s" else 1 - p.s
        v = power_sum(w, rng.low, rng.high)
    return ComplexHP(v, prec)


def _rest(terms):
    return mpmath.fsum(v for k, v in terms.items() if k != "main_sum")


def sum_th51(s, eta1, eta2, N=3, epsilon=None, closed_form=False, strict=True, prec=None, delta=DEFAULT_DELTA):
    """sum_{n=[eta1/2pi]+1}^{[eta2/2pi]} n^-s for (1 + eps) t < eta1 < eta2,
    as the difference of the region-1 expansion at eta2 and eta1."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    chk = _Checks("sum_th51", strict, delta)
    with mp.workprec(_work(prec, p.t)):
        sv, t = p.s, p.tt
        e1, e2 = mpmath.mpf(eta1), mpmath.mpf(eta2)
        eps = _eps_margin(epsilon, t, e1)
        chk.regime((t < e1 if epsilon is None else (1 + eps) * t < e1) and e1 < e2, "(1 + eps) t < eta1 < eta2")
        chk.lattice(e1, "eta1")
        chk.lattice(e2, "eta2")
        r1 = _rest(_region1_raw(sv, e1, N, closed_form))
        r2 = _rest(_region1_raw(sv, e2, N, closed_form))
        val = r1 - r2
        err = _region1_error(float(p.sig), float(t), float(e1), 3 if closed_form else N, eps, closed_form)
    return make_result(val, err, {"at_eta1": r1, "at_eta2": -r2}, "sum_th51", prec, chk.warnings, {"N": N})


def sum_th52(s, eta, N=3, epsilon=None, closed_form=False, strict=True, prec=None, delta=DEFAULT_DELTA):
    """sum_{n=[t/2pi]+1}^{[eta/2pi]} n^-s for (1 + eps) t < eta: the eta = t expansion
    minus the region-1 expansion, main sums removed."""
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    chk = _Checks("sum_th52", strict, delta)
    with mp.workprec(_work(prec, p.t)):
        sv, t = p.s, p.tt
        e = mpmath.mpf(eta)
        eps = _eps_margin(epsilon, t, e)
        chk.regime(t < e if epsilon is None else (1 + eps) * t < e, "(1 + eps) t < eta")
        chk.lattice(e, "eta")
        chk.lattice(t, "t")
        rc = _rest(_confluent_raw(sv, N, closed_form))
        rr = _rest(_region1_raw(sv, e, N, closed_form))
        val = rc - rr
        n = 3 if closed_form else N
        sig = float(p.sig)
        err_t = (float(t) ** (-sig - 3)) if closed_form else (
            _double_factorial_odd(n) * n * mpmath.e ** (2 * (n + 1)) * float(t) ** (-sig - n)
        )
        err_eta = _region1_error(sig, float(t), float(e), n, eps, closed_form)
    return make_result(
        val,
        float(err_t) + err_eta,
        {"confluent_part": rc, "region1_part": -rr},
        "sum_th52",
        prec,
        chk.warnings,
        {"N": n, "error_t_part": float(err_t), "error_eta_part": err_eta},
    )


def sum_th53(s, eta1, eta2, N=3, epsilon=0.1, strict=True, prec=None, delta=DEFAULT_DELTA):
    """sum_{n=[t/eta2]+1}^{[t/eta1]} n^-s for eps sqrt(t) < eta1 < eta2 < t.

    The value is the asymptotic right-hand side
    chi(s) sum_{n=[eta1/2pi]+1}^{[eta2/2pi]} n^(s-1) + C(eta2) - C(eta1),
    with C the S_N correction of the sqrt(t)-region expansion.  meta holds
    the directly summed left-hand side and the difference.
    """
    p = as_point(s)
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    chk = _Checks("sum_th53", strict, delta)
    with mp.workprec(_work(prec, p.t)):
        sv, t = p.s, p.tt
        e1, e2 = mpmath.mpf(eta1), mpmath.mpf(eta2)
        chk.regime(epsilon * mpmath.sqrt(t) < e1 < e2 < t, "eps sqrt(t) < eta1 < eta2 < t")
        for e, nm in ((e1, "eta1"), (e2, "eta2")):
            chk.lattice(e, nm)
            chk.integer_ratio(t / e, f"t/{nm}")
        two_pi = 2 * mpmath.pi
        chi_sum = _chi(sv) * power_sum(1 - sv, ifloor(e1 / two_pi) + 1, ifloor(e2 / two_pi))
        c1, _ = _sqrt_correction(sv, e1, N)
        c2, _ = _sqrt_correction(sv, e2, N)
        val = chi_sum + c2 - c1
        lhs = power_sum(sv, ifloor(t / e2) + 1, ifloor(t / e1))
        err = _sqrt_error(sv, e1, N) + _sqrt_error(sv, e2, N)
    return make_result(
        val,
        err,
        {"chi_sum": chi_sum, "correction_eta2": c2, "correction_eta1": -c1},
        "sum_th53",
        prec,
        chk.warnings,
        {"N": N, "lhs_direct": ComplexHP(lhs, prec), "difference": ComplexHP(lhs - val, prec)},
    )
