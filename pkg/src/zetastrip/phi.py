"""The function

    Phi(tau, u) = int e^(pi i tau x^2 + 2 pi i u x) / (e^(pi i x) - e^(-pi i x)) dx,  tau < 0,

along a line parallel to e^(3 pi i/4) crossing the real axis between 0 and 1,
its closed form for tau = -p/q, u-derivatives, and Siegel's Psi(a).
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import mpmath

from .config import DEFAULT_PRECISION_BITS, DEFAULT_QUAD_TOL
from .errors import NearSingularU
from .hp import ComplexHP
from .jets import Jet
from .quadrature import LinePath, integrate_path

mp = mpmath.mp

MAX_JET_ORDER = 8
# denominators considered when recognizing a rational tau
MAX_DENOMINATOR = 1000


@dataclass(frozen=True)
class PhiArg:
    """(tau, u) with tau < 0; ``rational`` = (p, q) when tau = -p/q exactly."""

    tau: object
    u: object
    rational: tuple = None

    def __post_init__(self):
        if not mpmath.mpf(self.tau) < 0:
            raise ValueError("tau must be negative")
        if self.rational is not None:
            p, q = self.rational
            if not (int(p) == p and int(q) == q and p > 0 and q > 0):
                raise ValueError("rational form needs positive integers p, q")
            if Fraction(self.tau) != Fraction(-p, q) if isinstance(self.tau, (int, Fraction)) else False:
                raise ValueError("tau != -p/q")

    @classmethod
    def from_rational(cls, p, q, u):
        with mp.workprec(mp.prec + 10):
            tau = -mpmath.mpf(p) / q
        return cls(tau, u, (int(p), int(q)))

    @classmethod
    def detect(cls, tau, u, max_den=MAX_DENOMINATOR):
        """Attach (p, q) when tau is a rational with small denominator up to rounding."""
        tau = mpmath.mpf(tau)
        fr = Fraction(float(-tau)).limit_denominator(max_den)
        # tau usually comes from an eta given at a lower precision than the
        # working one, so only half the working bits are required to agree
        if fr > 0 and abs(tau + mpmath.mpf(fr.numerator) / fr.denominator) < mpmath.mpf(2) ** (-(mp.prec // 2)) * max(
            1, abs(tau)
        ):
            return cls(tau, u, (fr.numerator, fr.denominator))
        return cls(tau, u, None)


# quadrature -----------------------------------------------------------------------


def _integrand(tau, u, deriv):
    a = mpmath.pi * 1j * tau
    b = 2 * mpmath.pi * 1j * u

    def f(x):
        v = mpmath.exp(a * x * x + b * x) / (2j * mpmath.sin(mpmath.pi * x))
        if deriv:
            v *= (2j * mpmath.pi * x) ** deriv
        return v

    return f


def _phi_quad_raw(tau, u, crossing, deriv, tol):
    f = _integrand(tau, u, deriv)
    path = LinePath(crossing, 3 * mpmath.pi / 4, step=mpmath.mpf(1) / 4)
    # size of the integrand near the crossing decides how much cancellation to expect
    peak = 0.0
    with mp.workprec(64):
        for j in range(-40, 41):
            try:
                v = abs(f(path.z(mpmath.mpf(j) / 8)))
            except ZeroDivisionError:
                continue
            if v > 0:
                peak = max(peak, float(mpmath.log(v, 2)))
    extra = max(0, int(math.ceil(peak))) + 10
    with mp.workprec(mp.prec + extra):
        res = integrate_path(f, path, tol)
    return res.value, res.error


def phi_quadrature(arg, crossing=0.5, deriv=0, tol=DEFAULT_QUAD_TOL, prec=None):
    """Phi (or its deriv-th u-derivative) by quadrature along x = crossing + r e^(3 pi i/4)."""
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    if not 0 < crossing < 1:
        raise ValueError("crossing must lie in (0, 1)")
    with mp.workprec(prec + 20):
        v, _ = _phi_quad_raw(mpmath.mpf(arg.tau), mpmath.mpmathify(arg.u), mpmath.mpf(crossing), deriv, tol)
    return ComplexHP(v, prec)


# closed form for tau = -p/q --------------------------------------------------------


def _guard_denominator(den):
    if abs(den) < mpmath.mpf(10) ** (-mp.prec * 0.30103 / 4):
        raise NearSingularU("1 - (-1)^q e^(-pi i q p - 2 pi i q u) vanishes to working precision")


def _phi_rational_jet(p, q, u, order):
    """Jet in u of the closed form at tau = -p/q, centred at u."""
    U = Jet.variable(u, order)
    pi = mpmath.pi
    sq = (-1) ** q
    E = ((U * q + mpmath.mpf(p) * q / 2) * (-2j * pi)).exp()  # e^(-pi i q p - 2 pi i q u)
    den = 1 - E * sq
    _guard_denominator(den[0])
    s1 = Jet.const(0, order)
    for n in range(q):
        s1 = s1 + ((U * n) * (-2j * pi)).exp() * ((-1) ** n * mpmath.expjpi(-mpmath.mpf(n * n) * p / q))
    s2 = Jet.const(0, order)
    c = 1j * pi * q / p
    for n in range(p):
        w = U + (n + mpmath.mpf(1) / 2)
        s2 = s2 + (w * w * c).exp()
    pref = mpmath.expjpi(mpmath.mpf(3) / 4) / mpmath.sqrt(mpmath.mpf(p) / q)
    return (s1 + E * s2 * (sq * pref)) / den


def phi_rational(p, q, u, prec=None):
    """Phi(-p/q, u) from the finite closed form."""
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    if int(p) != p or int(q) != q or p <= 0 or q <= 0:
        raise ValueError("p and q must be positive integers")
    with mp.workprec(prec + 20):
        v = _phi_rational_jet(int(p), int(q), mpmath.mpmathify(u), 0)[0]
    return ComplexHP(v, prec)


def _phi_jet_raw(arg, order, tol=DEFAULT_QUAD_TOL, method="auto"):
    u = mpmath.mpmathify(arg.u)
    if method == "auto":
        method = "closed" if arg.rational is not None else "quadrature"
    if method == "closed":
        if arg.rational is None:
            raise ValueError("closed form needs a rational tau")
        p, q = arg.rational
        return _phi_rational_jet(p, q, u, order)
    coeffs = []
    for k in range(order + 1):
        v, _ = _phi_quad_raw(mpmath.mpf(arg.tau), u, mpmath.mpf(0.5), k, tol)
        coeffs.append(v / mpmath.factorial(k))
    return Jet(coeffs)


def phi_jet(arg, order, tol=DEFAULT_QUAD_TOL, prec=None, method="auto"):
    """Taylor coefficients of u -> Phi(tau, u) at arg.u, up to ``order``.

    Uses the closed form when ``arg.rational`` is set, otherwise quadrature
    with the extra factor (2 pi i x)^k; ``method`` forces one of them.
    """
    if order < 0 or order > MAX_JET_ORDER:
        raise ValueError(f"order must be in [0, {MAX_JET_ORDER}]")
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    with mp.workprec(prec + 20):
        j = _phi_jet_raw(arg, order, tol, method)
    with mp.workprec(prec):
        return Jet([+c for c in j.c])


# Siegel's Psi ----------------------------------------------------------------------


def psi_siegel(a, prec=None):
    """Psi(a) = cos pi(a^2/2 - a - 1/8) / cos(pi a)."""
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    with mp.workprec(prec + 10):
        a = mpmath.mpmathify(a)
        v = mpmath.cospi(a * a / 2 - a - mpmath.mpf(1) / 8) / mpmath.cospi(a)
    return ComplexHP(v, prec)


def phi_from_psi(u, prec=None):
    """Phi(-1, u) through Psi: Phi(-1, a - 1/2) = i Psi(a) e^(i pi (a^2/2 - 5/8))."""
    prec = DEFAULT_PRECISION_BITS if prec is None else int(prec)
    with mp.workprec(prec + 10):
        a = mpmath.mpmathify(u) + mpmath.mpf(1) / 2
        psi = mpmath.cospi(a * a / 2 - a - mpmath.mpf(1) / 8) / mpmath.cospi(a)
        v = 1j * psi * mpmath.expjpi(a * a / 2 - mpmath.mpf(5) / 8)
    return ComplexHP(v, prec)
