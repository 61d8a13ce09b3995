"""Extended-precision scalars, strip points and evaluation results.

Numerics run on mpmath.  Inside the package, values are raw ``mpc`` objects
computed under an explicit ``workprec`` context.  At the public boundary
they are wrapped in :class:`ComplexHP`, which records the precision and
refuses to mix operands of different precision.
"""

from dataclasses import dataclass, field

import mpmath
import numpy as np

from .config import DEFAULT_DELTA, DEFAULT_PRECISION_BITS, SUM_CAP
from .errors import PrecisionMismatch, RegimeViolation, SumCapExceeded, TooCloseToLatticePoint

mp = mpmath.mp


class ComplexHP:
    """Complex number with a fixed binary precision."""

    __slots__ = ("v", "prec")

    def __init__(self, value, prec=None):
        if isinstance(value, ComplexHP):
            prec = value.prec if prec is None else prec
            value = value.v
        self.prec = int(prec if prec is not None else DEFAULT_PRECISION_BITS)
        if self.prec < 2:
            raise ValueError("precision must be at least 2 bits")
        with mp.workprec(self.prec):
            self.v = mpmath.mpc(value) * 1

    # arithmetic -----------------------------------------------------------
    def _other(self, other):
        if isinstance(other, ComplexHP):
            if other.prec != self.prec:
                raise PrecisionMismatch(f"{self.prec}-bit operand mixed with {other.prec}-bit operand")
            return other.v
        if isinstance(other, (int, float, complex, mpmath.mpf, mpmath.mpc)):
            return other
        return NotImplemented

    def _binop(self, other, fn):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        with mp.workprec(self.prec):
            return ComplexHP(fn(self.v, o), self.prec)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binop(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binop(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __pow__(self, other):
        return self._binop(other, lambda a, b: a ** b)

    def __neg__(self):
        return ComplexHP(-self.v, self.prec)

    def __abs__(self):
        with mp.workprec(self.prec):
            return abs(self.v)

    def __eq__(self, other):
        if isinstance(other, ComplexHP):
            return self.prec == other.prec and self.v == other.v
        return NotImplemented

    def __hash__(self):
        return hash((self.prec, self.v))

    def __complex__(self):
        return complex(self.v)

    def __repr__(self):
        return f"ComplexHP({mpmath.nstr(self.v, 20)}, prec={self.prec})"

    # accessors ------------------------------------------------------------
    @property
    def real(self):
        return self.v.real

    @property
    def imag(self):
        return self.v.imag

    def conjugate(self):
        return ComplexHP(mpmath.conj(self.v), self.prec)

    # elementary functions -------------------------------------------------
    def _unary(self, fn):
        with mp.workprec(self.prec):
            return ComplexHP(fn(self.v), self.prec)

    def exp(self):
        return self._unary(mpmath.exp)

    def sin(self):
        return self._unary(mpmath.sin)

    def cos(self):
        return self._unary(mpmath.cos)

    def log(self, cut="negative"):
        return self._unary(lambda z: log_cut(z, cut))

    def pow(self, w, cut="negative"):
        o = self._other(w)
        with mp.workprec(self.prec):
            return ComplexHP(pow_cut(self.v, o, cut), self.prec)


def hp(value, prec=None):
    return ComplexHP(value, prec)


def log_cut(z, cut="negative"):
    """Logarithm with the branch cut on the negative or the positive real axis.

    ``cut="negative"`` is the principal branch, arg in (-pi, pi].
    ``cut="positive"`` takes arg in [0, 2 pi).
    """
    z = mpmath.mpmathify(z)
    if z == 0:
        raise ValueError("log(0)")
    w = mpmath.log(z)
    if cut == "negative":
        return w
    if cut != "positive":
        raise ValueError(f"unknown cut {cut!r}")
    if w.imag < 0 or (w.imag == 0 and mpmath.re(z) < 0):
        w += 2j * mpmath.pi
    return w


def pow_cut(z, w, cut="negative"):
    """z**w = exp(w log z) with the requested branch cut."""
    return mpmath.exp(w * log_cut(z, cut))


def ifloor(x):
    return int(mpmath.floor(x))


def dist_to_int(x):
    x = mpmath.mpf(x)
    return abs(x - mpmath.nint(x))


def check_eta_lattice(eta, delta=DEFAULT_DELTA, what="eta"):
    """Reject eta with eta/(2 pi) within delta of an integer."""
    if delta is None:
        return
    if dist_to_int(mpmath.mpf(eta) / (2 * mpmath.pi)) < delta:
        raise TooCloseToLatticePoint(f"{what}/(2 pi) within {delta} of an integer ({what}={mpmath.nstr(eta, 12)})")


@dataclass(frozen=True)
class StripPoint:
    """s = sigma + i t in the critical strip.

    ``relaxed=True`` skips the strip check; used for sanity runs such as
    s = 2 + 0.0001i.
    """

    sigma: object
    t: object
    relaxed: bool = False

    def __post_init__(self):
        if not self.relaxed:
            sig = mpmath.mpf(self.sigma)
            tt = mpmath.mpf(self.t)
            if not (0 <= sig <= 1):
                raise RegimeViolation("StripPoint", "0 <= sigma <= 1", f"sigma={self.sigma} outside [0, 1]")
            if not tt > 0:
                raise RegimeViolation("StripPoint", "t > 0", f"t={self.t} must be positive")

    @property
    def s(self):
        """s as an mpc at the current mpmath precision."""
        return mpmath.mpc(mpmath.mpf(self.sigma), mpmath.mpf(self.t))

    @property
    def sig(self):
        return mpmath.mpf(self.sigma)

    @property
    def tt(self):
        return mpmath.mpf(self.t)

    def reflected(self):
        """The point 1 - conj(s) = (1 - sigma) + i t."""
        return StripPoint(1 - mpmath.mpf(self.sigma), self.t, self.relaxed)

    def __str__(self):
        return f"{mpmath.nstr(mpmath.mpf(self.sigma), 8)}+{mpmath.nstr(mpmath.mpf(self.t), 12)}i"


def as_point(s, relaxed=False):
    """Coerce a StripPoint, an (sigma, t) pair or a complex number."""
    if isinstance(s, StripPoint):
        return s
    if isinstance(s, tuple) and len(s) == 2:
        return StripPoint(s[0], s[1], relaxed)
    if isinstance(s, ComplexHP):
        s = s.v
    z = mpmath.mpmathify(s)
    return StripPoint(mpmath.re(z), mpmath.im(z), relaxed)


@dataclass
class EvalResult:
    """A computed value with its predicted error magnitude and term breakdown."""

    value: ComplexHP
    predicted_error_mag: float
    terms: dict = field(default_factory=dict)
    method: str = ""
    precision: int = DEFAULT_PRECISION_BITS
    warnings: tuple = ()
    meta: dict = field(default_factory=dict)

    @property
    def v(self):
        return self.value.v

    def __complex__(self):
        return complex(self.value.v)


def make_result(value, err, terms, method, prec, warnings=(), meta=None):
    return EvalResult(
        value=ComplexHP(value, prec),
        predicted_error_mag=float(err) if err is not None else float("nan"),
        terms={k: ComplexHP(v, prec) for k, v in terms.items()},
        method=method,
        precision=prec,
        warnings=tuple(warnings),
        meta=dict(meta or {}),
    )


# Dirichlet power sums ----------------------------------------------------------


def _smallest_prime_factors(n):
    spf = np.zeros(n + 1, dtype=np.int64)
    spf[1:] = np.arange(1, n + 1)
    for p in range(2, int(n ** 0.5) + 1):
        if spf[p] == p:
            block = spf[p * p :: p]
            mask = block == np.arange(p * p, n + 1, p)
            block[mask] = p
            spf[p * p :: p] = block
    return spf


def power_sum(w, a, b):
    """Sum of n**(-w) for a <= n <= b, at the current precision.

    Prime powers are computed with exp/log; composite terms reuse
    multiplicativity, n^-w = p^-w (n/p)^-w.  Terms are added in increasing
    n so the result is deterministic.
    """
    a = max(int(a), 1)
    b = int(b)
    if b < a:
        return mpmath.mpc(0)
    if b - a > SUM_CAP:
        raise SumCapExceeded(f"range length {b - a} exceeds cap {SUM_CAP}")
    w = mpmath.mpmathify(w)
    mw = -w
    if b < 64 or (b - a) * 8 < b:
        acc = mpmath.mpc(0)
        for n in range(a, b + 1):
            acc += mpmath.exp(mw * mpmath.log(n))
        return acc
    half = b // 2
    spf = _smallest_prime_factors(b)
    vals = [None, mpmath.mpc(1)]
    acc = mpmath.mpc(0)
    if a <= 1:
        acc += 1
    for n in range(2, b + 1):
        p = int(spf[n])
        if p == n:
            v = mpmath.exp(mw * mpmath.log(n))
        else:
            v = vals[p] * vals[n // p]
        if n <= half:
            vals.append(v)
        if n >= a:
            acc += v
    return acc
