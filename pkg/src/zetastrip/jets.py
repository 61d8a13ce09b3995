"""Truncated Taylor series (jets) and series reversion.

A :class:`Jet` holds coefficients f_0..f_K of f(x) = sum f_k x^k.  Binary
operations truncate to the shorter operand.  Coefficients are mpmath
numbers; all arithmetic happens at the ambient mpmath precision.
"""

import mpmath

from .errors import DegenerateSeries, InvalidOrder


def _num(x):
    return mpmath.mpmathify(x)


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = [_num(x) for x in coeffs]
        if not self.c:
            raise InvalidOrder("a jet needs at least one coefficient")

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, value, order):
        return cls([value] + [0] * order)

    @classmethod
    def variable(cls, x0, order):
        """The identity map x0 + x, truncated at ``order``."""
        if order < 1:
            return cls([x0])
        return cls([x0, 1] + [0] * (order - 1))

    @property
    def order(self):
        return len(self.c) - 1

    def __len__(self):
        return len(self.c)

    def __getitem__(self, k):
        return self.c[k]

    def __iter__(self):
        return iter(self.c)

    def __repr__(self):
        return "Jet([" + ", ".join(mpmath.nstr(x, 10) for x in self.c) + "])"

    def truncate(self, order):
        return Jet(self.c[: order + 1])

    def derivatives(self):
        """f^(k)(0) = k! f_k."""
        return [mpmath.factorial(k) * x for k, x in enumerate(self.c)]

    # ring operations ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Jet):
            return other
        return Jet.const(other, self.order)

    def __add__(self, other):
        o = self._coerce(other)
        n = min(len(self.c), len(o.c))
        return Jet([self.c[k] + o.c[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Jet([-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet):
            o = _num(other)
            return Jet([x * o for x in self.c])
        n = min(len(self.c), len(other.c))
        a, b = self.c, other.c
        return Jet([mpmath.fsum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            o = _num(other)
            return Jet([x / o for x in self.c])
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int):
            return (self.log() * n).exp()
        if n < 0:
            return self.reciprocal() ** (-n)
        out = Jet.const(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # analytic operations --------------------------------------------------
    def reciprocal(self):
        a = self.c
        if a[0] == 0:
            raise DegenerateSeries("reciprocal of a jet with zero constant term")
        b = [1 / a[0]]
        for k in range(1, len(a)):
            b.append(-mpmath.fsum(a[i] * b[k - i] for i in range(1, k + 1)) / a[0])
        return Jet(b)

    def deriv(self):
        """Series of f'(x), one order shorter."""
        if len(self.c) == 1:
            return Jet([0])
        return Jet([k * self.c[k] for k in range(1, len(self.c))])

    def exp(self):
        a = self.c
        e = [mpmath.exp(a[0])]
        # f' = a' f  ->  k e_k = sum_{i=1..k} i a_i e_{k-i}
        for k in range(1, len(a)):
            e.append(mpmath.fsum(i * a[i] * e[k - i] for i in range(1, k + 1)) / k)
        return Jet(e)

    def log(self):
        a = self.c
        if a[0] == 0:
            raise DegenerateSeries("log of a jet with zero constant term")
        g = [mpmath.log(a[0])]
        # a g' = a'  ->  k a_0 g_k = k a_k - sum_{i=1..k-1} i g_i a_{k-i}
        for k in range(1, len(a)):
            g.append((k * a[k] - mpmath.fsum(i * g[i] * a[k - i] for i in range(1, k))) / (k * a[0]))
        return Jet(g)

    def sqrt(self):
        """Square root, principal branch on the constant term."""
        a = self.c
        if a[0] == 0:
            raise DegenerateSeries("sqrt of a jet with zero constant term")
        r = [mpmath.sqrt(a[0])]
        for k in range(1, len(a)):
            r.append((a[k] - mpmath.fsum(r[i] * r[k - i] for i in range(1, k))) / (2 * r[0]))
        return Jet(r)

    def sin(self):
        e = (self * 1j).exp()
        f = (self * -1j).exp()
        return (e - f) * (-0.5j)

    def cos(self):
        e = (self * 1j).exp()
        f = (self * -1j).exp()
        return (e + f) * 0.5

    def compose(self, inner):
        """self(inner(x)); inner must have zero constant term."""
        if inner.c[0] != 0:
            raise DegenerateSeries("composition needs an inner series with zero constant term")
        n = min(len(self.c), len(inner.c))
        out = Jet.const(self.c[n - 1], n - 1)
        inner = inner.truncate(n - 1)
        for k in range(n - 2, -1, -1):
            out = out * inner + self.c[k]
        return out

    def __call__(self, inner):
        return self.compose(inner)

    def shift_down(self, m):
        """f(x)/x^m for a series whose first m coefficients vanish."""
        return Jet(self.c[m:])

    def evaluate(self, x):
        acc = mpmath.mpc(0)
        for coef in reversed(self.c):
            acc = acc * x + coef
        return acc


def revert(f):
    """Compositional inverse g of f (f_0 = 0, f_1 != 0), so f(g(x)) = x."""
    if f.c[0] != 0:
        raise DegenerateSeries("reversion needs a zero constant term")
    if f.c[1] == 0:
        raise DegenerateSeries("reversion needs a nonzero linear coefficient")
    n = f.order
    if n == 1:
        return Jet([0, 1 / f.c[1]])
    # Lagrange inversion: g_k = [x^(k-1)] (x/f(x))^k / k
    h = Jet(f.c[1:]).reciprocal()
    g = [mpmath.mpf(0)]
    p = h
    for k in range(1, n + 1):
        g.append(p.c[k - 1] / k)
        p = p * h
    return Jet(g)


def _negligible(x, scale):
    return abs(x) <= scale * mpmath.mpf(2) ** (-mpmath.mp.prec + 8)


def jet_reversion(series, order, ramification=None):
    """Invert v = f(rho) in the local parameter lambda = v**(1/m).

    ``m`` is the order of the zero of f at 0 (detected when ``ramification``
    is None).  For m = 1 this is plain reversion.  For m >= 2 one forms
    lambda(rho) = rho (f(rho)/rho^m)^(1/m), taking the principal root of the
    leading coefficient, and reverts that.  The result is rho as a series in
    lambda, truncated at ``order``.
    """
    if order < 1:
        raise InvalidOrder(f"order must be >= 1, got {order}")
    c = series.c
    scale = max([abs(x) for x in c] + [mpmath.mpf(1)])
    if not _negligible(c[0], scale):
        raise DegenerateSeries("series must have zero constant term")
    if ramification is None:
        m = next((k for k in range(1, len(c)) if not _negligible(c[k], scale)), None)
        if m is None:
            raise DegenerateSeries("all coefficients vanish to working precision")
    else:
        m = int(ramification)
        if m < 1 or m >= len(c) or _negligible(c[m], scale):
            raise DegenerateSeries(f"leading coefficient at order {m} vanishes")
        if any(not _negligible(c[k], scale) for k in range(1, m)):
            raise DegenerateSeries(f"series has a zero of order < {m}")
    need = order + m
    if len(c) < need:
        raise InvalidOrder(f"series needs at least {need} coefficients for order {order}")
    h = Jet(c[m : order + m])  # f(rho)/rho^m, order-1 terms
    if m == 1:
        lam = Jet([0] + h.c)
    else:
        root = (h.log() * (mpmath.mpf(1) / m)).exp()
        lam = Jet([0] + root.c)
    return revert(lam)
