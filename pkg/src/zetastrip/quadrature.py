"""Adaptive Gauss-Legendre quadrature on parametrized complex paths.

Each panel is integrated with an n-point Gauss-Legendre rule on the whole
panel and on its two halves; the difference is the panel's error estimate
and the two-half value is kept.  The panel with the largest estimate is
split until the total estimate is below the tolerance.  Unbounded paths
(rays, lines) are first truncated by marching outward until the integrand
has decayed, and a geometric tail bound is added to the error.
"""

from dataclasses import dataclass
from functools import lru_cache
import heapq
import math

import mpmath

from .errors import QuadratureFailure

mp = mpmath.mp

GL_POINTS = 20
MAX_PANELS = 20000


@lru_cache(maxsize=64)
def gl_nodes(n, prec):
    """Gauss-Legendre nodes and weights on [-1, 1] at ``prec`` bits."""
    with mp.workprec(prec + 20):
        xs, ws = [], []
        eps = mpmath.mpf(2) ** (-prec - 10)
        for i in range(1, n // 2 + 1):
            x = mpmath.cos(mpmath.pi * (i - mpmath.mpf(0.25)) / (n + mpmath.mpf(0.5)))
            for _ in range(100):
                p0, p1 = mpmath.mpf(1), x
                for k in range(2, n + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < eps:
                    break
            p0, p1 = mpmath.mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            xs += [x, -x]
            ws += [w, w]
        if n % 2:
            p0, p1 = mpmath.mpf(1), mpmath.mpf(0)
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * 0 * p1 - (k - 1) * p0) / k
            dp = n * (0 * p1 - p0) / (0 - 1)
            xs.append(mpmath.mpf(0))
            ws.append(2 / (dp * dp))
    return tuple(xs), tuple(ws)


# paths -----------------------------------------------------------------------


class SegmentPath:
    """Straight segment from a to b, parameter tau in [0, 1]."""

    def __init__(self, a, b):
        self.a = mpmath.mpmathify(a)
        self.b = mpmath.mpmathify(b)

    def z(self, tau):
        return self.a + (self.b - self.a) * tau

    def dz(self, tau):
        return self.b - self.a

    def domain(self):
        return mpmath.mpf(0), mpmath.mpf(1)

    bounded = True


class SemicirclePath:
    """Semicircle from i*low to i*high (side="right", Re z >= 0) or from
    i*high back to i*low (side="left", Re z <= 0).

    z(theta) = i (low + high)/2 + (high - low)/2 e^(i theta), with theta in
    [-pi/2, pi/2] on the right and [pi/2, 3 pi/2] on the left.
    """

    def __init__(self, low, high, side="right"):
        self.low = mpmath.mpf(low)
        self.high = mpmath.mpf(high)
        if not 0 < self.low < self.high:
            raise ValueError("need 0 < low < high")
        if side not in ("right", "left"):
            raise ValueError(side)
        self.side = side
        self.center = 1j * (self.low + self.high) / 2
        self.radius = (self.high - self.low) / 2

    def z(self, th):
        return self.center + self.radius * mpmath.expj(th)

    def dz(self, th):
        return 1j * self.radius * mpmath.expj(th)

    def domain(self):
        h = mpmath.pi / 2
        return (-h, h) if self.side == "right" else (h, 3 * h)

    bounded = True


class RayPath:
    """Ray start + r e^(i angle), r >= 0, with -pi/2 < angle < pi/2 for the
    contours of the exact representation (other angles are accepted)."""

    def __init__(self, start, angle=0, truncation_radius=None, step=None):
        self.start = mpmath.mpmathify(start)
        self.angle = mpmath.mpf(angle)
        self.dir = mpmath.expj(self.angle)
        self.truncation_radius = truncation_radius
        self.step = step

    def z(self, r):
        return self.start + r * self.dir

    def dz(self, r):
        return self.dir

    bounded = False
    two_sided = False


class LinePath:
    """Full line point + r e^(i angle), r in (-inf, inf)."""

    def __init__(self, point, angle, truncation_radius=None, step=None):
        self.start = mpmath.mpmathify(point)
        self.angle = mpmath.mpf(angle)
        self.dir = mpmath.expj(self.angle)
        self.truncation_radius = truncation_radius
        self.step = step

    def z(self, r):
        return self.start + r * self.dir

    def dz(self, r):
        return self.dir

    bounded = False
    two_sided = True


@dataclass
class QuadResult:
    value: object
    error: object
    panels: int
    evals: int
    truncation: object = None


# integrator ------------------------------------------------------------------


class _Integrator:
    def __init__(self, g, n):
        self.g = g  # integrand in the real parameter
        self.xs, self.ws = gl_nodes(n, mp.prec)
        self.evals = 0

    def rule(self, a, b):
        h = (b - a) / 2
        m = (a + b) / 2
        acc = mpmath.mpc(0)
        for x, w in zip(self.xs, self.ws):
            acc += w * self.g(m + h * x)
        self.evals += len(self.xs)
        return acc * h

    def panel(self, a, b, whole=None):
        if whole is None:
            whole = self.rule(a, b)
        m = (a + b) / 2
        left = self.rule(a, m)
        right = self.rule(m, b)
        return abs(whole - left - right), left, right


def _adaptive(g, breaks, tol, n=GL_POINTS, max_panels=MAX_PANELS, floor_err=0):
    it = _Integrator(g, n)
    heap = []
    counter = 0
    total_err = mpmath.mpf(0)
    for a, b in zip(breaks[:-1], breaks[1:]):
        err, l, r = it.panel(a, b)
        heapq.heappush(heap, (-err, counter, a, b, l, r))
        counter += 1
        total_err += err
    while total_err > tol - floor_err and len(heap) < max_panels:
        negerr, _, a, b, l, r = heapq.heappop(heap)
        total_err += negerr
        m = (a + b) / 2
        if abs(b - a) < mpmath.mpf(2) ** (-mp.prec // 2):
            total_err -= negerr
            heapq.heappush(heap, (negerr, counter, a, b, l, r))
            counter += 1
            break
        for (a2, b2, w2) in ((a, m, l), (m, b, r)):
            err, l2, r2 = it.panel(a2, b2, w2)
            heapq.heappush(heap, (-err, counter, a2, b2, l2, r2))
            counter += 1
            total_err += err
    # deterministic summation order: by left endpoint
    parts = sorted(heap, key=lambda e: e[2])
    value = mpmath.fsum(e[4] + e[5] for e in parts)
    total_err = mpmath.fsum(-e[0] for e in parts)
    return value, total_err, len(parts), it.evals


def _march(fpar, step, tol, r_max, sign=1):
    """Walk r = 0, step, 2 step, ... until |f| decays; return (R, tail_bound, peak)."""
    r = mpmath.mpf(0)
    prev = abs(fpar(r))
    peak = prev
    small = 0
    h = mpmath.mpf(step)
    while True:
        r2 = r + h
        cur = abs(fpar(sign * r2))
        peak = max(peak, cur)
        if cur * h < tol * mpmath.mpf(10) ** -3 and cur <= prev:
            small += 1
        else:
            small = 0
        if small >= 3:
            kappa = (mpmath.log(prev) - mpmath.log(cur)) / h if cur > 0 and prev > 0 else mpmath.inf
            tail = cur / kappa if kappa > 0 else cur * r2
            return r2, tail, peak
        if r2 > r_max:
            raise QuadratureFailure(f"integrand has not decayed by r = {float(r2):.3g}")
        r, prev = r2, cur
        if r > 8 * step:
            h = min(h * mpmath.mpf(1.25), r / 4)


def integrate_path(f, path, tol=1e-30, n=GL_POINTS, max_panels=MAX_PANELS, breaks=None, r_max=1e6):
    """Integrate f(z) dz along ``path`` to absolute tolerance ``tol``.

    ``breaks`` (parameter values) seeds the initial panels; for unbounded
    paths the truncation radius is found by marching.  Returns a QuadResult
    with the estimated error (panel estimates plus tail bounds).  Raises
    QuadratureFailure, carrying the best estimate, if the panel budget is
    exhausted.
    """
    tol = mpmath.mpf(tol)

    def g(tau):
        return f(path.z(tau)) * path.dz(tau)

    tail = mpmath.mpf(0)
    trunc = None
    if path.bounded:
        a, b = path.domain()
        if breaks is None:
            k = 4
            breaks = [a + (b - a) * j / k for j in range(k + 1)]
    else:
        step = path.step or 1
        sides = [1, -1] if path.two_sided else [1]
        ends = []
        for sgn in sides:
            if path.truncation_radius is not None:
                R, tl = mpmath.mpf(path.truncation_radius), mpmath.mpf(0)
            else:
                R, tl, _ = _march(lambda r: f(path.z(r)), step, tol, r_max, sgn)
            ends.append(R)
            tail += tl
        trunc = ends
        if path.two_sided:
            lo, hi = -ends[1], ends[0]
        else:
            lo, hi = mpmath.mpf(0), ends[0]
        if breaks is None:
            k = max(4, int(math.ceil(float((hi - lo) / step))))
            k = min(k, 2000)
            breaks = [lo + (hi - lo) * j / k for j in range(k + 1)]
        else:
            breaks = sorted(set([lo] + [x for x in breaks if lo < x < hi] + [hi]))
    breaks = [mpmath.mpf(x) for x in breaks]
    value, err, panels, evals = _adaptive(g, breaks, tol, n, max_panels, tail)
    err += tail
    if err > tol:
        raise QuadratureFailure(
            f"tolerance {mpmath.nstr(tol, 3)} not reached (estimate {mpmath.nstr(err, 3)})", value, err
        )
    return QuadResult(value, err, panels, evals, trunc)


def integrate_segment(f, a, b, tol=1e-30, n=GL_POINTS, breaks=None):
    """Integral of f over the real interval [a, b] (f takes a real argument)."""
    a = mpmath.mpf(a)
    b = mpmath.mpf(b)
    if breaks is None:
        breaks = [a, b]
    value, err, panels, evals = _adaptive(f, [mpmath.mpf(x) for x in breaks], mpmath.mpf(tol), n)
    if err > tol:
        raise QuadratureFailure("segment tolerance not reached", value, err)
    return QuadResult(value, err, panels, evals)
