"""Closed class of rational terms produced by the operator (1/(n + e it/z)) d/dz.

A term is stored in the scaled variable w = it/(n z):

    n^(-m) * z^(alpha - sigma) * P(w) / (1 + e w)^k ,   e = +1 (plus) or -1 (minus)

which is the same function as z^(alpha - sigma) P~(z) / (n z + e i t)^k for a
polynomial P~ in z (see :meth:`SigmaRational.numerator_in_z`).  The seed
z^(-sigma)/(n + it/z) is (m, alpha, P, k) = (1, 0, [1], 1).
"""

from dataclasses import dataclass

import mpmath

_SIGN = {"plus": 1, "minus": -1, 1: 1, -1: -1}


@dataclass(frozen=True)
class SigmaRational:
    sigma: object
    alpha_offset: int
    numerator: tuple  # coefficients of P(w), low degree first
    pole_power: int
    n_power: int = 1
    variant: int = 1

    @classmethod
    def seed(cls, sigma, variant="plus"):
        return cls(mpmath.mpmathify(sigma), 0, (mpmath.mpf(1),), 1, 1, _SIGN[variant])

    def derive(self):
        """Apply (1/(n + e it/z)) d/dz.

        With dw/dz = -w/z the new numerator is
        ((alpha - sigma) P - w P')(1 + e w) + k e w P, the pole power grows
        by 2, alpha and the power of n each drop by one.
        """
        e = self.variant
        a = self.alpha_offset - self.sigma
        P = list(self.numerator)
        deg = len(P) - 1
        Q = [mpmath.mpf(0)] * (deg + 2)
        for d, p in enumerate(P):
            base = (a - d) * p  # (alpha - sigma) P - w P' has coefficient (a - d) p_d at w^d
            Q[d] += base
            Q[d + 1] += e * base
            Q[d + 1] += self.pole_power * e * p
        while len(Q) > 1 and Q[-1] == 0:
            Q.pop()
        return SigmaRational(self.sigma, self.alpha_offset - 1, tuple(Q), self.pole_power + 2, self.n_power + 1, e)

    def times_z_over_pole(self):
        """Multiply by z/(n z + e i t) = 1/(n (1 + e w))."""
        return SigmaRational(
            self.sigma, self.alpha_offset, self.numerator, self.pole_power + 1, self.n_power + 1, self.variant
        )

    def rational_part(self, w):
        """P(w)/(1 + e w)^k."""
        acc = mpmath.mpc(0)
        for p in reversed(self.numerator):
            acc = acc * w + p
        return acc / (1 + self.variant * w) ** self.pole_power

    def evaluate(self, z, n, t):
        """Numerical value at z (principal branch of z^(alpha - sigma))."""
        z = mpmath.mpmathify(z)
        w = 1j * mpmath.mpmathify(t) / (n * z)
        zpow = mpmath.exp((self.alpha_offset - self.sigma) * mpmath.log(z))
        return mpmath.mpf(n) ** (-self.n_power) * zpow * self.rational_part(w)

    def numerator_in_z(self, n, t):
        """Polynomial P~ with term = z^(alpha - sigma) P~(z) / (n z + e i t)^k.

        Returned as a list of coefficients, index = power of z.  Uses
        w^d = (it)^d (nz)^(-d) and (1 + e w)^k = (nz + e it)^k (nz)^(-k).
        """
        k = self.pole_power
        it = 1j * mpmath.mpmathify(t)
        n = mpmath.mpf(n)
        coeffs = [mpmath.mpc(0)] * (k + 1)
        for d, p in enumerate(self.numerator):
            coeffs[k - d] += p * it ** d * n ** (k - d - self.n_power)
        return coeffs

    def as_jet_coefficients(self, order):
        """Taylor coefficients r_0..r_order of P(w)/(1 + e w)^k in w."""
        e = self.variant
        k = self.pole_power
        inv = [mpmath.binomial(-k, j) * e ** j for j in range(order + 1)]
        P = self.numerator
        return [mpmath.fsum(P[d] * inv[j - d] for d in range(min(j, len(P) - 1) + 1)) for j in range(order + 1)]


def operator_terms(sigma, N, variant="plus"):
    """The N terms (op)^j z^(-sigma)/(n + e it/z), j = 0..N-1."""
    out = [SigmaRational.seed(sigma, variant)]
    for _ in range(1, N):
        out.append(out[-1].derive())
    return out


def sigma_rational_derive(term, variant=None):
    """Functional form of :meth:`SigmaRational.derive`."""
    if variant is not None and _SIGN[variant] != term.variant:
        term = SigmaRational(term.sigma, term.alpha_offset, term.numerator, term.pole_power, term.n_power, _SIGN[variant])
    return term.derive()
