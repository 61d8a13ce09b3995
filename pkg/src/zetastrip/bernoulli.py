"""Exact Bernoulli numbers B_2n as Fractions, via tangent numbers.

The table grows on demand and is never mutated in place after a read, so
concurrent readers see either the old or the new list.
"""

from fractions import Fraction
import threading

_lock = threading.Lock()
_table = [Fraction(1)]  # _table[n] = B_2n


def _extend(n):
    # tangent numbers T_1..T_n (integer recurrence), then
    # B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))
    T = [0] * (n + 1)
    T[1] = 1
    for k in range(2, n + 1):
        T[k] = (k - 1) * T[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j]
    out = [Fraction(1)]
    for k in range(1, n + 1):
        four = 4 ** k
        out.append(Fraction((-1) ** (k - 1) * 2 * k * T[k], four * (four - 1)))
    return out


def bernoulli_even(k):
    """B_{2k} as an exact Fraction."""
    global _table
    if k >= len(_table):
        with _lock:
            if k >= len(_table):
                _table = _extend(max(2 * k, 32))
    return _table[k]


def bernoulli(n):
    """B_n with the convention B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    return bernoulli_even(n // 2)
