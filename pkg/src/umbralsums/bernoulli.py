"""Bernoulli and Apostol-Bernoulli numbers and polynomials.

Convention: ``B_1 = -1/2``, i.e. the generating function ``z / (e^z - 1)``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .core import RISING, Number, Poly, as_rational, binomial, pochhammer, stirling2

__all__ = [
    "BernoulliCache",
    "bernoulli_number",
    "bernoulli_poly",
    "apostol_bernoulli_poly",
    "apostol_faulhaber",
    "faulhaber_poly",
    "hansen_reduce",
    "HANSEN_CONVENTION",
]


class BernoulliCache:
    """Grow-only table of Bernoulli numbers.

    Readers never take the lock; a writer extends a private copy and then
    publishes it with a single assignment, so no reader sees a partial entry.
    """

    def __init__(self):
        self._table: tuple[Fraction, ...] = (Fraction(1),)
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._table)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be non-negative")
        table = self._table
        if n < len(table):
            return table[n]
        with self._lock:
            table = list(self._table)
            for m in range(len(table), n + 1):
                # sum_{k=0}^{m} C(m+1, k) B_k = 0
                s = sum(binomial(m + 1, k) * table[k] for k in range(m))
                table.append(-s / (m + 1))
            self._table = tuple(table)
        return self._table[n]


_CACHE = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    return _CACHE.get(n)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly:
    """B_n(x) = sum_k C(n, k) B_{n-k} x^k."""
    return Poly(binomial(n, k) * bernoulli_number(n - k) for k in range(n + 1))


@lru_cache(maxsize=None)
def faulhaber_poly(n: int) -> Poly:
    """(B_{n+1}(x) - B_{n+1}) / (n+1), i.e. sum_{k=0}^{x-1} k^n with 0^0 = 1."""
    return (bernoulli_poly(n + 1) - bernoulli_number(n + 1)) / (n + 1)


@lru_cache(maxsize=None)
def _apostol_table(lam: Fraction, n: int) -> tuple[Poly, ...]:
    # lam * B_n(x+1|lam) - B_n(x|lam) = n x^(n-1), with the shift expanded
    # binomially; solved for B_n degree by degree.
    polys: list[Poly] = []
    for m in range(n + 1):
        rhs = Poly.monomial(m - 1, m) if m else Poly()
        for k in range(m):
            rhs = rhs - polys[k] * (lam * binomial(m, k))
        polys.append(rhs / (lam - 1))
    return tuple(polys)


def apostol_bernoulli_poly(n: int, lam: Number = 1) -> Poly:
    """Apostol-Bernoulli polynomial B_n(x|lam) from t e^{xt} / (lam e^t - 1)."""
    lam = as_rational(lam)
    if lam == 1:
        return bernoulli_poly(n)
    return _apostol_table(lam, n)[n]


def apostol_faulhaber(n: int, lam: Number, m: int) -> Fraction:
    """sum_{j=1}^{m-1} lam^j j^n through the Apostol-Bernoulli closed form.

    The closed form counts the ``j = 0`` term ``lam^0 * 0^0 = 1`` when
    ``n == 0``; it is removed so the result is the sum as written.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    lam = as_rational(lam)
    p = apostol_bernoulli_poly(n + 1, lam)
    value = (lam**m * p(m) - p(0)) / (n + 1)
    if n == 0:
        value -= 1
    return value


# Fixed by the identity check in tests/test_bernoulli.py: only the rising
# factorial turns (-z)_{l+1} (-1)^{l+1} / (l+1)! into C(z, l+1).
HANSEN_CONVENTION = RISING


def hansen_reduce(p: int, z: Number, convention: str = HANSEN_CONVENTION) -> Fraction:
    """sum_l S(p,l) l! (-1)^{l+1} / (l+1)! (-z)_{l+1}  ==  (B_{p+1}(z) - B_{p+1})/(p+1)."""
    z = as_rational(z)
    total = Fraction(0)
    for l in range(p + 1):
        s = stirling2(p, l)
        if s:
            # l! / (l+1)! = 1 / (l+1)
            sign = 1 if l % 2 else -1
            total += Fraction(sign * s, l + 1) * pochhammer(-z, l + 1, convention)
    return total
