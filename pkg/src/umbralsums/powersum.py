"""Multiple power sums, weak-inequality sums and truncated polylogarithms.

``H(n_1..n_r; N) = sum_{N > i_1 > ... > i_r > 0} i_1^{n_1} ... i_r^{n_r}``.

The umbral calculus naturally lets the innermost index run down to 0 with
``0^0 = 1``: it evaluates ``sum_{N > i_1 > ... > i_r >= 0}``.  The two agree
unless the innermost exponent is 0, in which case the extra ``i_r = 0`` terms
are exactly the depth ``r - 1`` sum.  Public functions return the sum as
defined above; pass ``zero_term=True`` to get the raw umbral value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Optional, Sequence, Union

from .bernoulli import bernoulli_number
from .core import Number, Poly, as_rational, binomial
from .umbral import ReductionBase, reduce_nested_product

__all__ = [
    "MultiIndex",
    "PowerSumPoly",
    "as_index",
    "oracle_h",
    "symbolic_h",
    "explicit_expansion_h",
    "expansion_summand",
    "recurrence_h",
    "oracle_s",
    "symbolic_s",
    "weighted_nested_sum",
    "oracle_li",
    "symbolic_li",
    "oracle_multi_li",
]

MultiIndex = tuple[int, ...]


def as_index(index: Sequence[int], allow_empty: bool = False) -> MultiIndex:
    idx = tuple(int(n) for n in index)
    if not idx and not allow_empty:
        raise ValueError("a multi-index needs at least one entry")
    if any(n < 0 for n in idx):
        raise ValueError(f"multi-index entries must be non-negative: {idx}")
    return idx


@dataclass(frozen=True)
class PowerSumPoly:
    """A multiple power sum as a polynomial in its upper limit N."""

    poly: Poly
    index: MultiIndex

    def __call__(self, N: Number) -> Fraction:
        """Value of the sum at N.

        N = 0 is always the empty sum.  When the innermost exponent is 0 the
        sum agrees with ``poly`` only for N >= 1 (e.g. ``max(N - 1, 0)``).
        """
        if N == 0:
            return Fraction(0)
        return self.poly(N)

    @property
    def expected_degree(self) -> int:
        return sum(self.index) + len(self.index)

    def invariant_violations(self) -> list[str]:
        """Structural checks: no constant term, full degree, empty-sum zeros."""
        out = []
        if self.poly[0] != 0:
            out.append(f"constant term {self.poly[0]}")
        if self.poly.degree != self.expected_degree:
            out.append(f"degree {self.poly.degree} != {self.expected_degree}")
        for N in range(len(self.index) + 1):
            v = self.poly(N)
            if v != 0:
                out.append(f"value {v} at N={N}")
        return out


# ---------------------------------------------------------------------------
# brute force


def _decreasing(N: int, r: int, strict: bool = True) -> Iterator[tuple[int, ...]]:
    if strict:
        for t in combinations(range(1, N), r):
            yield t[::-1]
    else:
        for t in combinations_with_replacement(range(1, N + 1), r):
            yield t[::-1]


def _monomial(tup: Sequence[int], index: Sequence[int]) -> int:
    out = 1
    for i, n in zip(tup, index):
        out *= i**n
    return out


def oracle_h(index: Sequence[int], N: int) -> Fraction:
    index = as_index(index)
    return Fraction(sum(_monomial(t, index) for t in _decreasing(N, len(index))))


def oracle_s(index: Sequence[int], N: int) -> Fraction:
    """Brute force over ``N >= i_1 >= ... >= i_r >= 1``."""
    index = as_index(index)
    return Fraction(sum(_monomial(t, index) for t in _decreasing(N, len(index), strict=False)))


def oracle_li(index: Sequence[int], z: Number, N: int) -> Fraction:
    index = as_index(index)
    z = as_rational(z)
    return sum((_monomial(t, index) * z ** t[0] for t in _decreasing(N, len(index))), Fraction(0))


def oracle_multi_li(index: Sequence[int], zs: Sequence[Number], N: int) -> Fraction:
    index = as_index(index)
    if len(zs) != len(index):
        raise ValueError("need one z per index entry")
    zs = [as_rational(z) for z in zs]
    total = Fraction(0)
    for t in _decreasing(N, len(index)):
        w = Fraction(_monomial(t, index))
        for i, z in zip(t, zs):
            w *= z**i
        total += w
    return total


# ---------------------------------------------------------------------------
# symbolic evaluation


@lru_cache(maxsize=None)
def _symbolic_h_poly(index: MultiIndex, zero_term: bool) -> Poly:
    if not index:
        return Poly([1])
    poly = reduce_nested_product(index, ReductionBase.finite())
    if index[-1] == 0 and not zero_term:
        poly = poly - _symbolic_h_poly(index[:-1], False)
    return poly


def symbolic_h(
    index: Sequence[int], N: Optional[Number] = None, zero_term: bool = False
) -> Union[PowerSumPoly, Fraction]:
    """Multiple power sum from the nested H-symbol product.

    With ``N`` omitted the result is a :class:`PowerSumPoly`; N may be any
    rational, the polynomial being its natural continuation.
    """
    index = as_index(index)
    result = PowerSumPoly(_symbolic_h_poly(index, zero_term), index)
    return result if N is None else result(N)


def _level_sizes(index: MultiIndex, ks: Sequence[int]) -> list[int]:
    """D_j = sum_{i>=j} n_i + (r - j + 1) - sum_{i>j} k_i for j = 1..r (0-based list)."""
    r = len(index)
    sizes = [0] * r
    tail_n = 0
    tail_k = 0
    for j in range(r - 1, -1, -1):
        tail_n += index[j]
        sizes[j] = tail_n + (r - j) - tail_k
        tail_k += ks[j]
    return sizes


def expansion_summand(index: Sequence[int], ks: Sequence[int]) -> tuple[Fraction, int]:
    """Coefficient and N-exponent of one tuple ``(k_1..k_r)`` of the explicit expansion.

    The coefficient is ``prod_j C(D_j, k_j) B_{k_j} / D_j`` and the exponent
    ``D_1 - k_1``.
    """
    index = as_index(index)
    sizes = _level_sizes(index, ks)
    coeff = Fraction(1)
    for D, k in zip(sizes, ks):
        b = bernoulli_number(k)
        if b == 0:
            return Fraction(0), sizes[0] - ks[0]
        coeff *= Fraction(binomial(D, k) * b, D)
    return coeff, sizes[0] - ks[0]


def _expansion_tuples(index: MultiIndex) -> Iterator[tuple[int, ...]]:
    # k_j in [0, D_j - 1], chosen from j = r down to 1
    r = len(index)

    def rec(j: int, ks: list[int], D_next: int, k_next: int):
        D = index[j] + 1 + (D_next - k_next if j < r - 1 else 0)
        for k in range(D):
            ks[j] = k
            if j == 0:
                yield tuple(ks)
            else:
                yield from rec(j - 1, ks, D, k)

    yield from rec(r - 1, [0] * r, 0, 0)


@lru_cache(maxsize=None)
def _explicit_poly(index: MultiIndex, zero_term: bool) -> Poly:
    if not index:
        return Poly([1])
    coeffs: dict[int, Fraction] = {}
    for ks in _expansion_tuples(index):
        c, e = expansion_summand(index, ks)
        if c:
            coeffs[e] = coeffs.get(e, 0) + c
    poly = Poly(coeffs.get(e, 0) for e in range(max(coeffs, default=-1) + 1))
    if index[-1] == 0 and not zero_term:
        poly = poly - _explicit_poly(index[:-1], False)
    return poly


def explicit_expansion_h(index: Sequence[int], zero_term: bool = False) -> PowerSumPoly:
    """Closed nested-sum expansion of the power-sum polynomial, tuple by tuple."""
    index = as_index(index)
    return PowerSumPoly(_explicit_poly(index, zero_term), index)


def _recurrence(index: MultiIndex, N: Fraction) -> Fraction:
    if not index:
        return Fraction(1)
    if len(index) == 1:
        return symbolic_h(index, N)
    *head, prev, last = index
    total = Fraction(0)
    for k in range(1, last + 2):
        b = bernoulli_number(last + 1 - k)
        if b:
            total += binomial(last + 1, k) * b * _recurrence((*head, prev + k), N)
    total /= last + 1
    if last == 0:
        total -= _recurrence(index[:-1], N)
    return total


def recurrence_h(index: Sequence[int], N: Number) -> Fraction:
    """Depth-lowering recurrence on the last two exponents."""
    index = as_index(index)
    if len(index) < 2:
        raise ValueError("the recurrence needs depth >= 2")
    return _recurrence(index, as_rational(N))


# ---------------------------------------------------------------------------
# weak inequalities, polynomial weights, polylogarithms


@lru_cache(maxsize=None)
def _symbolic_s_poly(index: MultiIndex, zero_term: bool) -> Poly:
    if not index:
        return Poly([1])
    poly = reduce_nested_product(index, ReductionBase.finite(), shift=1)
    if index[-1] == 0 and not zero_term:
        # i_r = 0 terms; weak inequalities let i_{r-1} reach 0 as well
        poly = poly - _symbolic_s_poly(index[:-1], True)
    return poly


def symbolic_s(index: Sequence[int], N: Optional[Number] = None, zero_term: bool = False):
    """Weak-inequality sum via the barred symbols ``H(N+1)``, ``H(H'+1)``."""
    index = as_index(index)
    poly = _symbolic_s_poly(index, zero_term)
    return poly if N is None else poly(N)


def weighted_nested_sum(polys: Sequence[Poly], N: Number) -> Fraction:
    """``sum_{N > i_1 > ... > i_r > 0} P_1(i_1) ... P_r(i_r)`` by linearity."""
    if not polys:
        raise ValueError("need at least one polynomial")
    for k, p in enumerate(polys):
        if p[0] != 0:
            raise ValueError(f"polynomial {k} has a non-zero constant term {p[0]}")
    total = Fraction(0)

    def rec(k: int, exps: tuple[int, ...], coeff: Fraction):
        nonlocal total
        if k == len(polys):
            total += coeff * symbolic_h(exps, N)
            return
        for e, a in enumerate(polys[k].coeffs):
            if a:
                rec(k + 1, exps + (e,), coeff * a)

    rec(0, (), Fraction(1))
    return total


def _li(index: MultiIndex, z: Fraction, N: int, zero_term: bool) -> Fraction:
    if not index:
        return Fraction(1 if N > 0 else 0)
    value = reduce_nested_product(index, ReductionBase.apostol(z, N))
    if index[-1] == 0 and not zero_term:
        value -= _li(index[:-1], z, N, False)
    return value


def symbolic_li(index: Sequence[int], z: Number, N: int, zero_term: bool = False) -> Fraction:
    """Truncated polylogarithm with the Apostol symbol at the outermost level."""
    index = as_index(index)
    z = as_rational(z)
    if z == 0:
        raise ValueError("z must be non-zero")
    if int(N) != N or N < 0:
        raise ValueError("N must be a natural number")
    return _li(index, z, int(N), zero_term)
