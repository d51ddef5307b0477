"""Multiple zeta values at non-positive integers.

``zeta(-n_1, ..., -n_r)`` three ways: an explicit Bernoulli-number sum, the
renormalized H symbols, and the constant term of the power-sum expansion.
Every function returns zeta itself; the sign ``(-1)^(n_1+...+n_r)`` linking
it to the renormalized sum is applied internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .bernoulli import bernoulli_number
from .core import binomial
from .powersum import MultiIndex, _level_sizes, as_index, expansion_summand
from .umbral import ReductionBase, reduce_nested_product

__all__ = [
    "ZetaValue",
    "zeta_raabe",
    "zeta_renorm",
    "zeta_constant_term",
    "zeta_depth2",
    "zeta",
    "METHODS",
]

METHODS = ("raabe", "renorm", "constant-term", "depth2")


@dataclass(frozen=True)
class ZetaValue:
    index: MultiIndex
    value: Fraction
    method: str


def _sign(index: MultiIndex) -> int:
    return -1 if sum(index) % 2 else 1


def _raabe_tuples(index: MultiIndex) -> Iterator[tuple[int, ...]]:
    # k_r, ..., k_2 in [0, D_j], innermost first; k_1 is then forced to D_1
    r = len(index)
    ks = [0] * r

    def rec(j: int, D_next: int, k_next: int):
        if j == 0:
            ks[0] = index[0] + 1 + D_next - k_next
            yield tuple(ks)
            return
        D = index[j] + 1 + (D_next - k_next if j < r - 1 else 0)
        for k in range(D + 1):
            ks[j] = k
            yield from rec(j - 1, D, k)

    if r == 1:
        ks[0] = index[0] + 1
        yield tuple(ks)
    else:
        yield from rec(r - 1, 0, 0)


def zeta_raabe(index: Sequence[int]) -> Fraction:
    """Explicit (r-1)-fold Bernoulli-number sum."""
    index = as_index(index)
    total = Fraction(0)
    for ks in _raabe_tuples(index):
        c, e = expansion_summand(index, ks)
        assert e == 0
        total += c
    return _sign(index) * total


def zeta_renorm(index: Sequence[int]) -> Fraction:
    """Nested H symbols with ``H_1^n(inf) -> B_{n+1}/(n+1)`` at the outer level."""
    index = as_index(index)
    return _sign(index) * reduce_nested_product(index, ReductionBase.renormalized())


def _box(index: MultiIndex) -> Iterator[tuple[int, ...]]:
    """Every tuple with ``0 <= k_j <= D_j`` for all j, D_j recomputed per tuple."""
    r = len(index)
    ks = [0] * r

    def rec(j: int):
        if j < 0:
            yield tuple(ks)
            return
        ks[j] = 0
        D = _level_sizes(index, ks)[j]
        for k in range(D + 1):
            ks[j] = k
            yield from rec(j - 1)
        ks[j] = 0

    yield from rec(r - 1)


def zeta_constant_term(index: Sequence[int]) -> Fraction:
    """Constant slot of the expansion sum, i.e. the tuples excluded from it."""
    index = as_index(index)
    total = Fraction(0)
    for ks in _box(index):
        c, e = expansion_summand(index, ks)
        if e == 0:
            total += c
    return _sign(index) * total


def zeta_depth2(n: int, m: int) -> Fraction:
    """Single-sum closed form for ``zeta(-n, -m)``."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be natural numbers")
    total = Fraction(0)
    for k in range(m + 2):
        top = n + m + 2 - k
        total += Fraction(binomial(m + 1, k) * bernoulli_number(k), m + 1) * bernoulli_number(top) / top
    return total if (n + m) % 2 == 0 else -total


def zeta(index: Sequence[int], method: str = "renorm") -> ZetaValue:
    index = as_index(index)
    if method == "raabe":
        value = zeta_raabe(index)
    elif method == "renorm":
        value = zeta_renorm(index)
    elif method == "constant-term":
        value = zeta_constant_term(index)
    elif method == "depth2":
        if len(index) != 2:
            raise ValueError("the depth-2 closed form needs exactly two entries")
        value = zeta_depth2(*index)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ZetaValue(index, value, method)
