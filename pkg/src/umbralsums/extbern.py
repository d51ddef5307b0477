"""Extended (multi-index) Bernoulli polynomials.

The shifted polynomials ``beta_{n_1..n_r}(z)`` have no constant term and are
the products ``prod_k n_k H_{1..k}^{n_k - 1}`` evaluated at upper limit z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .bernoulli import bernoulli_poly, faulhaber_poly
from .core import Number, Poly, as_rational
from .powersum import MultiIndex, as_index, symbolic_h
from .umbral import ReductionBase, descend, reduce_v_route, umbral_derivative, v_route_prereduction

__all__ = [
    "ExtBernoulliPoly",
    "CheckReport",
    "beta_symbolic",
    "beta_tilde",
    "beta_recurrence_check",
    "tilde_recurrence_check",
    "derivative_link_check",
    "beta_example_identity",
    "connection_probe",
    "solve_difference",
    "binomial_poly",
    "SHIFTED",
    "TILDE",
    "SHIFTED_ZERO",
]

SHIFTED = "shifted"
TILDE = "tilde"
SHIFTED_ZERO = "shifted-zero"


@dataclass(frozen=True)
class ExtBernoulliPoly:
    poly: Poly
    index: MultiIndex
    variant: str = SHIFTED

    def __call__(self, z: Number) -> Fraction:
        return self.poly(z)


@dataclass
class CheckReport:
    passed: bool
    lhs: object = None
    rhs: object = None
    residual: object = None
    detail: dict = field(default_factory=dict)


@lru_cache(maxsize=None)
def _beta_poly(index: MultiIndex) -> Poly:
    if any(n == 0 for n in index):
        return Poly()
    q = Poly.monomial(index[-1] - 1)
    return descend(q, [n - 1 for n in index[:-1]], ReductionBase.finite()) * prod(index)


def beta_symbolic(index: Sequence[int]) -> ExtBernoulliPoly:
    """Shifted extended Bernoulli polynomial; zero if any entry is 0."""
    index = as_index(index)
    return ExtBernoulliPoly(_beta_poly(index), index, SHIFTED)


@lru_cache(maxsize=None)
def _tilde_poly(index: MultiIndex) -> Poly:
    if len(index) == 1:
        return bernoulli_poly(index[0])
    head, last = index[:-1], index[-1]
    if any(n == 0 for n in head):
        return Poly()
    # last factor (B_r + H_{1..r-1})^{n_r} = B_{n_r}(H_{1..r-1}), merged with
    # n_{r-1} H_{1..r-1}^{n_{r-1}-1} before the level-(r-1) rule applies
    q = bernoulli_poly(last) * Poly.monomial(head[-1] - 1, head[-1])
    return descend(q, [n - 1 for n in head[:-1]], ReductionBase.finite()) * prod(head[:-1])


def beta_tilde(index: Sequence[int]) -> ExtBernoulliPoly:
    """Variant whose depth-1 member is the ordinary Bernoulli polynomial."""
    index = as_index(index)
    return ExtBernoulliPoly(_tilde_poly(index), index, TILDE)


def _difference_residual(p: Poly, index: MultiIndex, tail: Poly) -> Poly:
    n1 = index[0]
    rhs = Poly.monomial(n1 - 1, n1) * tail if n1 else Poly()
    return p.shift(1) - p - rhs


def beta_recurrence_check(index: Sequence[int], z_samples: Sequence[Number] = ()) -> CheckReport:
    """``beta(z+1) - beta(z) = n_1 z^{n_1-1} beta_tail(z)`` as a polynomial identity."""
    index = as_index(index)
    if len(index) < 2:
        raise ValueError("the recurrence needs depth >= 2")
    if any(n == 0 for n in index):
        raise ValueError("all entries must be >= 1")
    p = _beta_poly(index)
    residual = _difference_residual(p, index, _beta_poly(index[1:]))
    samples = {str(as_rational(z)): residual(z) for z in z_samples}
    passed = not residual and all(v == 0 for v in samples.values())
    return CheckReport(passed, residual=residual, detail={"samples": samples})


def tilde_recurrence_check(index: Sequence[int]) -> CheckReport:
    """Same difference equation for the tilde variant, whose depth-1 tail is B_n(z)."""
    index = as_index(index)
    if len(index) < 2:
        raise ValueError("the recurrence needs depth >= 2")
    residual = _difference_residual(_tilde_poly(index), index, _tilde_poly(index[1:]))
    return CheckReport(not residual, residual=residual)


def derivative_link_check(index: Sequence[int]) -> CheckReport:
    """Differentiate H's unreduced symbol form in every b_k, reduce, compare with beta."""
    index = as_index(index)
    if any(n == 0 for n in index):
        raise ValueError("all entries must be >= 1")
    p = v_route_prereduction(index)
    for k in range(1, len(index) + 1):
        p = umbral_derivative(p, f"b{k}")
    lhs = reduce_v_route(p, len(index))
    rhs = _beta_poly(index)
    return CheckReport(lhs == rhs, lhs=lhs, rhs=rhs, residual=lhs - rhs)


def beta_example_identity(m: int, N: int) -> CheckReport:
    """``2 sum_{k<N} k B_m(k) == (N^2 - N) B_m(N) - m (H_{-m-1}(N) + H_{-m}(N))``."""
    if m < 0 or N < 0:
        raise ValueError("m and N must be natural numbers")
    bm = bernoulli_poly(m)
    lhs = 2 * sum((k * bm(k) for k in range(N)), Fraction(0))
    rhs = (N * N - N) * bm(N)
    if m:
        rhs -= m * (symbolic_h((m + 1,), N) + symbolic_h((m,), N))
    return CheckReport(lhs == rhs, lhs=lhs, rhs=rhs, residual=lhs - rhs)


def _tail_poly(index: MultiIndex, convention: str) -> Poly:
    if not index:
        return Poly([1])
    if convention == TILDE:
        return _tilde_poly(index)
    if convention == SHIFTED_ZERO:
        return _beta_poly(index)
    raise ValueError(f"unknown convention {convention!r}")


def connection_probe(index: Sequence[int], N: Number, convention: str = SHIFTED_ZERO) -> CheckReport:
    """Evaluate both sides of the beta / B / H connection formula; never asserts.

    Right side: ``beta_{n_1}(N) B_{tail}(N) - n_2 H^{n_2-1} B_{n_3..}(H) beta_{n_1}(H+1)``
    with ``x^m -> H_{-m}(N)`` applied to the total power of the H symbol.
    The undetermined constant terms of the ``B`` factors follow ``convention``.
    """
    index = as_index(index)
    if len(index) < 2:
        raise ValueError("the connection formula needs depth >= 2")
    N = as_rational(N)
    n1, n2 = index[0], index[1]
    beta1 = _beta_poly((n1,))
    lhs = _beta_poly(index)(N)
    first = beta1(N) * _tail_poly(index[1:], convention)(N)
    if n2:
        x_poly = Poly.monomial(n2 - 1, n2) * _tail_poly(index[2:], convention) * beta1.shift(1)
    else:
        x_poly = Poly()
    h_part = sum((c * faulhaber_poly(m)(N) for m, c in enumerate(x_poly.coeffs) if c), Fraction(0))
    rhs = first - h_part
    return CheckReport(
        lhs == rhs,
        lhs=lhs,
        rhs=rhs,
        residual=lhs - rhs,
        detail={"convention": convention, "symbol_polynomial": x_poly},
    )


def binomial_poly(m: int) -> Poly:
    """C(x, m) as a polynomial in x."""
    out = Poly([1])
    for i in range(m):
        out = out * Poly([-i, 1])
    return out / factorial(m)


def solve_difference(P: Poly) -> Poly:
    """Solution of ``f(x+1) - f(x) = P(x)`` with ``f(0) = 0``.

    Writes ``P = sum_j a_j C(x, j)`` (``a_j`` are forward differences at 0)
    and returns ``sum_j a_j C(x, j+1)``.
    """
    values = [P(x) for x in range(P.degree + 1)]
    out = Poly()
    j = 0
    while values:
        a = values[0]
        if a:
            out = out + binomial_poly(j + 1) * a
        values = [hi - lo for lo, hi in zip(values, values[1:])]
        j += 1
    return out
