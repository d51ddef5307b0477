"""Truncated multivariate exponential generating functions.

A table stores the coefficient ``a_e`` of ``prod_i w_i^{e_i} / e_i!`` for every
exponent tuple of total degree at most the bound.  In this normalization the
substitution ``w -> w' + w''`` is a re-indexing and multiplication by ``w_i``
sends ``a_{e}`` to ``e_i a_{e - 1_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Mapping, Optional

from .core import Number, as_rational
from .extbern import _beta_poly
from .powersum import symbolic_h

__all__ = [
    "EgfTable",
    "EgfReport",
    "exponent_tuples",
    "build_f",
    "build_g",
    "exp_series",
    "shift_last_variable",
    "embed",
    "mul_exp_minus_one",
    "mul_var",
    "mul",
    "verify_f_recurrence",
    "verify_g_recurrence",
    "f1_closed_form_check",
    "g1_closed_form_check",
]


@lru_cache(maxsize=None)
def _tuples(arity: int, bound: int) -> tuple[tuple[int, ...], ...]:
    if arity == 0:
        return ((),)
    out = []
    for head in _tuples(arity - 1, bound):
        for d in range(bound - sum(head) + 1):
            out.append(head + (d,))
    return tuple(sorted(out))


def exponent_tuples(arity: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All exponent tuples of the given arity with total degree <= bound, sorted."""
    return iter(_tuples(arity, bound))


class EgfTable:
    """Immutable truncated EGF; missing tuples read as zero."""

    __slots__ = ("_arity", "_bound", "_coeffs")

    def __init__(self, arity: int, bound: int, coeffs: Optional[Mapping[tuple[int, ...], Number]] = None):
        if arity < 0 or bound < 0:
            raise ValueError("arity and bound must be natural numbers")
        data = {}
        for e, a in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != arity or any(d < 0 for d in e):
                raise ValueError(f"bad exponent tuple {e} for arity {arity}")
            a = as_rational(a)
            if a and sum(e) <= bound:
                data[e] = a
        self._arity = arity
        self._bound = bound
        self._coeffs = data

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def bound(self) -> int:
        return self._bound

    @property
    def coeffs(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._coeffs)

    def __getitem__(self, e) -> Fraction:
        return self._coeffs.get(tuple(e), Fraction(0))

    def _same_shape(self, other: "EgfTable"):
        if (self._arity, self._bound) != (other._arity, other._bound):
            raise ValueError("tables differ in arity or bound")

    def __add__(self, other: "EgfTable") -> "EgfTable":
        self._same_shape(other)
        out = dict(self._coeffs)
        for e, a in other._coeffs.items():
            out[e] = out.get(e, 0) + a
        return EgfTable(self._arity, self._bound, out)

    def __neg__(self) -> "EgfTable":
        return EgfTable(self._arity, self._bound, {e: -a for e, a in self._coeffs.items()})

    def __sub__(self, other: "EgfTable") -> "EgfTable":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EgfTable):
            return NotImplemented
        return (self._arity, self._bound, self._coeffs) == (other._arity, other._bound, other._coeffs)

    def __repr__(self) -> str:
        return f"EgfTable(arity={self._arity}, bound={self._bound}, nonzero={len(self._coeffs)})"

    def first_difference(self, other: "EgfTable"):
        """First tuple (in sorted order) where the tables differ, or None."""
        self._same_shape(other)
        for e in _tuples(self._arity, self._bound):
            if self[e] != other[e]:
                return e
        return None


def build_f(r: int, N: int, D: int) -> EgfTable:
    """Coefficients ``H_{-n}(N)`` of the power-sum generating function.

    The innermost index runs down to 0 (``0^0 = 1``), which is what makes
    ``F_1 = sum_{k<N} e^{k w}``.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    return EgfTable(r, D, {e: symbolic_h(e, N, zero_term=True) for e in _tuples(r, D)})


def build_g(r: int, z: Number, D: int) -> EgfTable:
    """Coefficients ``beta_n(z)`` of the extended Bernoulli generating function."""
    if r < 1:
        raise ValueError("r must be >= 1")
    z = as_rational(z)
    return EgfTable(r, D, {e: _beta_poly(e)(z) for e in _tuples(r, D)})


def exp_series(arity: int, bound: int, var_index: int, scale: Number = 1) -> EgfTable:
    """``exp(scale * w_var)``."""
    _check_var(arity, var_index)
    scale = as_rational(scale)
    coeffs = {}
    for d in range(bound + 1):
        e = [0] * arity
        e[var_index] = d
        coeffs[tuple(e)] = scale**d
    return EgfTable(arity, bound, coeffs)


def _check_var(arity: int, var_index: int):
    if not 0 <= var_index < arity:
        raise IndexError(f"variable index {var_index} out of range for arity {arity}")


def shift_last_variable(t: EgfTable) -> EgfTable:
    """``f(w_1, ..., w_{r-1} + w_r)`` as a table of arity one higher."""
    if t.arity < 1:
        raise ValueError("need arity >= 1")
    coeffs = {}
    for e in _tuples(t.arity + 1, t.bound):
        a = t[e[:-2] + (e[-2] + e[-1],)]
        if a:
            coeffs[e] = a
    return EgfTable(t.arity + 1, t.bound, coeffs)


def embed(t: EgfTable) -> EgfTable:
    """The same series viewed as a function of one extra (absent) last variable."""
    return EgfTable(t.arity + 1, t.bound, {e + (0,): a for e, a in t.coeffs.items()})


def mul_exp_minus_one(t: EgfTable, var_index: int) -> EgfTable:
    """Multiply by ``e^{w_var} - 1``."""
    _check_var(t.arity, var_index)
    coeffs = {}
    for e in _tuples(t.arity, t.bound):
        d = e[var_index]
        s = Fraction(0)
        for j in range(1, d + 1):
            f = list(e)
            f[var_index] = d - j
            a = t[f]
            if a:
                s += comb(d, j) * a
        if s:
            coeffs[e] = s
    return EgfTable(t.arity, t.bound, coeffs)


def mul_var(t: EgfTable, var_index: int) -> EgfTable:
    """Multiply by ``w_var``."""
    _check_var(t.arity, var_index)
    coeffs = {}
    for e, a in t.coeffs.items():
        f = list(e)
        f[var_index] += 1
        if sum(f) <= t.bound:
            coeffs[tuple(f)] = f[var_index] * a
    return EgfTable(t.arity, t.bound, coeffs)


def mul(s: EgfTable, t: EgfTable) -> EgfTable:
    """General product; binomial weights per variable."""
    s._same_shape(t)
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for e, a in s.coeffs.items():
        for f, b in t.coeffs.items():
            g = tuple(x + y for x, y in zip(e, f))
            if sum(g) > s.bound:
                continue
            w = 1
            for x, y in zip(e, f):
                w *= comb(x + y, x)
            coeffs[g] = coeffs.get(g, 0) + w * a * b
    return EgfTable(s.arity, s.bound, coeffs)


@dataclass
class EgfReport:
    passed: bool
    cases: int
    mismatch: Optional[tuple[int, ...]] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    detail: dict = field(default_factory=dict)


def _compare(lhs: EgfTable, rhs: EgfTable, **detail) -> EgfReport:
    e = lhs.first_difference(rhs)
    cases = len(_tuples(lhs.arity, lhs.bound))
    if e is None:
        return EgfReport(True, cases, detail=detail)
    return EgfReport(False, cases, e, lhs[e], rhs[e], detail)


def verify_f_recurrence(r: int, N: int, D: int) -> EgfReport:
    """``(e^{w_r} - 1) F_r = F_{r-1}(.., w_{r-1} + w_r) - F_{r-1}(.., w_{r-1})``."""
    if r < 2:
        raise ValueError("the recurrence needs r >= 2")
    prev = build_f(r - 1, N, D)
    lhs = mul_exp_minus_one(build_f(r, N, D), r - 1)
    rhs = shift_last_variable(prev) - embed(prev)
    return _compare(lhs, rhs, r=r, N=N, D=D)


def verify_g_recurrence(r: int, z: Number, D: int) -> EgfReport:
    """Fraction-free form of the G recurrence, with ``u = w_{r-1}``, ``w = w_r``.

    ``(u + w)(e^w - 1) G_r = w [u G_{r-1}(.., u + w) - (u + w) G_{r-1}(.., u)]``
    """
    if r < 2:
        raise ValueError("the recurrence needs r >= 2")
    i, j = r - 2, r - 1
    prev = build_g(r - 1, z, D)
    g = mul_exp_minus_one(build_g(r, z, D), j)
    lhs = mul_var(g, i) + mul_var(g, j)
    shifted = shift_last_variable(prev)
    flat = embed(prev)
    inner = mul_var(shifted, i) - mul_var(flat, i) - mul_var(flat, j)
    rhs = mul_var(inner, j)
    return _compare(lhs, rhs, r=r, z=str(as_rational(z)), D=D)


def f1_closed_form_check(N: int, D: int) -> EgfReport:
    """``(e^w - 1) F_1 = e^{N w} - 1``."""
    lhs = mul_exp_minus_one(build_f(1, N, D), 0)
    rhs = exp_series(1, D, 0, N) - EgfTable(1, D, {(0,): 1})
    return _compare(lhs, rhs, N=N, D=D)


def g1_closed_form_check(z: Number, D: int) -> EgfReport:
    """``(e^w - 1) G_1 = w (e^{z w} - 1)``."""
    lhs = mul_exp_minus_one(build_g(1, z, D), 0)
    rhs = mul_var(exp_series(1, D, 0, z) - EgfTable(1, D, {(0,): 1}), 0)
    return _compare(lhs, rhs, z=str(as_rational(z)), D=D)
