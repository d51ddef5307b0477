"""Umbral symbols and the nested reduction engine.

Two carriers live here.  :class:`UmbralPoly` is a sparse multivariate
polynomial over named symbol variables; umbral evaluation maps powers of one
variable to numbers (``b^m -> B_m``, ``u^m -> 1/(m+1)``) or integrates it
(the V symbol).  :func:`reduce_nested_product` is the fast path for products
of nested H symbols; it works level by level on univariate :class:`Poly`
objects whose per-power rules are themselves built with :class:`UmbralPoly`.

Composite symbols never collapse their zeroth power to 1: ``H^0`` still goes
through its rule, e.g. ``H(N)^0 = (B_1(N) - B_1) / 1 = N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Union

from .bernoulli import apostol_bernoulli_poly, bernoulli_number, faulhaber_poly
from .core import Number, Poly, as_rational

__all__ = [
    "UmbralPoly",
    "ReductionBase",
    "reduce_bernoulli_symbol",
    "reduce_uniform_symbol",
    "v_integrate",
    "umbral_derivative",
    "cancellation_power",
    "level_rule",
    "reduce_nested_product",
    "descend",
    "v_route_prereduction",
    "reduce_v_route",
]

Monomial = tuple[int, ...]


class UmbralPoly:
    """Sparse polynomial over a declared, ordered tuple of variable names."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Monomial, Number]] = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != len(self.variables):
                raise ValueError("monomial arity does not match the variable set")
            c = as_rational(c)
            if c:
                clean[tuple(mono)] = clean.get(tuple(mono), Fraction(0)) + c
                if not clean[tuple(mono)]:
                    del clean[tuple(mono)]
        self.terms = clean

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, variables: Sequence[str], value: Number) -> "UmbralPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, variables: Sequence[str], name: str, power: int = 1) -> "UmbralPoly":
        variables = tuple(variables)
        mono = [0] * len(variables)
        mono[cls._index_in(variables, name)] = power
        return cls(variables, {tuple(mono): 1})

    @staticmethod
    def _index_in(variables: Sequence[str], name: str) -> int:
        try:
            return variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}; declared {tuple(variables)}") from None

    def index(self, name: str) -> int:
        return self._index_in(self.variables, name)

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "UmbralPoly":
        if isinstance(other, UmbralPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable sets differ: {self.variables} vs {other.variables}")
            return other
        return UmbralPoly.constant(self.variables, other)

    def __add__(self, other) -> "UmbralPoly":
        o = self._coerce(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return UmbralPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "UmbralPoly":
        return UmbralPoly(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "UmbralPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UmbralPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UmbralPoly":
        o = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return UmbralPoly(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "UmbralPoly":
        d = as_rational(other)
        return UmbralPoly(self.variables, {m: c / d for m, c in self.terms.items()})

    def __pow__(self, e: int) -> "UmbralPoly":
        if e < 0:
            raise ValueError("negative power")
        out = UmbralPoly.constant(self.variables, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, UmbralPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == UmbralPoly.constant(self.variables, other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"UmbralPoly({self.variables}, {self.terms})"

    # structure --------------------------------------------------------
    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial still depends on its variables")
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def drop_variable(self, name: str) -> "UmbralPoly":
        """Remove a variable that no longer occurs."""
        i = self.index(name)
        if any(m[i] for m in self.terms):
            raise ValueError(f"variable {name!r} still occurs")
        variables = self.variables[:i] + self.variables[i + 1:]
        return UmbralPoly(variables, {m[:i] + m[i + 1:]: c for m, c in self.terms.items()})

    def map_powers(self, name: str, rule) -> "UmbralPoly":
        """Replace ``name^m`` by the scalar ``rule(m)`` and drop ``name``."""
        i = self.index(name)
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            v = rule(m[i])
            if v:
                key = m[:i] + m[i + 1:]
                out[key] = out.get(key, 0) + c * v
        return UmbralPoly(self.variables[:i] + self.variables[i + 1:], out)

    def derivative(self, name: str) -> "UmbralPoly":
        i = self.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                out[m[:i] + (m[i] - 1,) + m[i + 1:]] = c * m[i]
        return UmbralPoly(self.variables, out)

    def substitute(self, name: str, expr: "UmbralPoly") -> "UmbralPoly":
        """Replace the variable ``name`` by ``expr`` (same variable set)."""
        expr = self._coerce(expr)
        i = self.index(name)
        powers = {0: UmbralPoly.constant(self.variables, 1)}
        out = UmbralPoly(self.variables)
        for m, c in self.terms.items():
            e = m[i]
            if e not in powers:
                powers[e] = expr**e
            rest = UmbralPoly(self.variables, {m[:i] + (0,) + m[i + 1:]: c})
            out = out + rest * powers[e]
        return out

    def to_poly(self, name: Optional[str] = None) -> Poly:
        """Convert to a univariate :class:`Poly` once only ``name`` remains."""
        if name is None:
            if len(self.variables) != 1:
                return Poly([self.constant_value()])
            name = self.variables[0]
        i = self.index(name)
        coeffs: dict[int, Fraction] = {}
        for m, c in self.terms.items():
            if any(e for j, e in enumerate(m) if j != i):
                raise ValueError(f"polynomial depends on variables other than {name!r}")
            coeffs[m[i]] = coeffs.get(m[i], 0) + c
        deg = max(coeffs, default=-1)
        return Poly(coeffs.get(k, 0) for k in range(deg + 1))


def reduce_bernoulli_symbol(p: UmbralPoly, var: str) -> UmbralPoly:
    """``var^m -> B_m``; ``var`` leaves the variable set."""
    return p.map_powers(var, bernoulli_number)


def reduce_uniform_symbol(p: UmbralPoly, var: str) -> UmbralPoly:
    """``var^m -> 1/(m+1)``, i.e. averaging over [0, 1]."""
    return p.map_powers(var, lambda m: Fraction(1, m + 1))


def cancellation_power(n: int) -> Poly:
    """Reduce ``(x + B + U)^n`` in both symbols; the result should be ``x^n``."""
    names = ("x", "b", "u")
    p = (UmbralPoly.var(names, "x") + UmbralPoly.var(names, "b") + UmbralPoly.var(names, "u")) ** n
    return reduce_uniform_symbol(reduce_bernoulli_symbol(p, "b"), "u").to_poly("x")


def umbral_derivative(p: UmbralPoly, var: str) -> UmbralPoly:
    return p.derivative(var)


def v_integrate(p: UmbralPoly, var: str, upper: UmbralPoly) -> UmbralPoly:
    """V-symbol rule: ``P(x + V(z)) = int_0^z P(x + v) dv`` in the variable ``var``.

    Every monomial is integrated, including those free of ``var``, so the
    zeroth power of the V symbol evaluates to the upper limit.
    """
    i = p.index(var)
    anti = {}
    for m, c in p.terms.items():
        anti[m[:i] + (m[i] + 1,) + m[i + 1:]] = c / (m[i] + 1)
    return UmbralPoly(p.variables, anti).substitute(var, upper)


# ---------------------------------------------------------------------------
# nested H symbols


@dataclass(frozen=True)
class ReductionBase:
    """How the outermost level ``H_1`` is evaluated.

    ``finite``: ``H_1^p = ((B + N)^{p+1} - B_{p+1}) / (p+1)``; ``upper`` None
    keeps N symbolic.  ``renormalized``: ``H_1^p = B_{p+1} / (p+1)`` and inner
    levels keep their constant.  ``apostol``: the Bernoulli symbol of the
    first level is replaced by the Apostol symbol with parameter ``lam``.
    """

    kind: str
    upper: Optional[Fraction] = None
    lam: Optional[Fraction] = None

    @classmethod
    def finite(cls, upper: Optional[Number] = None) -> "ReductionBase":
        return cls("finite", None if upper is None else as_rational(upper))

    @classmethod
    def renormalized(cls) -> "ReductionBase":
        return cls("renormalized")

    @classmethod
    def apostol(cls, lam: Number, upper: int) -> "ReductionBase":
        lam = as_rational(lam)
        if lam == 0:
            raise ValueError("the Apostol parameter must be non-zero")
        if int(upper) != upper or upper < 0:
            raise ValueError("the Apostol base needs a concrete natural upper limit")
        return cls("apostol", Fraction(int(upper)), lam)

    def __post_init__(self):
        if self.kind not in ("finite", "renormalized", "apostol"):
            raise ValueError(f"unknown reduction base {self.kind!r}")


_LEVEL_VARS = ("b", "y")


@lru_cache(maxsize=None)
def level_rule(p: int, renormalized: bool = False) -> Poly:
    """Inner-level rule ``H_{1..k}^p`` as a polynomial in ``y = H_{1..k-1}``.

    Finite: ``((B_k + y)^{p+1} - B_k^{p+1}) / (p+1)``; renormalized drops the
    subtracted Bernoulli power.
    """
    b = UmbralPoly.var(_LEVEL_VARS, "b")
    y = UmbralPoly.var(_LEVEL_VARS, "y")
    expr = (b + y) ** (p + 1)
    if not renormalized:
        expr = expr - b ** (p + 1)
    return reduce_bernoulli_symbol(expr / (p + 1), "b").to_poly("y")


@lru_cache(maxsize=None)
def _apostol_base(p: int, lam: Fraction, upper: int) -> Fraction:
    ab = apostol_bernoulli_poly(p + 1, lam)
    return (lam**upper * ab(upper) - ab(0)) / (p + 1)


def _base_value(q: Poly, base: ReductionBase, shift: int) -> Union[Poly, Fraction]:
    if base.kind == "renormalized":
        return sum((c * bernoulli_number(p + 1) / (p + 1) for p, c in enumerate(q.coeffs) if c), Fraction(0))
    if base.kind == "apostol":
        if shift:
            raise ValueError("shifted levels are not defined for the Apostol base")
        upper = int(base.upper)
        return sum((c * _apostol_base(p, base.lam, upper) for p, c in enumerate(q.coeffs) if c), Fraction(0))
    out = Poly()
    for p, c in enumerate(q.coeffs):
        if c:
            out = out + faulhaber_poly(p).shift(shift) * c
    if base.upper is None:
        return out
    return out(base.upper)


def descend(q: Poly, outer: Sequence[int], base: ReductionBase, shift: int = 0) -> Union[Poly, Fraction]:
    """Reduce ``q(H_{1..k}) * prod_{j<k} H_{1..j}^{outer[j]}`` down to the base.

    ``q`` is a polynomial in the level-``k`` symbol with ``k = len(outer) + 1``.
    Each step maps ``h^p`` through :func:`level_rule` (evaluated at ``h' + shift``)
    and multiplies the result by ``h'^{outer[k-2]}``; powers of the same symbol
    add before the next rule is applied.
    """
    renorm = base.kind == "renormalized"
    for n_prev in reversed(outer):
        nxt = Poly()
        for p, c in enumerate(q.coeffs):
            if c:
                nxt = nxt + level_rule(p, renorm).shift(shift) * c
        q = nxt * Poly.monomial(n_prev)
    return _base_value(q, base, shift)


def reduce_nested_product(
    exponents: Sequence[int], base: ReductionBase, shift: int = 0
) -> Union[Poly, Fraction]:
    """Evaluate ``prod_k H_{1..k}^{n_k}`` right to left.

    Returns a :class:`Poly` in N for a symbolic finite base, a
    :class:`~fractions.Fraction` otherwise.  ``shift=1`` gives the barred
    symbols ``H(N+1)`` and ``H(H'+1)`` used for weak-inequality sums.
    """
    exponents = tuple(int(n) for n in exponents)
    if not exponents:
        raise ValueError("empty exponent list")
    if any(n < 0 for n in exponents):
        raise ValueError("exponents must be non-negative")
    return descend(Poly.monomial(exponents[-1]), exponents[:-1], base, shift)


# ---------------------------------------------------------------------------
# V-symbol route: (B_k + V_{1..k})^{n_k} with explicit b_k, v_k variables


def v_route_variables(r: int) -> tuple[str, ...]:
    return tuple(f"b{k}" for k in range(1, r + 1)) + tuple(f"v{k}" for k in range(1, r + 1)) + ("N",)


def v_route_prereduction(exponents: Sequence[int]) -> UmbralPoly:
    """``prod_k (b_k + v_k)^{n_k}`` with every symbol left unreduced."""
    r = len(exponents)
    names = v_route_variables(r)
    out = UmbralPoly.constant(names, 1)
    for k, n in enumerate(exponents, start=1):
        out = out * (UmbralPoly.var(names, f"b{k}") + UmbralPoly.var(names, f"v{k}")) ** n
    return out


def reduce_v_route(p: UmbralPoly, r: int) -> Poly:
    """Evaluate a polynomial in ``b_1..b_r, v_1..v_r, N`` as nested V symbols.

    ``v_k`` stands for ``V(b_{k-1} + v_{k-1})`` (``V(N)`` at k = 1); levels
    are integrated from the innermost outwards and each ``b_k`` is reduced to
    Bernoulli numbers once no later level can feed it more powers.
    """
    names = v_route_variables(r)
    if p.variables != names:
        raise ValueError(f"expected variables {names}, got {p.variables}")
    for k in range(r, 0, -1):
        if k > 1:
            upper = UmbralPoly.var(p.variables, f"b{k-1}") + UmbralPoly.var(p.variables, f"v{k-1}")
        else:
            upper = UmbralPoly.var(p.variables, "N")
        p = v_integrate(p, f"v{k}", upper).drop_variable(f"v{k}")
        p = reduce_bernoulli_symbol(p, f"b{k}")
    return p.to_poly("N")
