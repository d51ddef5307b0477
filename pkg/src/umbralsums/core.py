"""Exact scalar arithmetic, combinatorial primitives and dense polynomials.

Every scalar in the package is a :class:`fractions.Fraction` (or a plain
``int``, which mixes with it exactly).  Fractions are always stored in lowest
terms with a positive denominator, so ``==`` is structural.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "binomial",
    "stirling2",
    "pochhammer",
    "RISING",
    "FALLING",
    "Poly",
]

Rational = Fraction
Number = Union[int, Fraction]

RISING = "rising"
FALLING = "falling"


def as_rational(x: Number | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Number) -> str:
    """Serialize as ``"p/q"``; integers become ``"p/1"``."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal.  Floats are rejected."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def binomial(n: int, k: int) -> int:
    """C(n, k) for natural n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial expects non-negative arguments")
    return math.comb(n, k)


@lru_cache(maxsize=None)
def stirling2(p: int, l: int) -> int:
    """Stirling number of the second kind S(p, l)."""
    if p < 0 or l < 0:
        raise ValueError("stirling2 expects non-negative arguments")
    if p == 0 and l == 0:
        return 1
    if p == 0 or l == 0 or l > p:
        return 0
    return l * stirling2(p - 1, l) + stirling2(p - 1, l - 1)


def pochhammer(x: Number, l: int, convention: str = RISING) -> Fraction:
    """Rising ``x(x+1)...(x+l-1)`` or falling ``x(x-1)...(x-l+1)`` factorial."""
    if l < 0:
        raise ValueError("pochhammer length must be non-negative")
    if convention == RISING:
        step = 1
    elif convention == FALLING:
        step = -1
    else:
        raise ValueError(f"unknown convention {convention!r}")
    x = as_rational(x)
    out = Fraction(1)
    for i in range(l):
        out *= x + step * i
    return out


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored in ascending degree order with trailing zeros
    trimmed, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [as_rational(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "Poly":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, value: Number) -> "Poly":
        return cls([value])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(a) for a in self._c)}])"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, a in enumerate(self._c):
            if a == 0:
                continue
            if k == 0:
                parts.append(str(a))
            elif k == 1:
                parts.append(f"{a}*x")
            else:
                parts.append(f"{a}*x^{k}")
        return " + ".join(parts)

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __add__(self, other) -> "Poly":
        o = self._coerce(other)
        n = max(len(self._c), len(o._c))
        return Poly(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self._c)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            a = as_rational(other)
            return Poly(a * c for c in self._c)
        if not self._c or not other._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Poly":
        a = as_rational(other)
        return Poly(c / a for c in self._c)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out = Poly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        """Evaluate at a rational, or compose with another :class:`Poly`."""
        if isinstance(x, Poly):
            acc = Poly()
            for a in reversed(self._c):
                acc = acc * x + a
            return acc
        x = as_rational(x)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def shift(self, s: Number) -> "Poly":
        """Return ``p(x + s)``."""
        if s == 0:
            return self
        return self(Poly([s, 1]))

    def derivative(self) -> "Poly":
        return Poly(k * a for k, a in enumerate(self._c) if k)

    def antiderivative(self) -> "Poly":
        """Antiderivative vanishing at 0."""
        return Poly([0] + [a / (k + 1) for k, a in enumerate(self._c)])

    def to_strings(self) -> list[str]:
        return [format_rational(a) for a in self._c] or ["0/1"]


def poly_sum(terms: Sequence[Poly]) -> Poly:
    out = Poly()
    for t in terms:
        out = out + t
    return out
