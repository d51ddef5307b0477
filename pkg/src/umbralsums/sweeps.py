"""Named property sweeps, each checking one identity over a finite grid of cases.

Cases are enumerated lexicographically by (depth, index tuple, N) so reports
are reproducible; ``jobs > 1`` fans cases out to worker processes and then
reassembles them in that order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Callable, Optional

from .bernoulli import apostol_faulhaber, faulhaber_poly, hansen_reduce
from .core import Poly, format_rational
from .egf import verify_f_recurrence, verify_g_recurrence
from .extbern import beta_example_identity, beta_recurrence_check, derivative_link_check
from .mzv import zeta_constant_term, zeta_depth2, zeta_raabe, zeta_renorm
from .powersum import (
    explicit_expansion_h,
    oracle_h,
    oracle_li,
    oracle_s,
    recurrence_h,
    symbolic_h,
    symbolic_li,
    symbolic_s,
)
from .umbral import cancellation_power

__all__ = ["Limits", "VerifyReport", "SUITES", "default_limits", "run_suite", "suite_cases"]

LI_Z = (Fraction(1), Fraction(1, 2), Fraction(2), Fraction(-1), Fraction(3, 4))
G_Z = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1))
HANSEN_Z = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-3), Fraction(7, 3), Fraction(-2, 5))
APOSTOL_LAMBDA = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1), Fraction(-2, 3))


@dataclass(frozen=True)
class Limits:
    max_depth: Optional[int] = None
    max_weight: Optional[int] = None
    max_upper: Optional[int] = None
    bound: Optional[int] = None

    def merged(self, other: "Limits") -> "Limits":
        """Fields set in ``other`` win."""
        return replace(self, **{k: v for k, v in asdict(other).items() if v is not None})


@dataclass
class VerifyReport:
    suite: str
    cases: int
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _fmt(v) -> str:
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return format_rational(v)
    if isinstance(v, Poly):
        return "[" + ",".join(v.to_strings()) + "]"
    return str(v)


def _indices(lo_depth: int, hi_depth: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    out = []
    for r in range(lo_depth, hi_depth + 1):
        out.extend(product(range(lo, hi + 1), repeat=r))
    return out


# ---------------------------------------------------------------------------
# suites: name -> (defaults, case enumerator, checker)
# a checker returns (ok, expected, got)


def _c_index_upper(lo_depth: int, lo_entry: int = 0):
    def cases(lim: Limits):
        return [(idx, N) for idx in _indices(lo_depth, lim.max_depth, lo_entry, lim.max_weight) for N in range(lim.max_upper + 1)]

    return cases


def _k_oracle_h(case, lim):
    idx, N = case
    exp, got = oracle_h(idx, N), symbolic_h(idx, N)
    return exp == got, exp, got


def _k_explicit(case, lim):
    idx, N = case
    exp, got = oracle_h(idx, N), explicit_expansion_h(idx)(N)
    return exp == got, exp, got


def _k_recurrence(case, lim):
    idx, N = case
    exp, got = oracle_h(idx, N), recurrence_h(idx, N)
    return exp == got, exp, got


def _k_oracle_s(case, lim):
    idx, N = case
    exp, got = oracle_s(idx, N), symbolic_s(idx, N)
    return exp == got, exp, got


def _c_li(lim):
    return [
        (idx, z, N)
        for idx in _indices(1, lim.max_depth, 0, lim.max_weight)
        for z in LI_Z
        for N in range(lim.max_upper + 1)
    ]


def _k_li(case, lim):
    idx, z, N = case
    exp, got = oracle_li(idx, z, N), symbolic_li(idx, z, N)
    if exp != got:
        return False, exp, got
    if z == 1:
        h = symbolic_h(idx, N)
        return h == got, h, got
    return True, exp, got


def _c_beta(lo_depth: int):
    def cases(lim: Limits):
        return [(idx,) for idx in _indices(lo_depth, lim.max_depth, 1, lim.max_weight)]

    return cases


def _k_beta_recurrence(case, lim):
    rep = beta_recurrence_check(case[0])
    return rep.passed, Poly(), rep.residual


def _k_derivative_link(case, lim):
    rep = derivative_link_check(case[0])
    return rep.passed, rep.rhs, rep.lhs


def _c_beta_example(lim):
    return [(m, N) for m in range(lim.max_weight + 1) for N in range(lim.max_upper + 1)]


def _k_beta_example(case, lim):
    rep = beta_example_identity(*case)
    return rep.passed, rep.lhs, rep.rhs


def _c_egf_f(lim):
    return [(r, N) for r in range(2, lim.max_depth + 1) for N in range(lim.max_upper + 1)]


def _egf_result(rep):
    if rep.passed:
        return True, "", ""
    return False, f"{rep.mismatch}:{_fmt(rep.rhs)}", f"{rep.mismatch}:{_fmt(rep.lhs)}"


def _k_egf_f(case, lim):
    return _egf_result(verify_f_recurrence(case[0], case[1], lim.bound))


def _c_egf_g(lim):
    return [(r, z) for r in range(2, lim.max_depth + 1) for z in G_Z]


def _k_egf_g(case, lim):
    return _egf_result(verify_g_recurrence(case[0], case[1], lim.bound))


def _c_zeta(lim):
    return [(idx,) for idx in _indices(1, lim.max_depth, 0, lim.max_weight) if sum(idx) <= lim.max_weight]


def _k_zeta(case, lim):
    idx = case[0]
    a, b, c = zeta_raabe(idx), zeta_renorm(idx), zeta_constant_term(idx)
    ok = a == b == c
    if ok and len(idx) == 2:
        ok = zeta_depth2(*idx) == a
    return ok, b, f"raabe={_fmt(a)} constant_term={_fmt(c)}"


def _c_cancellation(lim):
    return [(n,) for n in range(lim.max_weight + 1)]


def _k_cancellation(case, lim):
    exp, got = Poly.monomial(case[0]), cancellation_power(case[0])
    return exp == got, exp, got


def _c_hansen(lim):
    return [(p, z) for p in range(lim.max_weight + 1) for z in HANSEN_Z]


def _k_hansen(case, lim):
    p, z = case
    exp, got = faulhaber_poly(p)(z), hansen_reduce(p, z)
    return exp == got, exp, got


def _c_apostol(lim):
    return [
        (n, lam, m)
        for n in range(lim.max_weight + 1)
        for lam in APOSTOL_LAMBDA
        for m in range(1, lim.max_upper + 1)
    ]


def _k_apostol(case, lim):
    n, lam, m = case
    exp = sum((lam**j * j**n for j in range(1, m)), Fraction(0))
    got = apostol_faulhaber(n, lam, m)
    return exp == got, exp, got


SUITES: dict[str, tuple[Limits, Callable, Callable]] = {
    "oracle-h": (Limits(3, 4, 12), _c_index_upper(1), _k_oracle_h),
    "oracle-s": (Limits(3, 3, 10), _c_index_upper(1), _k_oracle_s),
    "oracle-li": (Limits(3, 3, 10), _c_li, _k_li),
    "recurrence1": (Limits(3, 4, 12), _c_index_upper(2), _k_recurrence),
    "explicit-expansion": (Limits(3, 4, 12), _c_index_upper(1), _k_explicit),
    "beta-recurrence": (Limits(3, 4), _c_beta(2), _k_beta_recurrence),
    "derivative-link": (Limits(3, 3), _c_beta(1), _k_derivative_link),
    "beta-example": (Limits(max_weight=4, max_upper=10), _c_beta_example, _k_beta_example),
    "egf-f": (Limits(3, max_upper=8, bound=6), _c_egf_f, _k_egf_f),
    "egf-g": (Limits(3, bound=6), _c_egf_g, _k_egf_g),
    "zeta-triple": (Limits(4, 6), _c_zeta, _k_zeta),
    "cancellation": (Limits(max_weight=8), _c_cancellation, _k_cancellation),
    "hansen": (Limits(max_weight=6), _c_hansen, _k_hansen),
    "apostol-faulhaber": (Limits(max_weight=6, max_upper=12), _c_apostol, _k_apostol),
}


def default_limits(suite: str) -> Limits:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    return SUITES[suite][0]


def suite_cases(suite: str, limits: Limits = Limits()) -> list[tuple]:
    lim = default_limits(suite).merged(limits)
    return SUITES[suite][1](lim)


def _case_key(case: tuple) -> str:
    parts = []
    for v in case:
        if isinstance(v, tuple):
            parts.append("(" + ",".join(map(str, v)) + ")")
        else:
            parts.append(_fmt(v) if isinstance(v, Fraction) else str(v))
    return " ".join(parts)


def _run_case(args) -> Optional[dict]:
    suite, case, lim = args
    ok, expected, got = SUITES[suite][2](case, lim)
    if ok:
        return None
    return {"case": _case_key(case), "expected": _fmt(expected), "got": _fmt(got)}


def run_suite(suite: str, limits: Limits = Limits(), jobs: int = 1) -> VerifyReport:
    """Run one named suite; ``limits`` fields left as None take the suite defaults."""
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    lim = default_limits(suite).merged(limits)
    start = time.perf_counter()
    cases = SUITES[suite][1](lim)
    work = [(suite, c, lim) for c in cases]
    if jobs == 1 or len(work) < 2:
        results = [_run_case(w) for w in work]
    else:
        chunk = max(1, len(work) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, work, chunksize=chunk))
    failures = [r for r in results if r is not None]
    elapsed = (time.perf_counter() - start) * 1000
    return VerifyReport(suite, len(cases), failures, elapsed)
