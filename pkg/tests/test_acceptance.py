"""Acceptance criteria 1-9, one check each.

Each ``check_N`` returns a list of failure descriptions (empty on success).
Under pytest every check is one test and ``conftest.py`` prints a PASS/FAIL
line per criterion; ``python3 tests/test_acceptance.py`` prints the same lines
without pytest.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from itertools import product

import pytest

from umbralsums.bernoulli import apostol_faulhaber, bernoulli_number, bernoulli_poly, hansen_reduce
from umbralsums.core import Poly
from umbralsums.egf import verify_f_recurrence, verify_g_recurrence
from umbralsums.extbern import (
    SHIFTED_ZERO,
    TILDE,
    beta_example_identity,
    beta_recurrence_check,
    connection_probe,
    derivative_link_check,
)
from umbralsums.mzv import zeta_constant_term, zeta_depth2, zeta_raabe, zeta_renorm
from umbralsums.powersum import (
    explicit_expansion_h,
    oracle_h,
    oracle_li,
    oracle_s,
    recurrence_h,
    symbolic_h,
    symbolic_li,
    symbolic_s,
)
from umbralsums.umbral import cancellation_power

F = Fraction

TITLES = {
    1: "oracle equivalence of symbolic, explicit and recurrence power sums",
    2: "zeta triple equality and spot values",
    3: "no-constant-term structure of every power-sum polynomial",
    4: "EGF recurrences for F_r and G_r",
    5: "extended Bernoulli recurrence, derivative link and example identity",
    6: "truncated polylogarithm against brute force",
    7: "symbol algebra: cancellation, Hansen, Apostol-Faulhaber",
    8: "weak-inequality sums against brute force",
    9: "beta-connection probe runs and reports",
}


def _indices(max_depth, lo, hi, min_depth=1):
    for r in range(min_depth, max_depth + 1):
        yield from product(range(lo, hi + 1), repeat=r)


def _timed(limit_s, fails, start):
    elapsed = time.perf_counter() - start
    if elapsed > limit_s:
        fails.append(f"runtime {elapsed:.1f}s exceeds {limit_s}s")
    return fails


def check_1():
    start = time.perf_counter()
    fails = []
    for idx in _indices(3, 0, 4):
        sym, exp = symbolic_h(idx), explicit_expansion_h(idx)
        for N in range(13):
            want = oracle_h(idx, N)
            got = [sym(N), exp(N)] + ([recurrence_h(idx, N)] if len(idx) >= 2 else [])
            if any(g != want for g in got):
                fails.append(f"{idx} N={N}: oracle {want}, got {got}")
    return _timed(60, fails, start)


def check_2():
    start = time.perf_counter()
    fails = []
    for idx in _indices(4, 0, 6):
        if sum(idx) > 6:
            continue
        vals = zeta_raabe(idx), zeta_renorm(idx), zeta_constant_term(idx)
        if not vals[0] == vals[1] == vals[2]:
            fails.append(f"{idx}: {vals}")
    spots = {(0,): F(-1, 2), (1,): F(-1, 12), (2,): 0, (1, 1): F(1, 360), (1, 0): F(1, 24), (0, 0): F(1, 3)}
    for idx, want in spots.items():
        got = zeta_renorm(idx)
        if got != want:
            fails.append(f"spot {idx}: want {want}, got {got}")
        if len(idx) == 2 and zeta_depth2(*idx) != want:
            fails.append(f"depth-2 closed form {idx}: want {want}, got {zeta_depth2(*idx)}")
    return _timed(30, fails, start)


def check_3():
    fails = []
    for idx in _indices(3, 0, 4):
        for name, ps in (("symbolic", symbolic_h(idx)), ("explicit", explicit_expansion_h(idx))):
            for v in ps.invariant_violations():
                fails.append(f"{name} {idx}: {v}")
    return fails


def check_4():
    start = time.perf_counter()
    fails = []
    for r in (2, 3):
        for N in range(9):
            rep = verify_f_recurrence(r, N, 6)
            if not rep.passed:
                fails.append(f"F r={r} N={N} at {rep.mismatch}: {rep.lhs} != {rep.rhs}")
        for z in (0, 1, 2, F(1, 2), -1):
            rep = verify_g_recurrence(r, z, 6)
            if not rep.passed:
                fails.append(f"G r={r} z={z} at {rep.mismatch}: {rep.lhs} != {rep.rhs}")
    return _timed(60, fails, start)


def check_5():
    fails = []
    for idx in _indices(3, 1, 4, min_depth=2):
        if not beta_recurrence_check(idx).passed:
            fails.append(f"recurrence {idx}")
    for idx in _indices(3, 1, 3):
        if not derivative_link_check(idx).passed:
            fails.append(f"derivative link {idx}")
    for m in range(5):
        for N in range(11):
            if not beta_example_identity(m, N).passed:
                fails.append(f"example identity m={m} N={N}")
    return fails


def check_6():
    fails = []
    for idx in _indices(3, 0, 3):
        for z in (F(1), F(1, 2), F(2), F(-1), F(3, 4)):
            for N in range(11):
                want, got = oracle_li(idx, z, N), symbolic_li(idx, z, N)
                if want != got:
                    fails.append(f"{idx} z={z} N={N}: {want} != {got}")
                if z == 1 and got != symbolic_h(idx, N):
                    fails.append(f"{idx} N={N}: z=1 differs from the power sum")
    return fails


def check_7():
    fails = []
    for n in range(9):
        if cancellation_power(n) != Poly.monomial(n):
            fails.append(f"cancellation n={n}")
    for p in range(7):
        target = (bernoulli_poly(p + 1) - bernoulli_number(p + 1)) / (p + 1)
        for z in (F(0), F(1), F(1, 2), F(-3), F(7, 3), F(-2, 5)):
            if hansen_reduce(p, z) != target(z):
                fails.append(f"hansen p={p} z={z}")
    for n in range(7):
        for lam in (F(1), F(2), F(1, 2), F(-1), F(-2, 3)):
            for m in range(1, 13):
                brute = sum((lam**j * j**n for j in range(1, m)), F(0))
                if apostol_faulhaber(n, lam, m) != brute:
                    fails.append(f"apostol n={n} lam={lam} m={m}")
    return fails


def check_8():
    fails = []
    for idx in _indices(3, 0, 3):
        for N in range(11):
            if symbolic_s(idx, N) != oracle_s(idx, N):
                fails.append(f"{idx} N={N}")
    return fails


def check_9():
    fails = []
    for idx in _indices(3, 1, 3, min_depth=2):
        for N in range(2, 7):
            for conv in (TILDE, SHIFTED_ZERO):
                try:
                    rep = connection_probe(idx, N, conv)
                except Exception as e:  # the probe must never raise
                    fails.append(f"{idx} N={N} {conv}: {e!r}")
                    continue
                if rep.residual != rep.lhs - rep.rhs:
                    fails.append(f"{idx} N={N} {conv}: inconsistent report")
    return fails


CHECKS = {n: globals()[f"check_{n}"] for n in TITLES}


def _assert_clean(fails):
    assert not fails, f"{len(fails)} failure(s), first: " + "; ".join(fails[:5])


@pytest.mark.criterion(1)
def test_criterion_1_oracle_equivalence():
    _assert_clean(check_1())


@pytest.mark.criterion(2)
def test_criterion_2_zeta_triple_equality():
    _assert_clean(check_2())


@pytest.mark.criterion(3)
def test_criterion_3_no_constant_term_structure():
    _assert_clean(check_3())


@pytest.mark.criterion(4)
def test_criterion_4_egf_recurrences():
    _assert_clean(check_4())


@pytest.mark.criterion(5)
def test_criterion_5_extended_bernoulli():
    _assert_clean(check_5())


@pytest.mark.criterion(6)
def test_criterion_6_polylog():
    _assert_clean(check_6())


@pytest.mark.criterion(7)
def test_criterion_7_symbol_algebra():
    _assert_clean(check_7())


@pytest.mark.criterion(8)
def test_criterion_8_weak_sums():
    _assert_clean(check_8())


@pytest.mark.criterion(9)
def test_criterion_9_connection_probe():
    _assert_clean(check_9())


if __name__ == "__main__":
    ok = True
    for n, check in CHECKS.items():
        fails = check()
        ok &= not fails
        status = "PASS" if not fails else f"FAIL ({len(fails)}: {fails[0]})"
        print(f"criterion {n}: {status} - {TITLES[n]}")
    sys.exit(0 if ok else 1)
