from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbralsums.core import Poly
from umbralsums.powersum import (
    explicit_expansion_h,
    oracle_h,
    oracle_li,
    oracle_multi_li,
    oracle_s,
    recurrence_h,
    symbolic_h,
    symbolic_li,
    symbolic_s,
    weighted_nested_sum,
)

indices = st.lists(st.integers(0, 4), min_size=1, max_size=3).map(tuple)


def test_oracle_examples():
    assert oracle_h((1,), 4) == 6
    assert oracle_h((1, 1), 4) == 11
    assert oracle_h((2, 1), 4) == 31


def test_symbolic_examples():
    assert symbolic_h((1,)).poly == Poly([0, Fraction(-1, 2), Fraction(1, 2)])
    assert symbolic_h((1, 1), 4) == 11
    assert symbolic_h((3, 2, 1), 3) == 0


def test_explicit_examples():
    assert explicit_expansion_h((1,)).poly == symbolic_h((1,)).poly
    assert explicit_expansion_h((1, 1)).poly == symbolic_h((1, 1)).poly
    assert explicit_expansion_h((0, 0))(5) == 6


def test_recurrence_examples():
    assert recurrence_h((1, 1), 4) == 11
    assert recurrence_h((0, 0), 5) == 6
    assert recurrence_h((2, 1), 4) == 31
    with pytest.raises(ValueError):
        recurrence_h((1,), 4)


@given(indices, st.integers(0, 12))
@settings(max_examples=150)
def test_symbolic_matches_oracle(idx, N):
    expected = oracle_h(idx, N)
    assert symbolic_h(idx, N) == expected
    assert explicit_expansion_h(idx)(N) == expected
    if len(idx) >= 2:
        assert recurrence_h(idx, N) == expected


def test_zero_term_flag_counts_zero_index():
    # innermost index allowed to reach 0 when its exponent is 0
    assert symbolic_h((0,), 5, zero_term=True) == 5
    assert symbolic_h((0,), 5) == 4
    assert symbolic_h((2, 0), 4, zero_term=True) == oracle_h((2, 0), 4) + oracle_h((2,), 4)


def test_empty_sum_at_zero():
    for idx in [(0,), (0, 0), (1, 0), (3,)]:
        assert symbolic_h(idx, 0) == 0


def test_structure_when_innermost_exponent_positive():
    for r in (1, 2, 3):
        for idx in product(range(5), repeat=r):
            if idx[-1] == 0:
                continue
            assert symbolic_h(idx).invariant_violations() == [], idx


def test_structure_fails_only_for_all_zero_indices():
    bad = [idx for r in (1, 2, 3) for idx in product(range(5), repeat=r) if symbolic_h(idx).invariant_violations()]
    assert bad == [(0,), (0, 0), (0, 0, 0)]


def test_real_upper_limit_continuation():
    p = symbolic_h((1, 1)).poly
    assert symbolic_h((1, 1), Fraction(1, 2)) == p(Fraction(1, 2))


def test_weak_sum_examples():
    assert oracle_s((1,), 3) == 6 == symbolic_s((1,), 3)
    assert oracle_s((1, 1), 2) == 7 == symbolic_s((1, 1), 2)
    assert oracle_s((0, 0), 3) == 6 == symbolic_s((0, 0), 3)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3).map(tuple), st.integers(0, 10))
@settings(max_examples=100)
def test_weak_sum_matches_oracle(idx, N):
    assert symbolic_s(idx, N) == oracle_s(idx, N)


def test_weighted_nested_sum_examples():
    x = Poly([0, 1])
    assert weighted_nested_sum([x], 4) == 6
    assert weighted_nested_sum([x**2, x], 4) == 31
    assert weighted_nested_sum([x**2 + x, x], 4) == 42
    with pytest.raises(ValueError):
        weighted_nested_sum([x + 1], 4)
    with pytest.raises(ValueError):
        weighted_nested_sum([], 4)


def test_polylog_examples():
    half = Fraction(1, 2)
    assert oracle_li((1,), half, 3) == 1 == symbolic_li((1,), half, 3)
    assert oracle_li((1, 1), half, 4) == Fraction(13, 8) == symbolic_li((1, 1), half, 4)
    assert symbolic_li((2, 1), 1, 4) == 31
    assert all(oracle_li(idx, 3, 1) == 0 == symbolic_li(idx, 3, 1) for idx in [(1,), (0, 2), (1, 1, 1)])


def test_polylog_errors():
    with pytest.raises(ValueError):
        symbolic_li((1,), 0, 3)
    with pytest.raises(ValueError):
        symbolic_li((1,), 2, -1)


@given(
    st.lists(st.integers(0, 3), min_size=1, max_size=3).map(tuple),
    st.sampled_from([Fraction(1), Fraction(1, 2), Fraction(2), Fraction(-1), Fraction(3, 4), Fraction(-5, 3)]),
    st.integers(0, 10),
)
@settings(max_examples=100)
def test_polylog_matches_oracle(idx, z, N):
    assert symbolic_li(idx, z, N) == oracle_li(idx, z, N)


def test_multi_polylog_degenerates():
    assert oracle_multi_li((1, 1), (1, 1), 4) == 11
    assert oracle_multi_li((1,), (Fraction(1, 2),), 3) == 1
    assert oracle_multi_li((0, 0), (1, 1), 5) == 6
    with pytest.raises(ValueError):
        oracle_multi_li((1, 1), (1,), 4)


def test_index_validation():
    with pytest.raises(ValueError):
        symbolic_h(())
    with pytest.raises(ValueError):
        symbolic_h((1, -2))
