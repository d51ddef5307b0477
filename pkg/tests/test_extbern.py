from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from umbralsums.bernoulli import bernoulli_number, bernoulli_poly
from umbralsums.core import Poly
from umbralsums.extbern import (
    SHIFTED_ZERO,
    TILDE,
    beta_example_identity,
    beta_recurrence_check,
    beta_symbolic,
    beta_tilde,
    binomial_poly,
    connection_probe,
    derivative_link_check,
    solve_difference,
    tilde_recurrence_check,
)

F = Fraction


def test_beta_examples():
    for n in range(7):
        assert beta_symbolic((n,)).poly == bernoulli_poly(n) - bernoulli_number(n)
    assert beta_symbolic((1, 1)).poly == Poly([0, F(-1, 2), F(1, 2)])
    assert beta_symbolic((2, 1)).poly == Poly([0, F(1, 3), -1, F(2, 3)])
    assert beta_symbolic((0, 3)).poly == Poly()
    assert beta_symbolic((2, 0)).poly == Poly()


def test_beta_has_no_constant_term():
    for r in (1, 2, 3):
        for idx in product(range(1, 5), repeat=r):
            assert beta_symbolic(idx)(0) == 0


def test_tilde_examples():
    assert beta_tilde((2,)).poly == Poly([F(1, 6), -1, 1])
    assert beta_tilde((1, 0)).poly == Poly([0, 1])
    assert beta_tilde((1, 1))(0) == 0


def test_recurrence_examples():
    rep = beta_recurrence_check((1, 1), z_samples=[0, F(1, 2), 3])
    assert rep.passed and rep.residual == Poly()
    assert beta_recurrence_check((2, 1)).passed
    with pytest.raises(ValueError):
        beta_recurrence_check((1,))
    with pytest.raises(ValueError):
        beta_recurrence_check((1, 0))


def test_recurrences_sweep():
    for r in (2, 3):
        for idx in product(range(1, 5), repeat=r):
            assert beta_recurrence_check(idx).passed, idx
            assert tilde_recurrence_check(idx).passed, idx


def test_derivative_link():
    assert derivative_link_check((2,)).rhs == Poly([0, -1, 1])
    assert derivative_link_check((2, 1)).lhs == beta_symbolic((2, 1)).poly
    for r in (1, 2, 3):
        for idx in product(range(1, 4), repeat=r):
            assert derivative_link_check(idx).passed, idx
    with pytest.raises(ValueError):
        derivative_link_check((1, 0))


def test_beta_example_identity_values():
    assert beta_example_identity(1, 2).lhs == 1
    assert beta_example_identity(1, 3).lhs == 7
    assert beta_example_identity(0, 4).rhs == 12
    for m in range(5):
        for N in range(11):
            assert beta_example_identity(m, N).passed, (m, N)


def test_connection_probe_reports_without_asserting():
    rep = connection_probe((1, 1), 3, SHIFTED_ZERO)
    assert (rep.lhs, rep.rhs, rep.residual) == (3, 3, 0)
    rep = connection_probe((2, 1), 3, TILDE)
    assert (rep.lhs, rep.rhs, rep.residual) == (10, 7, 3)
    for N in range(2, 7):
        for conv in (TILDE, SHIFTED_ZERO):
            rep = connection_probe((2, 1), N, conv)
            assert rep.residual == rep.lhs - rep.rhs
    with pytest.raises(ValueError):
        connection_probe((1,), 3)
    with pytest.raises(ValueError):
        connection_probe((1, 1), 3, "other")


def test_solve_difference_examples():
    assert solve_difference(Poly([1])) == Poly([0, 1])
    assert solve_difference(Poly([0, 1])) == binomial_poly(2)
    f = solve_difference(Poly([0, 0, 1]))
    assert all(f(x + 1) - f(x) == x * x for x in range(11))
    assert f(0) == 0


@given(st.lists(st.fractions(max_denominator=10), max_size=6))
def test_solve_difference_random(cs):
    P = Poly(cs)
    f = solve_difference(P)
    assert f(0) == 0
    assert f.shift(1) - f == P
