"""Exact umbral evaluation of multiple power sums, extended Bernoulli
polynomials, truncated polylogarithms and multiple zeta values at
non-positive integers."""

from __future__ import annotations

from .bernoulli import (
    apostol_bernoulli_poly,
    apostol_faulhaber,
    bernoulli_number,
    bernoulli_poly,
    faulhaber_poly,
    hansen_reduce,
)
from .core import Poly, Rational, binomial, format_rational, parse_rational, pochhammer, stirling2
from .egf import EgfTable, build_f, build_g, verify_f_recurrence, verify_g_recurrence
from .extbern import (
    ExtBernoulliPoly,
    beta_example_identity,
    beta_recurrence_check,
    beta_symbolic,
    beta_tilde,
    connection_probe,
    derivative_link_check,
    solve_difference,
)
from .mzv import ZetaValue, zeta_constant_term, zeta_depth2, zeta_raabe, zeta_renorm
from .powersum import (
    PowerSumPoly,
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
from .sweeps import Limits, VerifyReport, run_suite
from .umbral import ReductionBase, UmbralPoly, reduce_nested_product

__all__ = [
    "apostol_bernoulli_poly",
    "apostol_faulhaber",
    "bernoulli_number",
    "bernoulli_poly",
    "beta_example_identity",
    "beta_recurrence_check",
    "beta_symbolic",
    "beta_tilde",
    "binomial",
    "build_f",
    "build_g",
    "connection_probe",
    "derivative_link_check",
    "EgfTable",
    "explicit_expansion_h",
    "ExtBernoulliPoly",
    "faulhaber_poly",
    "format_rational",
    "hansen_reduce",
    "Limits",
    "oracle_h",
    "oracle_li",
    "oracle_multi_li",
    "oracle_s",
    "parse_rational",
    "pochhammer",
    "Poly",
    "PowerSumPoly",
    "Rational",
    "recurrence_h",
    "reduce_nested_product",
    "ReductionBase",
    "run_suite",
    "solve_difference",
    "stirling2",
    "symbolic_h",
    "symbolic_li",
    "symbolic_s",
    "UmbralPoly",
    "verify_f_recurrence",
    "verify_g_recurrence",
    "VerifyReport",
    "weighted_nested_sum",
    "zeta_constant_term",
    "zeta_depth2",
    "zeta_raabe",
    "zeta_renorm",
    "ZetaValue",
]

__version__ = "0.1.0"
