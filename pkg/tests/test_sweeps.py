from __future__ import annotations

import pytest

from umbralsums.sweeps import SUITES, Limits, default_limits, run_suite, suite_cases


def test_every_suite_passes_at_small_limits():
    small = Limits(max_depth=2, max_weight=2, max_upper=4, bound=3)
    for name in SUITES:
        rep = run_suite(name, small)
        assert rep.passed, (name, rep.failures[:3])
        assert rep.cases > 0


def test_case_order_is_lexicographic_by_depth():
    cases = suite_cases("oracle-h", Limits(2, 1, 1))
    assert cases[:3] == [((0,), 0), ((0,), 1), ((1,), 0)]
    depths = [len(c[0]) for c in cases]
    assert depths == sorted(depths)


def test_jobs_do_not_change_the_report():
    lim = Limits(max_depth=3, max_weight=2, max_upper=6)
    one = run_suite("oracle-li", lim, jobs=1).to_dict()
    many = run_suite("oracle-li", lim, jobs=3).to_dict()
    one.pop("elapsed_ms"), many.pop("elapsed_ms")
    assert one == many


def test_limits_merge():
    assert default_limits("zeta-triple").merged(Limits(max_depth=2)) == Limits(2, 6)
    with pytest.raises(KeyError):
        default_limits("nope")
    with pytest.raises(ValueError):
        run_suite("hansen", jobs=0)
