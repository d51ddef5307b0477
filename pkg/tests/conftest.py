from __future__ import annotations

import pytest

_OUTCOMES: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_runtest_logreport(report):
    n = getattr(report, "criterion", None)
    if n is None:
        return
    if report.failed:
        _OUTCOMES[n] = "FAIL"
    elif report.when == "call" and report.passed:
        _OUTCOMES.setdefault(n, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    from test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        terminalreporter.write_line(f"criterion {n}: {_OUTCOMES[n]} - {TITLES[n]}")
