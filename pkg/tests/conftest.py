from __future__ import annotations

import pytest

# (number, title, outcome, seconds) for every test marked ``criterion``
_RESULTS: list[tuple[int, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    _RESULTS.append((number, title, "PASS" if report.passed else "FAIL", report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, status, secs in sorted(_RESULTS):
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title} ({secs:.1f} s)")
