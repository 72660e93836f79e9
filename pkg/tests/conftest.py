import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(num, name): acceptance criterion with a summary line"
    )
    config._criterion_results = {}


def pytest_runtest_makereport(item, call):
    if call.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num, name = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    item.config._criterion_results[num] = (name, outcome)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_criterion_results", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        name, outcome = results[num]
        terminalreporter.write_line(f"criterion {num:2d} {name}: {outcome}")
