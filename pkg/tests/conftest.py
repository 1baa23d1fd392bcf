import pytest

_results = {}


def pytest_runtest_logreport(report):
    title = getattr(report, "criterion", None)
    if title is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _results[title] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for title, outcome in _results.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {title}")
    passed = sum(o == "passed" for o in _results.values())
    terminalreporter.write_line(f"{passed}/{len(_results)} criteria met")
