import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


@pytest.fixture
def appendix_b_array():
    text = (DATA / "appendix_b_500.txt").read_text()
    return [int(tok) for tok in text.split(",")]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((marker.args[0], report.outcome, round(report.duration, 3)))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}  ({duration:.3f}s)")
