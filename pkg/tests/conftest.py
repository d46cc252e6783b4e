import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ultraval import catalog  # noqa: E402

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.fixture
def v_paper():
    return catalog("V_PAPER")


@pytest.fixture
def w_or():
    return catalog("W_OR")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        doc = getattr(report, "criterion", None) or name
        _ACCEPTANCE[name] = (report.outcome, doc)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = f"criterion {marker.args[0]:>2}: {marker.args[1]}"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for outcome, doc in sorted(_ACCEPTANCE.values(), key=lambda t: t[1]):
        flag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{flag}] {doc}")
