import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid and (
        report.when == "call" or (report.when == "setup" and report.outcome != "passed")
    ):
        detail = dict(report.user_properties).get("measured", "")
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, detail in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  {detail}")
