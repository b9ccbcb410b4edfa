import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tridecomp.certificate import verify_lemma  # noqa: E402
from tridecomp.graphs import enumerate_graphs  # noqa: E402

_criteria = []


@pytest.fixture(scope="session")
def f7():
    return enumerate_graphs(7)


@pytest.fixture(scope="session")
def builtin_report(f7):
    return verify_lemma(graphs=[c.graph for c in f7], jobs=1)


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for name, value in report.user_properties:
        if name == "criterion":
            _criteria.append((value, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
