from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# filled by test_acceptance; printed at the end of the run
ACCEPTANCE_LINES = []


@pytest.fixture
def figure1_csv():
    return DATA / "figure1_sample.csv"


@pytest.fixture
def figure1_text(figure1_csv):
    return figure1_csv.read_text(encoding="utf-8")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call_failed = rep.failed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
