import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gammaext import catalog, gamma_extension  # noqa: E402

FANO_ROWS = [
    [1, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 0, 1, 1],
    [0, 0, 1, 1, 1, 0, 1],
]

# Gamma-extension matrices of F7 for X = {1,2} and Y = {1,2,3}, columns 1..7 then g's.
FANO_AX = [
    [1, 0, 0, 0, 1, 1, 1, 1, 0],
    [0, 1, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 1, 1, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1],
]
FANO_AY = [
    [1, 0, 0, 0, 1, 1, 1, 1, 0, 0],
    [0, 1, 0, 1, 0, 1, 1, 0, 1, 0],
    [0, 0, 1, 1, 1, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
]


@pytest.fixture
def fano():
    return catalog.fano()


@pytest.fixture
def u23():
    return catalog.u23()


@pytest.fixture
def fano_x(fano):
    return gamma_extension(fano, {"1", "2"})


@pytest.fixture
def fano_y(fano):
    return gamma_extension(fano, {"1", "2", "3"})


# -- one PASS/FAIL line per acceptance criterion -----------------------------

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        if report.outcome == "failed" or name not in _criteria:
            _criteria[name] = "PASS" if report.outcome == "passed" else report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        terminalreporter.write_line(f"{_criteria[name]:<7} {name}")
