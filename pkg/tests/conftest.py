import numpy as np
import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def accept():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(number, title, passed, detail):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title} ({detail})")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
