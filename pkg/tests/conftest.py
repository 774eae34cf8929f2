"""Shared test fixtures, plus the acceptance-criteria summary section."""

import pytest

_criterion_lines = []


@pytest.fixture(scope="session")
def criterion_log():
    """Append formatted per-criterion result lines here; printed after the run."""
    return _criterion_lines


def pytest_terminal_summary(terminalreporter):
    if not _criterion_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_criterion_lines):
        terminalreporter.write_line(line)
