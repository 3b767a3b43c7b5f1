"""Shared fixtures: a recorder that prints one line per acceptance criterion
in the terminal summary, regardless of output capturing."""

import pytest

_LINES = {}


@pytest.fixture
def criterion_line():
    def record(number: int, description: str, ok: bool):
        line = f"CRITERION {number}: {'PASS' if ok else 'FAIL'} - {description}"
        _LINES[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(_LINES):
        terminalreporter.write_line(_LINES[number])
