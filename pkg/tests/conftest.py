import pytest
from hypothesis import settings

from dpva.parse import parse

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def P():
    """Parse with the two default components."""
    return parse


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_line():
    """Collect a line for the acceptance section of the terminal summary."""
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
