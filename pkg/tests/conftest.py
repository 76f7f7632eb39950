import pytest

_LINES = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line; the caller still asserts."""

    def record(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {label}" + (f": {detail}" if detail else "")
        _LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
