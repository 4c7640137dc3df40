import pytest

CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion():
    """Record the outcome of an acceptance criterion; printed in the terminal summary."""
    def record(number: int, title: str, ok: bool) -> bool:
        CRITERIA[number] = (title, bool(ok))
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, ok = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} - {title}")
