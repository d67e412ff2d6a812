import pytest

_criteria: list[tuple[str, bool]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the assertion still decides the test."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        _criteria.append((label, ok))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
