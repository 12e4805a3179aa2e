import pytest

ACCEPTANCE = []


@pytest.fixture
def record_criterion():
    """Record ``(number, title, passed, detail)`` for the acceptance summary."""
    def record(number, title, passed, detail=""):
        ACCEPTANCE.append((number, title, passed, detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"CRITERION {number} {'PASS' if passed else 'FAIL'} {title}: {detail}")
