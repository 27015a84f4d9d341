import pytest

# (number, title, passed, detail, seconds) recorded by the acceptance tests
ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    def record(number, title, passed, detail, seconds):
        ACCEPTANCE[number] = (title, passed, detail, seconds)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, passed, detail, seconds = ACCEPTANCE[n]
        tr.write_line(f"[{'PASS' if passed else 'FAIL'}] {n:2d}. {title} ({seconds:.1f}s): {detail}")
