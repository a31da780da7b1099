import pytest

# one entry per acceptance criterion: (number, title, passed, detail)
ACCEPTANCE = []


@pytest.fixture
def criterion():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number:2d}: {title} ({detail})")
