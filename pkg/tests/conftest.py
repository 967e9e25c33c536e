import pytest

from systolic.lab.fuchsian import bolza_surface

ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def bolza():
    return bolza_surface()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
