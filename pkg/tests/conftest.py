import pytest
from hypothesis import settings

from quandlering.quandle import make_dihedral

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# filled in by test_acceptance; printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def q5():
    return make_dihedral(5)


@pytest.fixture(scope="session")
def q3():
    return make_dihedral(3)
