import pytest

from kholes.generators import convex_position
from kholes.geometry import PointSet

ACCEPTANCE_LINES = []

# general-position stand-in for a square with a centre point; (2, 1) is off
# both diagonals
SQUARE = [(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]


@pytest.fixture
def square():
    return PointSet(SQUARE)


@pytest.fixture
def parabola5():
    return convex_position(5)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
