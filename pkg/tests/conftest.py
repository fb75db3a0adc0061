import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ramsey_forge.catalog import generate_cycle, generate_gf16_three_coloring, generate_k5_two_coloring  # noqa: E402
from ramsey_forge.model import EdgeColoring  # noqa: E402


@pytest.fixture
def c5():
    return generate_cycle(5)


@pytest.fixture
def k5():
    return generate_k5_two_coloring()


@pytest.fixture(scope="session")
def gf16():
    return generate_gf16_three_coloring()


@pytest.fixture
def h2():
    """K_2 in color 2 of a 2-color palette: no color-1 edge, no color-2 triangle."""
    return EdgeColoring.from_upper(2, 2, [2])


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
