import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import corpus  # noqa: E402

from recordkp.instance import Instance, Item  # noqa: E402
from recordkp.oracle import brute_force  # noqa: E402

ACCEPTANCE_LINES: dict[int, str] = {}

E1 = Instance([Item(10, 5, 1), Item(6, 4, 2), Item(3, 3, 1)], 10)
E2 = Instance([Item(13, 3, 1), Item(14, 4, 1), Item(15, 5, 1)], 8)


@pytest.fixture
def e1():
    return E1


@pytest.fixture
def e2():
    return E2


@pytest.fixture(scope="session")
def oracle_corpus():
    """10k seeded small instances with brute-force optima (shared by the slow suites)."""
    insts = corpus(10_000, seed=20240)
    return [(inst, brute_force(inst).optimum) for inst in insts]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
