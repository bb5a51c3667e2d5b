import sys
from pathlib import Path

import pytest

from tolfca.corpus import named_lattices
from tolfca.relations import Relation, order

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def named():
    return named_lattices()


@pytest.fixture(scope="session")
def C3():
    from tolfca.lattice import build_lattice

    return build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")], "C3")


@pytest.fixture
def fixtures():
    return FIXTURES


def sym(L, *pairs):
    """Identity plus the given pairs in both directions."""
    out = [(x, x) for x in L.elem_names]
    for a, b in pairs:
        out += [(a, b), (b, a)]
    return Relation.from_pairs(L, out)


def le_plus(L, *pairs):
    """The order of L plus extra pairs."""
    return order(L) | Relation.from_pairs(L, pairs)


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
