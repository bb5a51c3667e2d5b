import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import sym
from tolfca.blocks import (
    block_of,
    blocks,
    blocks_are_convex,
    check_factor_bounds,
    factor_lattice,
    is_block,
    maximal_cliques,
)
from tolfca.corpus import enumerate_lattices
from tolfca.errors import NotATolerance
from tolfca.lattice import are_isomorphic, chain
from tolfca.relations import enumerate_tolerances, full, identity, order, tolerance_generated_by

SMALL = enumerate_lattices(6)


def member_sets(bs):
    return {frozenset(b.members.labels()) for b in bs}


def test_trivial_tolerances(named):
    for L in named.values():
        assert len(blocks(L, identity(L))) == L.n
        assert [b.members.indices() for b in blocks(L, full(L))] == [tuple(range(L.n))]
        assert are_isomorphic(factor_lattice(L, identity(L)).as_lattice, L) is not None
        assert factor_lattice(L, full(L)).as_lattice.n == 1


def test_glued_tolerance(C3):
    T = sym(C3, ("0", "m"), ("m", "1"))
    bs = blocks(C3, T)
    assert member_sets(bs) == {frozenset({"0", "m"}), frozenset({"m", "1"})}
    assert [b.label for b in bs] == ["[0,m]", "[m,1]"]
    F = factor_lattice(C3, T)
    assert len(F) == 2
    lat = F.as_lattice
    assert [(lat.label(a), lat.label(b)) for a, b in lat.covers] == [("[0,m]", "[m,1]")]
    assert member_sets(block_of(C3, T, C3.index("m"))) == member_sets(bs)
    assert member_sets(block_of(C3, T, C3.index("0"))) == {frozenset({"0", "m"})}
    assert is_block(C3, T, ["0", "m"])
    assert not is_block(C3, T, ["0"])


def test_identity_block_of(C3):
    for x in range(3):
        assert [b.members.indices() for b in block_of(C3, identity(C3), x)] == [(x,)]


def test_blocks_reject_non_tolerance(C3):
    with pytest.raises(NotATolerance):
        blocks(C3, order(C3))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_maximal_cliques_match_networkx(arg):
    n, edges = arg
    adj = [0] * n
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for a, b in edges:
        if a != b:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
            G.add_edge(a, b)
    ours = {frozenset(i for i in range(n) if c >> i & 1) for c in maximal_cliques(adj)}
    assert ours == {frozenset(c) for c in nx.find_cliques(G)}


@pytest.mark.parametrize("L", SMALL, ids=lambda L: L.name)
def test_blocks_match_subset_scan(L):
    for T in enumerate_tolerances(L):
        bs = blocks(L, T)
        expected = oracles.maximal_cliques(L.n, set(T.pairs()))
        assert {frozenset(b.members.indices()) for b in bs} == expected
        assert blocks_are_convex(bs)
        F = factor_lattice(L, T)
        assert check_factor_bounds(F) is None


def test_chain_factor_is_chain():
    L = chain(5)
    T = tolerance_generated_by(L, [("0", "2"), ("3", "4")])
    F = factor_lattice(L, T)
    assert all(F.as_lattice.leq[i, j] or F.as_lattice.leq[j, i]
               for i in range(len(F)) for j in range(len(F)))
