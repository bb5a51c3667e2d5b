"""
Blocks of a tolerance and the factor lattice they form.

A block is a maximal set X with X x X inside the tolerance, i.e. a maximal
clique of the tolerance viewed as an undirected graph.  Blocks of a lattice
tolerance are intervals, and they are ordered by inclusion of their
principal ideals:  B <= C  iff  (B] is a subset of (C].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import FactorNotALattice, NotALattice, NotATolerance
from .lattice import (
    FiniteLattice,
    SubsetView,
    down_set,
    interval,
    interval_hull,
    is_convex_sublattice,
    lattice_from_order,
    up_set,
)
from .relations import Relation, is_tolerance


@dataclass(frozen=True, eq=False)
class Block:
    host: FiniteLattice
    members: SubsetView
    ideal: SubsetView
    filter: SubsetView
    bottom: int
    top: int

    @property
    def label(self) -> str:
        return f"[{self.host.label(self.bottom)},{self.host.label(self.top)}]"

    def __contains__(self, x):
        return x in self.members

    def __eq__(self, other):
        if not isinstance(other, Block):
            return NotImplemented
        return self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Block{self.members!r}"


def maximal_cliques(adjacency: list[int]) -> list[int]:
    """Bron-Kerbosch with pivoting over bitmask adjacency lists.

    ``adjacency[v]`` must not contain ``v`` itself.  Returns the maximal
    cliques as bitmasks.
    """
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(R)
            return
        # pivot with the most neighbours in P
        best, pivot = -1, 0
        rest = P | X
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            k = (P & adjacency[u]).bit_count()
            if k > best:
                best, pivot = k, u
        todo = P & ~adjacency[pivot]
        while todo:
            low = todo & -todo
            v = low.bit_length() - 1
            todo ^= low
            expand(R | low, P & adjacency[v], X & adjacency[v])
            P &= ~low
            X |= low

    expand(0, (1 << len(adjacency)) - 1, 0)
    return out


def _require_tolerance(T: Relation):
    if not is_tolerance(T):
        raise NotATolerance("expected a reflexive, symmetric, compatible relation")


def _make_block(L: FiniteLattice, mask) -> Block:
    members = SubsetView(L, mask)
    lo, hi = interval_hull(L, members)
    return Block(L, members, down_set(L, members), up_set(L, members), lo, hi)


def blocks(L: FiniteLattice, T: Relation) -> list[Block]:
    """All blocks of the tolerance T, sorted by (bottom, top).

    Each block is cross-checked: it must be the interval between its meet
    and join, a clique of T, and not extendable by any single element.
    """
    _require_tolerance(T)
    n = L.n
    adj = [r & ~(1 << x) for x, r in enumerate(T.rows)]
    out = []
    for clique in maximal_cliques(adj):
        mask = np.array([bool(clique >> i & 1) for i in range(n)])
        b = _make_block(L, mask)
        if interval(L, b.bottom, b.top) != b.members:
            raise AssertionError(f"block {b!r} is not an interval")
        common = clique
        for x in b.members:
            common &= T.rows[x]
        if common != clique:
            raise AssertionError(f"block {b!r} is not a clique")
        out.append(b)
    out.sort(key=lambda b: (b.bottom, b.top))
    return out


def block_of(L: FiniteLattice, T: Relation, x) -> list[Block]:
    """The blocks containing element ``x``."""
    x = L.index(x)
    return [b for b in blocks(L, T) if x in b.members]


def is_block(L: FiniteLattice, T: Relation, X) -> bool:
    """True iff X is a maximal preblock of T."""
    X = L.subset(X)
    idx = X.indices()
    if not idx:
        return False
    common = (1 << L.n) - 1
    for x in idx:
        common &= T.rows[x]
    mask = sum(1 << x for x in idx)
    # a preblock is maximal iff no outside element is related to all members
    return common & mask == mask and common == mask


@dataclass(eq=False)
class FactorLattice:
    """The blocks of a tolerance ordered by inclusion of their ideals."""

    source: FiniteLattice
    tolerance: Relation
    blocks: list
    order: np.ndarray
    as_lattice: FiniteLattice = field(repr=False)

    def __len__(self):
        return len(self.blocks)

    def join(self, i: int, j: int) -> int:
        return self.as_lattice.join(i, j)

    def meet(self, i: int, j: int) -> int:
        return self.as_lattice.meet(i, j)

    def index(self, block: Block) -> int:
        return self.blocks.index(block)


def factor_lattice(L: FiniteLattice, T: Relation, name: str | None = None) -> FactorLattice:
    bs = blocks(L, T)
    k = len(bs)
    order = np.zeros((k, k), dtype=bool)
    for i, b in enumerate(bs):
        for j, c in enumerate(bs):
            order[i, j] = b.ideal <= c.ideal
    try:
        lat = lattice_from_order(
            order, [b.label for b in bs], name or f"{L.name}/T"
        )
    except NotALattice as e:
        raise FactorNotALattice(str(e)) from e
    return FactorLattice(L, T, bs, lat.leq, lat)


def check_factor_bounds(F: FactorLattice):
    """Verify, for every pair of blocks with join E and meet G, that the
    filters intersect to [E) and the ideals intersect to (G].  Returns the
    first failing pair or None."""
    bs = F.blocks
    for i in range(len(bs)):
        for j in range(i, len(bs)):
            E = bs[F.join(i, j)]
            G = bs[F.meet(i, j)]
            if (bs[i].filter & bs[j].filter) != E.filter:
                return (i, j, "join")
            if (bs[i].ideal & bs[j].ideal) != G.ideal:
                return (i, j, "meet")
    return None


def blocks_are_convex(bs) -> bool:
    return all(is_convex_sublattice(b.host, b.members) for b in bs)
