"""
Finite lattices stored as dense order matrices with join/meet tables.

Elements are the indices ``0..n-1``; labels only matter for input and
output.  A lattice is built either from a list of cover pairs
(:func:`build_lattice`) or from a full order matrix
(:func:`lattice_from_order`).  Both routes validate the lattice property
constructively: every pair gets its set of common upper and lower bounds
computed, and the first pair without a least upper or greatest lower bound
is reported.

>>> C3 = build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")])
>>> C3.label(C3.join(0, 1)), C3.label(C3.meet(1, 2))
('m', 'm')
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptyInput,
    NotALattice,
    UnknownLabel,
)


def _frozen(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


def reflexive_transitive_closure(edges: np.ndarray) -> np.ndarray:
    """Warshall closure of a boolean adjacency matrix, diagonal included."""
    n = edges.shape[0]
    reach = np.array(edges, dtype=bool) | np.eye(n, dtype=bool)
    for k in range(n):
        reach |= reach[:, k : k + 1] & reach[k : k + 1, :]
    return reach


def transitive_reduction(leq: np.ndarray) -> np.ndarray:
    """Cover relation (Hasse edges) of a partial order matrix."""
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    s = strict.astype(np.int64)
    return strict & ~((s @ s) > 0)


class FiniteLattice:
    """
    An immutable finite lattice.

    Attributes
    ----------
    name : str
    n : int
    elem_names : tuple of str
    leq : (n, n) bool array, ``leq[x, y]`` iff x <= y
    join_table, meet_table : (n, n) int arrays
    covers : tuple of (lower, upper) index pairs
    """

    def __init__(self, name, elem_names, leq, join_table, meet_table):
        self.name = name
        self.elem_names = tuple(elem_names)
        self.n = len(self.elem_names)
        self.leq = _frozen(np.asarray(leq, dtype=bool))
        self.join_table = _frozen(np.asarray(join_table, dtype=np.int64))
        self.meet_table = _frozen(np.asarray(meet_table, dtype=np.int64))
        cov = transitive_reduction(self.leq)
        self.covers = tuple((int(a), int(b)) for a, b in zip(*np.nonzero(cov)))
        self._index = {lab: i for i, lab in enumerate(self.elem_names)}
        self._heights = None

    # -- basic access -------------------------------------------------------

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, n={self.n})"

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return (
            self.elem_names == other.elem_names
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self):
        return hash((self.elem_names, self.leq.tobytes()))

    def __len__(self):
        return self.n

    def index(self, label) -> int:
        """Index of an element given by label (ints pass through)."""
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < self.n:
                return int(label)
            raise UnknownLabel(label)
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def label(self, x: int) -> str:
        return self.elem_names[x]

    def labels(self, xs: Iterable[int]) -> list[str]:
        return [self.elem_names[x] for x in sorted(xs)]

    @property
    def bottom(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @property
    def top(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def join(self, x: int, y: int) -> int:
        return int(self.join_table[x, y])

    def meet(self, x: int, y: int) -> int:
        return int(self.meet_table[x, y])

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            acc = self.join_table[acc, x]
        return int(acc)

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc = self.meet_table[acc, x]
        return int(acc)

    @property
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom to each element."""
        if self._heights is None:
            h = [0] * self.n
            # a linear extension: sort by size of principal ideal
            order = np.argsort(self.leq.sum(axis=0), kind="stable")
            for y in order:
                for x, z in self.covers:
                    if z == y:
                        h[y] = max(h[y], h[x] + 1)
            self._heights = tuple(h)
        return self._heights

    def subset(self, members) -> "SubsetView":
        return as_subset(self, members)


class SubsetView:
    """A subset of a lattice, stored as a boolean membership vector."""

    __slots__ = ("host", "members")

    def __init__(self, host: FiniteLattice, members):
        m = np.asarray(members, dtype=bool)
        if m.shape != (host.n,):
            raise ValueError(f"membership vector must have length {host.n}")
        m = m.copy()
        m.setflags(write=False)
        self.host = host
        self.members = m

    def indices(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.members))

    def labels(self) -> list[str]:
        return [self.host.label(i) for i in self.indices()]

    def __iter__(self):
        return iter(self.indices())

    def __len__(self):
        return int(self.members.sum())

    def __contains__(self, x):
        return bool(self.members[x])

    def __eq__(self, other):
        if isinstance(other, SubsetView):
            return self.host == other.host and np.array_equal(
                self.members, other.members
            )
        if isinstance(other, (set, frozenset)):
            return set(self.indices()) == other
        return NotImplemented

    def __hash__(self):
        return hash(self.members.tobytes())

    def __and__(self, other):
        return SubsetView(self.host, self.members & as_subset(self.host, other).members)

    def __or__(self, other):
        return SubsetView(self.host, self.members | as_subset(self.host, other).members)

    def __le__(self, other):
        return bool(np.all(~self.members | as_subset(self.host, other).members))

    def __repr__(self):
        return "{" + ",".join(self.labels()) + "}"

    def is_down_closed(self) -> bool:
        # x in X and y <= x  =>  y in X
        below = self.host.leq[:, self.members].any(axis=1)
        return bool(np.all(~below | self.members))

    def is_up_closed(self) -> bool:
        above = self.host.leq[self.members, :].any(axis=0)
        return bool(np.all(~above | self.members))

    def is_join_closed(self) -> bool:
        idx = np.flatnonzero(self.members)
        return bool(self.members[self.host.join_table[np.ix_(idx, idx)]].all())

    def is_meet_closed(self) -> bool:
        idx = np.flatnonzero(self.members)
        return bool(self.members[self.host.meet_table[np.ix_(idx, idx)]].all())

    def is_ideal(self) -> bool:
        return len(self) > 0 and self.is_down_closed() and self.is_join_closed()

    def is_filter(self) -> bool:
        return len(self) > 0 and self.is_up_closed() and self.is_meet_closed()


def as_subset(L: FiniteLattice, X) -> SubsetView:
    """Coerce a :class:`SubsetView`, a bool mask, or an iterable of
    indices/labels into a :class:`SubsetView` of ``L``."""
    if isinstance(X, SubsetView):
        return X
    if isinstance(X, np.ndarray) and X.dtype == bool:
        return SubsetView(L, X)
    mask = np.zeros(L.n, dtype=bool)
    for x in X:
        mask[L.index(x)] = True
    return SubsetView(L, mask)


# -- construction -------------------------------------------------------------


def _bound_tables(leq: np.ndarray, names: Sequence[str]):
    n = leq.shape[0]
    join = np.empty((n, n), dtype=np.int64)
    meet = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            for table, bounds, kind in (
                (join, leq[x] & leq[y], "join"),
                (meet, leq[:, x] & leq[:, y], "meet"),
            ):
                cand = np.flatnonzero(bounds)
                if kind == "join":
                    best = [u for u in cand if leq[u, cand].all()]
                else:
                    best = [u for u in cand if leq[cand, u].all()]
                if len(best) != 1:
                    raise NotALattice(names[x], names[y], kind)
                table[x, y] = table[y, x] = best[0]
    return join, meet


def lattice_from_order(leq, elem_names=None, name: str = "") -> FiniteLattice:
    """Build a lattice from a full order matrix.

    Raises :class:`CycleDetected` when the matrix is not antisymmetric and
    :class:`NotALattice` for the first pair lacking a join or meet.  The
    matrix is closed reflexively and transitively first.
    """
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    if n == 0:
        raise EmptyInput("a lattice needs at least one element")
    if elem_names is None:
        elem_names = [str(i) for i in range(n)]
    elem_names = list(elem_names)
    seen = set()
    for lab in elem_names:
        if lab in seen:
            raise DuplicateLabel(lab)
        seen.add(lab)
    leq = reflexive_transitive_closure(leq)
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        x, y = np.argwhere(both)[0]
        raise CycleDetected(elem_names[x], elem_names[y])
    join, meet = _bound_tables(leq, elem_names)
    return FiniteLattice(name, elem_names, leq, join, meet)


def build_lattice(elem_names, covers, name: str = "") -> FiniteLattice:
    """Build a lattice from labels and ``(lower, upper)`` cover pairs.

    Pairs that are not covers (e.g. transitive edges) are accepted; the
    stored ``covers`` are always the transitive reduction.
    """
    elem_names = list(elem_names)
    if not elem_names:
        raise EmptyInput("a lattice needs at least one element")
    index = {}
    for i, lab in enumerate(elem_names):
        if lab in index:
            raise DuplicateLabel(lab)
        index[lab] = i
    n = len(elem_names)
    edges = np.zeros((n, n), dtype=bool)
    for a, b in covers:
        for lab in (a, b):
            if lab not in index:
                raise UnknownLabel(lab)
        edges[index[a], index[b]] = True
    return lattice_from_order(edges, elem_names, name)


def chain(k: int, name: str | None = None) -> FiniteLattice:
    names = [str(i) for i in range(k)]
    return build_lattice(names, zip(names, names[1:]), name or f"C{k}")


# -- ideals, filters, convexity ---------------------------------------------


def down_set(L: FiniteLattice, X) -> SubsetView:
    """Order ideal ``{z : z <= x for some x in X}``.

    For a convex sublattice this is the generated ideal; otherwise check
    ``.is_join_closed()`` on the result.
    """
    X = as_subset(L, X)
    if not len(X):
        raise EmptyInput("down_set of an empty set")
    return SubsetView(L, L.leq[:, X.members].any(axis=1))


def up_set(L: FiniteLattice, X) -> SubsetView:
    X = as_subset(L, X)
    if not len(X):
        raise EmptyInput("up_set of an empty set")
    return SubsetView(L, L.leq[X.members, :].any(axis=0))


def principal_ideal(L: FiniteLattice, x: int) -> SubsetView:
    return SubsetView(L, L.leq[:, x])


def principal_filter(L: FiniteLattice, x: int) -> SubsetView:
    return SubsetView(L, L.leq[x, :])


def generated_ideal(L: FiniteLattice, X) -> SubsetView:
    """The ideal generated by X, i.e. the principal ideal of its join."""
    X = as_subset(L, X)
    if not len(X):
        raise EmptyInput("ideal generated by an empty set")
    return principal_ideal(L, L.join_all(X))


def generated_filter(L: FiniteLattice, X) -> SubsetView:
    X = as_subset(L, X)
    if not len(X):
        raise EmptyInput("filter generated by an empty set")
    return principal_filter(L, L.meet_all(X))


def interval(L: FiniteLattice, a: int, b: int) -> SubsetView:
    return SubsetView(L, L.leq[a, :] & L.leq[:, b])


def interval_hull(L: FiniteLattice, X) -> tuple[int, int]:
    """``(meet of X, join of X)``."""
    X = as_subset(L, X)
    if not len(X):
        raise EmptyInput("interval hull of an empty set")
    return L.meet_all(X), L.join_all(X)


def is_convex_sublattice(L: FiniteLattice, X) -> bool:
    X = as_subset(L, X)
    if not len(X):
        raise EmptyInput("convexity of an empty set")
    if not (X.is_join_closed() and X.is_meet_closed()):
        return False
    lo, hi = interval_hull(L, X)
    return interval(L, lo, hi) == X


# -- isomorphism ----------------------------------------------------------------


def _element_signatures(leq: np.ndarray) -> list[tuple]:
    n = leq.shape[0]
    cov = transitive_reduction(leq)
    # longest chains up from minimal elements and down from maximal ones
    order = np.argsort(leq.sum(axis=0), kind="stable")
    up = [0] * n
    for y in order:
        for x in np.flatnonzero(cov[:, y]):
            up[y] = max(up[y], up[x] + 1)
    down = [0] * n
    for y in order[::-1]:
        for z in np.flatnonzero(cov[y, :]):
            down[y] = max(down[y], down[z] + 1)
    sig = [
        (up[i], down[i], int(leq[:, i].sum()), int(leq[i, :].sum()),
         int(cov[:, i].sum()), int(cov[i, :].sum()))
        for i in range(n)
    ]
    # two rounds of neighbourhood refinement
    for _ in range(2):
        sig = [
            (sig[i],
             tuple(sorted(sig[j] for j in np.flatnonzero(cov[:, i]))),
             tuple(sorted(sig[j] for j in np.flatnonzero(cov[i, :]))))
            for i in range(n)
        ]
    return sig


def order_invariant(leq) -> tuple:
    """A relabelling-invariant fingerprint of a finite order."""
    leq = np.asarray(leq, dtype=bool)
    return (leq.shape[0], int(leq.sum()), tuple(sorted(_element_signatures(leq))))


def order_isomorphism(leq1, leq2) -> list[int] | None:
    """Find ``phi`` with ``leq1[x, y] == leq2[phi[x], phi[y]]``, or None."""
    leq1 = np.asarray(leq1, dtype=bool)
    leq2 = np.asarray(leq2, dtype=bool)
    n = leq1.shape[0]
    if leq2.shape[0] != n or leq1.sum() != leq2.sum():
        return None
    s1 = _element_signatures(leq1)
    s2 = _element_signatures(leq2)
    if sorted(s1) != sorted(s2):
        return None
    cands = {x: [y for y in range(n) if s2[y] == s1[x]] for x in range(n)}
    # small candidate classes first, ties by position in a linear extension
    rank = leq1.sum(axis=0)
    todo = sorted(range(n), key=lambda x: (len(cands[x]), rank[x], x))
    phi = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        x = todo[k]
        for y in cands[x]:
            if used[y]:
                continue
            ok = True
            for j in range(k):
                xp = todo[j]
                yp = phi[xp]
                if leq1[x, xp] != leq2[y, yp] or leq1[xp, x] != leq2[yp, y]:
                    ok = False
                    break
            if ok:
                phi[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                phi[x] = -1
                used[y] = False
        return False

    if not extend(0):
        return None
    p = np.array(phi)
    if not np.array_equal(leq1, leq2[np.ix_(p, p)]):
        return None
    return phi


def are_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> list[int] | None:
    """Order isomorphism ``L1 -> L2`` as an index list, or None."""
    return order_isomorphism(L1.leq, L2.leq)

