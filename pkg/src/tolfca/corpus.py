"""
Test corpora of small lattices.

Every lattice with n >= 2 elements is a bounded extension of a poset on
n - 2 elements, so all lattices up to isomorphism are obtained by
enumerating posets up to isomorphism (grow by one maximal element at a
time, placed above an order ideal of the smaller poset) and keeping those
whose bounded extension is a lattice.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .errors import NotALattice, SizeBound
from .lattice import (
    FiniteLattice,
    build_lattice,
    lattice_from_order,
    order_invariant,
    order_isomorphism,
)

MAX_NMAX = 8


def _down_closed_subsets(leq: np.ndarray):
    k = leq.shape[0]
    for mask in range(1 << k):
        members = np.array([bool(mask >> i & 1) for i in range(k)], dtype=bool)
        below = leq[:, members].any(axis=1) if k else members
        if np.all(~below | members):
            yield members


def _dedup(orders):
    buckets = defaultdict(list)
    out = []
    for leq in orders:
        key = order_invariant(leq)
        if any(order_isomorphism(leq, other) is not None for other in buckets[key]):
            continue
        buckets[key].append(leq)
        out.append(leq)
    return out


def posets_up_to_iso(kmax: int) -> list[list[np.ndarray]]:
    """``result[k]`` lists the order matrices of all k-element posets up to
    isomorphism, for k = 0..kmax."""
    levels = [[np.zeros((0, 0), dtype=bool)]]
    for k in range(kmax):
        grown = []
        for leq in levels[k]:
            for ideal in _down_closed_subsets(leq):
                new = np.zeros((k + 1, k + 1), dtype=bool)
                new[:k, :k] = leq
                new[:k, k] = ideal
                new[k, k] = True
                grown.append(new)
        levels.append(_dedup(grown))
    return levels


def _bounded(leq: np.ndarray) -> np.ndarray:
    k = leq.shape[0]
    out = np.zeros((k + 2, k + 2), dtype=bool)
    out[0, :] = True
    out[:, k + 1] = True
    out[1 : k + 1, 1 : k + 1] = leq
    return out


def _middle_names(k: int) -> list[str]:
    return [chr(ord("a") + i) for i in range(k)]


def enumerate_lattices(nmax: int) -> list[FiniteLattice]:
    """All lattices with at most ``nmax`` elements, up to isomorphism,
    ordered by size.  Names are ``L<n>.<i>``; elements are 0, a, b, ..., 1."""
    if not 1 <= nmax <= MAX_NMAX:
        raise SizeBound(f"nmax must be in 1..{MAX_NMAX}")
    out = [build_lattice(["0"], [], "L1.1")]
    posets = posets_up_to_iso(max(nmax - 2, 0))
    for n in range(2, nmax + 1):
        count = 0
        for leq in posets[n - 2]:
            try:
                lat = lattice_from_order(
                    _bounded(leq), ["0", *_middle_names(n - 2), "1"], ""
                )
            except NotALattice:
                continue
            count += 1
            lat.name = f"L{n}.{count}"
            out.append(lat)
    return out


def named_lattices() -> dict[str, FiniteLattice]:
    lats = {}
    for k in range(2, 6):
        names = ["0", *_middle_names(k - 2), "1"]
        lats[f"C{k}"] = build_lattice(names, zip(names, names[1:]), f"C{k}")
    lats["B2"] = build_lattice(
        ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], "B2"
    )
    lats["B3"] = build_lattice(
        ["0", "a", "b", "c", "ab", "ac", "bc", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"),
         ("a", "ab"), ("a", "ac"), ("b", "ab"), ("b", "bc"), ("c", "ac"), ("c", "bc"),
         ("ab", "1"), ("ac", "1"), ("bc", "1")],
        "B3",
    )
    lats["N5"] = build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        "N5",
    )
    lats["M3"] = build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        "M3",
    )
    lats["hexagon"] = build_lattice(
        ["0", "a", "b", "c", "d", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")],
        "hexagon",
    )
    return lats


@dataclass
class Corpus:
    lattices: list = field(default_factory=list)
    provenance: list = field(default_factory=list)

    def add(self, lattice: FiniteLattice, tag: str):
        self.lattices.append(lattice)
        self.provenance.append(tag)

    def __len__(self):
        return len(self.lattices)

    def __iter__(self):
        return iter(self.lattices)

    def enumerated(self) -> list[FiniteLattice]:
        return [L for L, t in zip(self.lattices, self.provenance) if t == "enumerated"]

    def by_name(self, name: str) -> FiniteLattice:
        for L in self.lattices:
            if L.name == name:
                return L
        raise KeyError(name)


def generate_corpus(nmax: int = 6, named: bool = True) -> Corpus:
    """All lattices with at most ``nmax`` elements plus the named lattices
    (chains C2..C5, B2, B3, N5, M3, hexagon) that fit the size bound."""
    corpus = Corpus()
    for L in enumerate_lattices(nmax):
        corpus.add(L, "enumerated")
    if named:
        for L in named_lattices().values():
            if L.n <= nmax:
                corpus.add(L, "named")
    return corpus
