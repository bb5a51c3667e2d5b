"""
Binary relations on a finite lattice.

A :class:`Relation` is an immutable n x n bit matrix packed into one Python
integer (bit ``x * n + y`` set iff ``(x, y)`` is in the relation).  The
operators follow set/relation algebra::

    R @ S     composition  {(x, z) : exists y, (x, y) in R, (y, z) in S}
    R & S     intersection
    R | S     union
    R <= S    inclusion
    R.inverse()

On top of that the module provides the predicates (compatible, tolerance,
weak ordered), the maps ``alpha(R) = R & R^-1`` and
``beta(T) = leq @ T @ leq``, tolerance generation and the enumeration of all
tolerances / reflexive weak ordered relations of a lattice.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import (
    HostMismatch,
    NotAJoinEndomorphism,
    NotATolerance,
    NotAWeakOrderedRelation,
    SizeBound,
)
from .lattice import FiniteLattice

DEFAULT_MAX_N = 9


def _bits_of(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Relation:
    """A relation on the elements of ``host``."""

    __slots__ = ("host", "bits", "_rows", "_cols")

    def __init__(self, host: FiniteLattice, bits: int):
        if bits < 0 or bits >> (host.n * host.n):
            raise ValueError("relation bits out of range for host")
        self.host = host
        self.bits = bits
        self._rows = None
        self._cols = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_pairs(cls, host: FiniteLattice, pairs: Iterable) -> "Relation":
        n = host.n
        bits = 0
        for x, y in pairs:
            bits |= 1 << (host.index(x) * n + host.index(y))
        return cls(host, bits)

    @classmethod
    def from_matrix(cls, host: FiniteLattice, matrix) -> "Relation":
        m = np.asarray(matrix, dtype=bool)
        if m.shape != (host.n, host.n):
            raise ValueError(f"matrix must be {host.n}x{host.n}")
        return cls.from_rows(
            host, [sum(1 << int(y) for y in np.flatnonzero(row)) for row in m]
        )

    @classmethod
    def from_rows(cls, host: FiniteLattice, rows) -> "Relation":
        n = host.n
        bits = 0
        for x, r in enumerate(rows):
            bits |= r << (x * n)
        rel = cls(host, bits)
        rel._rows = tuple(rows)
        return rel

    # -- views ----------------------------------------------------------------

    @property
    def rows(self) -> tuple[int, ...]:
        """Row bitmasks: bit y of ``rows[x]`` is set iff (x, y) in R."""
        if self._rows is None:
            n = self.host.n
            full = (1 << n) - 1
            self._rows = tuple((self.bits >> (x * n)) & full for x in range(n))
        return self._rows

    @property
    def cols(self) -> tuple[int, ...]:
        """Column bitmasks: bit x of ``cols[y]`` is set iff (x, y) in R."""
        if self._cols is None:
            self._cols = self.inverse().rows
        return self._cols

    @property
    def matrix(self) -> np.ndarray:
        n = self.host.n
        m = np.zeros((n, n), dtype=bool)
        for x, r in enumerate(self.rows):
            for y in _bits_of(r):
                m[x, y] = True
        return m

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, r in enumerate(self.rows) for y in _bits_of(r)]

    def labelled_pairs(self) -> list[tuple[str, str]]:
        h = self.host
        return [(h.label(x), h.label(y)) for x, y in self.pairs()]

    def __contains__(self, pair):
        x, y = pair
        return bool(self.bits >> (self.host.index(x) * self.host.n + self.host.index(y)) & 1)

    def __len__(self):
        return self.bits.bit_count()

    def __iter__(self):
        return iter(self.pairs())

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return self.bits == other.bits and _same_host(self, other)

    def __hash__(self):
        return hash((self.host.n, self.bits))

    def __repr__(self):
        body = ", ".join(f"({a},{b})" for a, b in self.labelled_pairs())
        return f"Relation({{{body}}})"

    def sort_key(self):
        """Number of pairs, then bit-matrix read row-major."""
        n = self.host.n
        return (len(self), format(self.bits, f"0{n * n}b")[::-1])

    # -- algebra ----------------------------------------------------------------

    def __matmul__(self, other: "Relation") -> "Relation":
        return compose(self, other)

    def __and__(self, other: "Relation") -> "Relation":
        return intersect(self, other)

    def __or__(self, other: "Relation") -> "Relation":
        return union(self, other)

    def __le__(self, other: "Relation") -> bool:
        _check_host(self, other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "Relation") -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: "Relation") -> bool:
        return other <= self

    def inverse(self) -> "Relation":
        n = self.host.n
        cols = [0] * n
        for x, r in enumerate(self.rows):
            for y in _bits_of(r):
                cols[y] |= 1 << x
        return Relation.from_rows(self.host, cols)

    # -- elementary properties -------------------------------------------------

    def is_reflexive(self) -> bool:
        return self.bits & _diagonal_bits(self.host.n) == _diagonal_bits(self.host.n)

    def is_symmetric(self) -> bool:
        return self.bits == self.inverse().bits

    def is_transitive(self) -> bool:
        return compose(self, self) <= self


@lru_cache(maxsize=None)
def _diagonal_bits(n: int) -> int:
    return sum(1 << (x * n + x) for x in range(n))


def _same_host(r: Relation, s: Relation) -> bool:
    return r.host is s.host or r.host == s.host


def _check_host(r: Relation, s: Relation):
    if not _same_host(r, s):
        raise HostMismatch(f"relations live on {r.host!r} and {s.host!r}")


# -- constants ----------------------------------------------------------------


def identity(L: FiniteLattice) -> Relation:
    """The diagonal {(x, x)}."""
    return Relation(L, _diagonal_bits(L.n))


def full(L: FiniteLattice) -> Relation:
    """All of L x L."""
    return Relation(L, (1 << (L.n * L.n)) - 1)


def empty(L: FiniteLattice) -> Relation:
    return Relation(L, 0)


# keyed on the matrix bytes, not the lattice: equal lattices may carry
# different names and each relation must keep the caller's host
@lru_cache(maxsize=512)
def _matrix_bits(n: int, data: bytes) -> int:
    m = np.frombuffer(data, dtype=bool).reshape(n, n)
    return sum(1 << (int(x) * n + int(y)) for x, y in zip(*np.nonzero(m)))


def order(L: FiniteLattice) -> Relation:
    """The lattice order <= as a relation."""
    return Relation(L, _matrix_bits(L.n, np.ascontiguousarray(L.leq).tobytes()))


def reverse_order(L: FiniteLattice) -> Relation:
    return Relation(L, _matrix_bits(L.n, np.ascontiguousarray(L.leq.T).tobytes()))


# -- basic operations -----------------------------------------------------------


def compose(R: Relation, S: Relation) -> Relation:
    _check_host(R, S)
    srows = S.rows
    out = []
    for r in R.rows:
        acc = 0
        for y in _bits_of(r):
            acc |= srows[y]
        out.append(acc)
    return Relation.from_rows(R.host, out)


def inverse(R: Relation) -> Relation:
    return R.inverse()


def intersect(R: Relation, S: Relation) -> Relation:
    _check_host(R, S)
    return Relation(R.host, R.bits & S.bits)


def union(R: Relation, S: Relation) -> Relation:
    _check_host(R, S)
    return Relation(R.host, R.bits | S.bits)


def reflexive_closure(R: Relation) -> Relation:
    return Relation(R.host, R.bits | _diagonal_bits(R.host.n))


def symmetric_reflexive_closure(R: Relation) -> Relation:
    return reflexive_closure(R | R.inverse())


# -- predicates ---------------------------------------------------------------------


def is_compatible(R: Relation) -> bool:
    """True iff R is a sublattice of L x L (closed under componentwise
    join and meet)."""
    p = R.pairs()
    if not p:
        return True
    L = R.host
    xs = np.array([a for a, _ in p])
    ys = np.array([b for _, b in p])
    m = R.matrix
    J = m[L.join_table[np.ix_(xs, xs)], L.join_table[np.ix_(ys, ys)]]
    if not J.all():
        return False
    return bool(m[L.meet_table[np.ix_(xs, xs)], L.meet_table[np.ix_(ys, ys)]].all())


def compatibility_witness(R: Relation):
    """A pair of related pairs whose join or meet escapes R, or None."""
    L = R.host
    p = R.pairs()
    for i, (x1, y1) in enumerate(p):
        for x2, y2 in p[i:]:
            for op, tab in (("join", L.join_table), ("meet", L.meet_table)):
                q = (int(tab[x1, x2]), int(tab[y1, y2]))
                if q not in R:
                    return ((x1, y1), (x2, y2), op, q)
    return None


def is_tolerance(R: Relation) -> bool:
    return R.is_reflexive() and R.is_symmetric() and is_compatible(R)


def _closed_under(members: int, table) -> bool:
    # members is a bitmask; table[a][b] the binary operation
    elems = list(_bits_of(members))
    for i, a in enumerate(elems):
        row = table[a]
        for b in elems[i + 1 :]:
            if not members >> row[b] & 1:
                return False
    return True


def is_weak_ordered(R: Relation) -> bool:
    """Check the three weak-ordered-relation conditions directly.

    (1) u <= x, (x, y) in R, y <= z  imply  (u, z) in R;
    (2) (a, t), (b, t) in R  imply  (a v b, t) in R;
    (3) (z, a), (z, b) in R  imply  (z, a ^ b) in R.

    Conditions (2) and (3) are only tested for two-element sets; larger
    finite sets follow by induction.  The empty relation passes.
    """
    L = R.host
    le = order(L)
    if not compose(compose(le, R), le) <= R:
        return False
    join = L.join_table.tolist()
    meet = L.meet_table.tolist()
    for col in R.cols:
        if not _closed_under(col, join):
            return False
    for row in R.rows:
        if not _closed_under(row, meet):
            return False
    return True


def is_rewor_by_characterization(R: Relation) -> bool:
    """Reflexive, compatible and equal to ``leq @ R @ leq``."""
    le = order(R.host)
    return R.is_reflexive() and is_compatible(R) and le @ R @ le == R


def is_rewor(R: Relation) -> bool:
    return R.is_reflexive() and is_weak_ordered(R)


# -- the alpha / beta correspondence ---------------------------------------------


def alpha(R: Relation) -> Relation:
    """Tolerance ``R & R^-1`` of a reflexive weak ordered relation."""
    if not is_rewor(R):
        raise NotAWeakOrderedRelation("alpha expects a reflexive weak ordered relation")
    return R & R.inverse()


def beta(T: Relation) -> Relation:
    """Reflexive weak ordered relation ``leq @ T @ leq`` of a tolerance."""
    if not is_tolerance(T):
        raise NotATolerance("beta expects a tolerance")
    le = order(T.host)
    return le @ T @ le


@dataclass(frozen=True)
class JoinEndomorphism:
    host: FiniteLattice
    map: tuple

    def __post_init__(self):
        f = tuple(int(self.host.index(v)) for v in self.map)
        if len(f) != self.host.n:
            raise NotAJoinEndomorphism(f"map must have {self.host.n} entries")
        object.__setattr__(self, "map", f)
        J = self.host.join_table
        for x in range(self.host.n):
            for y in range(x, self.host.n):
                if f[J[x, y]] != J[f[x], f[y]]:
                    raise NotAJoinEndomorphism(
                        f"f({self.host.label(x)} v {self.host.label(y)}) != "
                        f"f({self.host.label(x)}) v f({self.host.label(y)})"
                    )

    def __call__(self, x: int) -> int:
        return self.map[x]


def wor_from_join_endomorphism(f: JoinEndomorphism) -> Relation:
    """``{(x, y) : f(x) <= y}``."""
    L = f.host
    return Relation.from_matrix(L, L.leq[list(f.map), :])


# -- tolerance generation and enumeration --------------------------------------


def _compatible_closure(L: FiniteLattice, closed: set, fresh) -> int:
    """Close ``closed | fresh`` under componentwise join and meet.

    ``closed`` must already be closed; only combinations touching a fresh
    pair are formed.
    """
    J = L.join_table.tolist()
    M = L.meet_table.tolist()
    members = set(closed)
    work = deque(p for p in fresh if p not in members)
    members.update(work)
    every = list(members)
    while work:
        a, b = work.popleft()
        ja, jb, ma, mb = J[a], J[b], M[a], M[b]
        k = 0
        while k < len(every):
            c, d = every[k]
            k += 1
            for q in ((ja[c], jb[d]), (ma[c], mb[d])):
                if q not in members:
                    members.add(q)
                    every.append(q)
                    work.append(q)
    n = L.n
    return sum(1 << (x * n + y) for x, y in members)


def tolerance_generated_by(L: FiniteLattice, pairs: Iterable = ()) -> Relation:
    """Least tolerance of L containing ``pairs``."""
    seed = set()
    for a, b in pairs:
        a, b = L.index(a), L.index(b)
        seed.add((a, b))
        seed.add((b, a))
    diag = {(x, x) for x in range(L.n)}
    return Relation(L, _compatible_closure(L, diag, seed))


def tolerance_join(T1: Relation, T2: Relation) -> Relation:
    """Least tolerance containing both tolerances."""
    _check_host(T1, T2)
    return Relation(T1.host, _compatible_closure(T1.host, set(T1.pairs()), T2.pairs()))


def _check_size(L: FiniteLattice, max_n: int):
    if L.n > max_n:
        raise SizeBound(f"{L.name or 'lattice'} has {L.n} > {max_n} elements")


def principal_tolerances(L: FiniteLattice) -> list[Relation]:
    return [
        tolerance_generated_by(L, [(a, b)])
        for a in range(L.n)
        for b in range(a + 1, L.n)
    ]


def enumerate_tolerances(L: FiniteLattice, max_n: int = DEFAULT_MAX_N) -> list[Relation]:
    """All tolerances of L, sorted by :meth:`Relation.sort_key`.

    Every tolerance is the join of the principal tolerances it contains, so
    a breadth-first closure from the diagonal under joins with principal
    tolerances reaches all of them.
    """
    _check_size(L, max_n)
    principals = list({P.bits: P for P in principal_tolerances(L)}.values())
    start = identity(L)
    seen = {start.bits: start}
    queue = deque([start])
    while queue:
        T = queue.popleft()
        for P in principals:
            if P.bits & ~T.bits == 0:
                continue
            U = tolerance_join(T, P)
            if U.bits not in seen:
                seen[U.bits] = U
                queue.append(U)
    return sorted(seen.values(), key=Relation.sort_key)


def enumerate_rewor(L: FiniteLattice, max_n: int = DEFAULT_MAX_N) -> list[Relation]:
    """All reflexive weak ordered relations, as the images of tolerances
    under :func:`beta`."""
    _check_size(L, max_n)
    le = order(L)
    out = {(le @ T @ le) for T in enumerate_tolerances(L, max_n)}
    return sorted(out, key=Relation.sort_key)
