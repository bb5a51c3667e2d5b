"""
Formal contexts, concept lattices, and the link between tolerance blocks
and the concepts of ``(L, L, beta(T))``.

Extents and intents are frozensets of indices into the object and
attribute lists.  Internally rows of the incidence are kept as bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .blocks import Block, FactorLattice, factor_lattice, is_block
from .blocks import blocks as tolerance_blocks
from .errors import CorrespondenceViolation, EmbeddingViolation, SizeBound
from .lattice import (
    FiniteLattice,
    are_isomorphic,
    down_set,
    lattice_from_order,
    up_set,
)
from .relations import Relation, beta

DEFAULT_MAX_CELLS = 400


def _mask(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << int(i)
    return m


def _members(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


class FormalContext:
    """A triple (G, M, I) with a boolean incidence matrix."""

    def __init__(self, objects, attributes, incidence):
        self.objects = tuple(objects)
        self.attributes = tuple(attributes)
        inc = np.array(incidence, dtype=bool).reshape(len(self.objects), len(self.attributes))
        inc.setflags(write=False)
        self.incidence = inc
        self._rows = tuple(_mask(np.flatnonzero(r)) for r in inc)
        self._cols = tuple(_mask(np.flatnonzero(c)) for c in inc.T)

    def __repr__(self):
        return f"FormalContext({len(self.objects)}x{len(self.attributes)})"

    def __eq__(self, other):
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.attributes == other.attributes
            and np.array_equal(self.incidence, other.incidence)
        )

    def __hash__(self):
        return hash((self.objects, self.attributes, self.incidence.tobytes()))

    def intent_mask(self, extent_mask: int) -> int:
        acc = (1 << len(self.attributes)) - 1
        g = 0
        while extent_mask:
            if extent_mask & 1:
                acc &= self._rows[g]
            extent_mask >>= 1
            g += 1
        return acc

    def extent_mask(self, intent_mask: int) -> int:
        acc = (1 << len(self.objects)) - 1
        m = 0
        while intent_mask:
            if intent_mask & 1:
                acc &= self._cols[m]
            intent_mask >>= 1
            m += 1
        return acc


@dataclass(frozen=True)
class Concept:
    extent: frozenset
    intent: frozenset

    def label(self, K: FormalContext) -> str:
        a = ",".join(K.objects[g] for g in sorted(self.extent))
        b = ",".join(K.attributes[m] for m in sorted(self.intent))
        return "{" + a + "}|{" + b + "}"


def derive_intent(K: FormalContext, A) -> frozenset:
    """Attributes shared by every object in A (all attributes for empty A)."""
    return _members(K.intent_mask(_mask(A)))


def derive_extent(K: FormalContext, B) -> frozenset:
    """Objects having every attribute in B (all objects for empty B)."""
    return _members(K.extent_mask(_mask(B)))


def is_concept(K: FormalContext, A, B) -> bool:
    A, B = frozenset(A), frozenset(B)
    return derive_intent(K, A) == B and derive_extent(K, B) == A


@dataclass(eq=False)
class ConceptLattice:
    context: FormalContext
    concepts: list
    as_lattice: FiniteLattice = field(repr=False)

    def __len__(self):
        return len(self.concepts)

    def index(self, c: Concept) -> int:
        return self._lookup[c.extent]

    def find(self, extent) -> int | None:
        return self._lookup.get(frozenset(extent))

    def __post_init__(self):
        self._lookup = {c.extent: i for i, c in enumerate(self.concepts)}

    def join(self, i: int, j: int) -> int:
        return self.as_lattice.join(i, j)

    def meet(self, i: int, j: int) -> int:
        return self.as_lattice.meet(i, j)

    def supremum(self, idx) -> int:
        return self.as_lattice.join_all(idx)

    def infimum(self, idx) -> int:
        return self.as_lattice.meet_all(idx)


def concepts(K: FormalContext, max_cells: int = DEFAULT_MAX_CELLS) -> ConceptLattice:
    """All concepts of K, ordered by extent inclusion.

    Intents are generated as all intersections of object intents (the empty
    intersection giving the full attribute set).  Concepts are sorted by
    extent size, then by the sorted extent.
    """
    if len(K.objects) * len(K.attributes) > max_cells:
        raise SizeBound(f"context has more than {max_cells} cells")
    full = (1 << len(K.attributes)) - 1
    intents = {full}
    for row in K._rows:
        intents |= {b & row for b in intents}
    cs = []
    for b in intents:
        a = K.extent_mask(b)
        cs.append(Concept(_members(a), _members(b)))
    cs.sort(key=lambda c: (len(c.extent), sorted(c.extent)))
    k = len(cs)
    order = np.zeros((k, k), dtype=bool)
    for i, c in enumerate(cs):
        for j, d in enumerate(cs):
            order[i, j] = c.extent <= d.extent
    lat = lattice_from_order(order, [c.label(K) for c in cs], "concepts")
    return ConceptLattice(K, cs, lat)


def gamma(K: FormalContext, g: int) -> Concept:
    """Object concept of g."""
    b = derive_intent(K, [g])
    return Concept(derive_extent(K, b), b)


def mu(K: FormalContext, m: int) -> Concept:
    """Attribute concept of m."""
    a = derive_extent(K, [m])
    return Concept(a, derive_intent(K, a))


def order_context(leq, names=None) -> FormalContext:
    leq = np.asarray(leq, dtype=bool)
    if names is None:
        names = [str(i) for i in range(leq.shape[0])]
    return FormalContext(names, names, leq)


def dm_completion(P, names=None) -> ConceptLattice:
    """Dedekind-MacNeille completion as the concept lattice of (P, P, <=).

    ``P`` is a :class:`FiniteLattice` or a square boolean order matrix.
    """
    if isinstance(P, FiniteLattice):
        return concepts(order_context(P.leq, P.elem_names))
    return concepts(order_context(P, names))


def tolerance_context(L: FiniteLattice, T: Relation) -> FormalContext:
    """The context (L, L, leq @ T @ leq)."""
    return FormalContext(L.elem_names, L.elem_names, beta(T).matrix)


def is_supremum_dense(lat: FiniteLattice, subset) -> bool:
    """Every element is the join of the subset elements below it."""
    S = list(subset)
    return all(lat.join_all(s for s in S if lat.leq[s, c]) == c for c in range(lat.n))


def is_infimum_dense(lat: FiniteLattice, subset) -> bool:
    S = list(subset)
    return all(lat.meet_all(s for s in S if lat.leq[c, s]) == c for c in range(lat.n))


# -- blocks versus concepts ----------------------------------------------------


def _block_pair(b: Block) -> tuple[frozenset, frozenset]:
    return frozenset(b.ideal.indices()), frozenset(b.filter.indices())


@dataclass
class BlockConceptCorrespondence:
    blocks: list
    concept_lattice: ConceptLattice
    block_to_concept: list
    concept_to_block: dict
    empty_meet_concepts: list

    def pairs(self):
        return [(self.blocks[i], self.concept_lattice.concepts[j])
                for i, j in enumerate(self.block_to_concept)]


def block_concept_correspondence(L: FiniteLattice, T: Relation) -> BlockConceptCorrespondence:
    """Match blocks of T with concepts of ``tolerance_context(L, T)``.

    Verifies that ((C], [C)) is a concept with C = (C] & [C) for every
    block C, that every concept whose extent meets its intent has a block
    as that intersection and equals ((A&B], [A&B)), and that the two maps
    are mutually inverse.  Raises :class:`CorrespondenceViolation` with a
    witness otherwise.
    """
    bs = tolerance_blocks(L, T)
    K = tolerance_context(L, T)
    CL = concepts(K)
    b2c = []
    for b in bs:
        A, B = _block_pair(b)
        if not is_concept(K, A, B):
            raise CorrespondenceViolation("block pair is not a concept", witness=b)
        if A & B != frozenset(b.members.indices()):
            raise CorrespondenceViolation("block differs from ideal & filter", witness=b)
        b2c.append(CL.index(Concept(A, B)))
    c2b = {}
    empty = []
    for j, c in enumerate(CL.concepts):
        D = c.extent & c.intent
        if not D:
            empty.append(j)
            continue
        if not is_block(L, T, D):
            raise CorrespondenceViolation("extent & intent is not a block", witness=c)
        ideal = frozenset(down_set(L, D).indices())
        filt = frozenset(up_set(L, D).indices())
        if (ideal, filt) != (c.extent, c.intent):
            raise CorrespondenceViolation("concept is not ((D], [D))", witness=c)
        i = next(i for i, b in enumerate(bs) if frozenset(b.members.indices()) == D)
        c2b[j] = i
    for i, j in enumerate(b2c):
        if c2b.get(j) != i:
            raise CorrespondenceViolation("maps are not mutually inverse", witness=bs[i])
    if len(c2b) != len(bs):
        raise CorrespondenceViolation("concept count with nonempty meet != block count")
    return BlockConceptCorrespondence(bs, CL, b2c, c2b, empty)


@dataclass
class DeltaEmbedding:
    factor: FactorLattice
    concept_lattice: ConceptLattice
    image: list

    def __call__(self, i: int) -> int:
        return self.image[i]


def delta_embedding(L: FiniteLattice, T: Relation) -> DeltaEmbedding:
    """The map block C -> ((C], [C)) from the factor lattice into the
    concept lattice, verified to be an injective lattice homomorphism that
    preserves and reflects order.  Raises :class:`EmbeddingViolation`."""
    F = factor_lattice(L, T)
    CL = concepts(tolerance_context(L, T))
    image = []
    for b in F.blocks:
        j = CL.find(_block_pair(b)[0])
        if j is None or CL.concepts[j].intent != _block_pair(b)[1]:
            raise EmbeddingViolation("block does not map to a concept", witness=b)
        image.append(j)
    if len(set(image)) != len(image):
        raise EmbeddingViolation("delta is not injective", witness=image)
    fl = F.as_lattice
    cl = CL.as_lattice
    for i in range(len(F)):
        for k in range(len(F)):
            if fl.leq[i, k] != cl.leq[image[i], image[k]]:
                raise EmbeddingViolation("order not preserved/reflected", witness=(i, k))
            if image[fl.join(i, k)] != cl.join(image[i], image[k]):
                raise EmbeddingViolation("join not preserved", witness=(i, k))
            if image[fl.meet(i, k)] != cl.meet(image[i], image[k]):
                raise EmbeddingViolation("meet not preserved", witness=(i, k))
    return DeltaEmbedding(F, CL, image)


@dataclass
class FactorConceptCheck:
    """Outcome of comparing the factor lattice with the concept lattice."""

    ok: bool
    factor_iso: list | None
    completion_iso: list | None
    supremum_dense: bool
    infimum_dense: bool
    order_equivalent: bool
    witnesses: list


def verify_factor_concept_isomorphism(L: FiniteLattice, T: Relation) -> FactorConceptCheck:
    """Check DM(L/T) and L/T against the concept lattice of (L, L, beta(T)).

    Also checks that the image of the block embedding is supremum- and
    infimum-dense and that it preserves and reflects the block order.
    """
    witnesses = []
    try:
        d = delta_embedding(L, T)
    except EmbeddingViolation as e:
        return FactorConceptCheck(False, None, None, False, False, False,
                                  [("embedding", str(e), e.witness)])
    F = d.factor.as_lattice
    CL = d.concept_lattice.as_lattice
    DM = dm_completion(F).as_lattice
    completion_iso = are_isomorphic(DM, CL)
    if completion_iso is None:
        witnesses.append(("completion-not-isomorphic", DM.n, CL.n))
    factor_iso = are_isomorphic(F, CL)
    if factor_iso is None:
        witnesses.append(("factor-not-isomorphic", F.n, CL.n))
    sup = is_supremum_dense(CL, d.image)
    inf = is_infimum_dense(CL, d.image)
    if not sup:
        witnesses.append(("image-not-supremum-dense",))
    if not inf:
        witnesses.append(("image-not-infimum-dense",))
    order_eq = all(
        F.leq[i, k] == CL.leq[d.image[i], d.image[k]]
        for i in range(F.n)
        for k in range(F.n)
    )
    if not order_eq:
        witnesses.append(("order-not-equivalent",))
    ok = not witnesses
    return FactorConceptCheck(ok, factor_iso, completion_iso, sup, inf, order_eq, witnesses)
