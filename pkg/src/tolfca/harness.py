"""
Exhaustive property suite over a corpus of lattices.

For every lattice the suite enumerates all tolerances and all reflexive
weak ordered relations and runs the registered checks.  Checks that
quantify over triples of relations run exhaustively for lattices with at
most ``EXHAUSTIVE_N`` elements and on a seeded sample of ``SAMPLE_SIZE``
triples above that.

Registered checks (id: property):

==================================  ===============================================
lattice-laws                        commutativity, absorption, order vs join/meet
convex-ideal-filter                 convex C equals (C] & [C); I & F = C forces I=(C], F=[C)
wor-characterization                direct weak-ordered test agrees with the
                                    reflexive/compatible/leq@R@leq test
wor-compatible                      every weak ordered relation is compatible
join-endomorphism-wor               {(x, y) : f(x) <= y} is weak ordered
rewor-unit-laws                     leq @ R == R @ leq == R
rewor-composition-closed            R @ S is weak ordered
composition-associative             (R @ S) @ U == R @ (S @ U)
composition-distributes             (R1 & R2) @ S == R1@S & R2@S, and dually
wor-intersection-closed             R & S is weak ordered
re-intersection-subdistributive     (R1 @ R2) & S <= (R1 & S) @ (R2 & S)
re-composition-distributes          both distributive equalities on compatible
                                    reflexive relations
tolerance-determined-by-order-part  T1 == T2 iff T1 & leq == T2 & leq
rewor-contains-order                leq <= S and leq @ S^-1 == S^-1 @ leq == full
beta-yields-rewor                   leq @ T @ leq is reflexive weak ordered
tolerance-from-order-products       T == (leq@T@leq) & (geq@T@geq)
tol-rewor-isomorphism               alpha, beta mutually inverse order isomorphisms
rewor-from-tolerance                R == leq @ (R & R^-1) @ leq
blocks-convex                       blocks are intervals, C == (C] & [C)
blocks-cover                        blocks cover L
factor-antisymmetric                distinct blocks have distinct ideals
factor-bounds                       factor order is a lattice; filters of a pair meet
                                    in the filter of the join, ideals in the ideal of
                                    the meet
congruence-quotient                 transitive tolerances: blocks partition L, order
                                    is the quotient order
block-monotone                      T1 <= T2: each T1 block lies in a T2 block
galois-laws                         A <= A'', B <= B'', A' == A'''
concept-density                     concept == join of object concepts of its extent
                                    == meet of attribute concepts of its intent
extents-ideals                      extents are ideals, intents filters, for weak
                                    ordered incidences
block-concept-bijection             blocks <-> concepts with nonempty extent & intent
delta-embedding                     C -> ((C], [C)) is a lattice embedding
factor-concept-isomorphism          L/T and DM(L/T) isomorphic to the concept lattice
                                    of (L, L, leq@T@leq); image of blocks dense
dm-fixed-point                      DM(L) isomorphic to L
==================================  ===============================================
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable

from .blocks import blocks as tolerance_blocks
from .blocks import check_factor_bounds, factor_lattice
from .corpus import Corpus
from .errors import (
    CorrespondenceViolation,
    EmbeddingViolation,
    FactorNotALattice,
    UnknownCheckId,
)
from .fca import (
    FormalContext,
    block_concept_correspondence,
    concepts,
    delta_embedding,
    derive_extent,
    derive_intent,
    dm_completion,
    gamma,
    mu,
    tolerance_context,
    verify_factor_concept_isomorphism,
)
from .lattice import (
    FiniteLattice,
    are_isomorphic,
    interval,
    down_set,
    is_convex_sublattice,
    principal_filter,
    principal_ideal,
    up_set,
)
from .relations import (
    JoinEndomorphism,
    Relation,
    alpha,
    beta,
    empty,
    enumerate_rewor,
    enumerate_tolerances,
    full,
    identity,
    is_compatible,
    is_rewor,
    is_rewor_by_characterization,
    is_weak_ordered,
    order,
    reverse_order,
    wor_from_join_endomorphism,
)

EXHAUSTIVE_N = 5
SAMPLE_SIZE = 200
ASSOCIATIVITY_N = 4
RANDOM_RELATIONS = 200


class LatticeData:
    """Per-lattice material shared by all checks."""

    def __init__(self, L: FiniteLattice, seed: int):
        self.L = L
        self.seed = seed
        self.tolerances = enumerate_tolerances(L)
        self.rewor = enumerate_rewor(L)
        self.le = order(L)
        self.ge = reverse_order(L)
        self.tol_ids = {T.bits: f"T{i}" for i, T in enumerate(self.tolerances)}
        self._compose = {}

    def rng(self, check_id: str) -> random.Random:
        return random.Random(f"{self.seed}:{self.L.name}:{check_id}")

    def compose(self, R: Relation, S: Relation) -> Relation:
        key = (R.bits, S.bits)
        out = self._compose.get(key)
        if out is None:
            out = self._compose[key] = R @ S
        return out

    def tuples(self, pool, arity: int, check_id: str, limit_n: int = EXHAUSTIVE_N):
        """All ``arity``-tuples from pool when the lattice is small,
        otherwise a seeded sample."""
        if self.L.n <= limit_n:
            yield from product(pool, repeat=arity)
            return
        rng = self.rng(check_id)
        for _ in range(SAMPLE_SIZE):
            yield tuple(rng.choice(pool) for _ in range(arity))

    def join_endomorphisms(self) -> list[JoinEndomorphism]:
        L = self.L
        if L.n <= 4:
            maps = product(range(L.n), repeat=L.n)
        else:
            # constants and translations x -> x v c
            maps = [tuple([c] * L.n) for c in range(L.n)]
            maps += [tuple(L.join(x, c) for x in range(L.n)) for c in range(L.n)]
        out = []
        J = L.join_table
        for f in maps:
            if all(f[J[x, y]] == J[f[x], f[y]] for x in range(L.n) for y in range(x, L.n)):
                out.append(JoinEndomorphism(L, f))
        return out

    def weak_ordered(self) -> list[Relation]:
        extra = [wor_from_join_endomorphism(f) for f in self.join_endomorphisms()]
        pool = {R.bits: R for R in [*self.rewor, empty(self.L), *extra]}
        return [pool[b] for b in sorted(pool)]


@dataclass
class Entry:
    lattice: str
    tolerance: str
    check: str
    passed: bool
    instances: int = 0
    witness: object = None


def _rel(R: Relation):
    return [list(p) for p in R.labelled_pairs()]


# -- checks --------------------------------------------------------------------


def check_lattice_laws(d: LatticeData):
    L = d.L
    for x in range(L.n):
        for y in range(L.n):
            j, m = L.join(x, y), L.meet(x, y)
            ok = (
                j == L.join(y, x)
                and m == L.meet(y, x)
                and L.meet(x, j) == x
                and L.join(x, m) == x
                and L.le(x, y) == (j == y) == (m == x)
            )
            yield "*", ok, None if ok else [L.label(x), L.label(y)]


def check_convex_ideal_filter(d: LatticeData):
    L = d.L
    for a in range(L.n):
        for b in range(L.n):
            if not L.le(a, b):
                continue
            C = interval(L, a, b)
            ok = is_convex_sublattice(L, C) and (down_set(L, C) & up_set(L, C)) == C
            # C as I & F with I = (b], F = [a)
            ok = ok and down_set(L, C) == principal_ideal(L, b)
            ok = ok and up_set(L, C) == principal_filter(L, a)
            yield "*", ok, None if ok else [L.label(a), L.label(b)]


def check_wor_characterization(d: LatticeData):
    L = d.L
    rng = d.rng("wor-characterization")
    pool = list(d.rewor) + list(d.tolerances)
    for _ in range(RANDOM_RELATIONS):
        kind = rng.random()
        if kind < 0.4 and pool:
            # perturb a known member by flipping one bit
            base = rng.choice(pool).bits
            bits = base ^ (1 << rng.randrange(L.n * L.n))
        elif kind < 0.7:
            bits = rng.getrandbits(L.n * L.n)
        else:
            bits = rng.getrandbits(L.n * L.n) | identity(L).bits
        pool_rel = Relation(L, bits)
        a = is_weak_ordered(pool_rel) and pool_rel.is_reflexive()
        b = is_rewor_by_characterization(pool_rel)
        yield "*", a == b, None if a == b else _rel(pool_rel)
    for R in d.rewor:
        ok = is_weak_ordered(R) and is_rewor_by_characterization(R)
        yield "*", ok, None if ok else _rel(R)


def check_wor_compatible(d: LatticeData):
    for R in d.weak_ordered():
        ok = is_weak_ordered(R) and is_compatible(R)
        yield "*", ok, None if ok else _rel(R)


def check_join_endomorphism_wor(d: LatticeData):
    for f in d.join_endomorphisms():
        ok = is_weak_ordered(wor_from_join_endomorphism(f))
        yield "*", ok, None if ok else list(f.map)


def check_rewor_unit_laws(d: LatticeData):
    for R in d.rewor:
        ok = d.compose(d.le, R) == R and d.compose(R, d.le) == R
        yield "*", ok, None if ok else _rel(R)


def check_rewor_composition_closed(d: LatticeData):
    for R, S in d.tuples(d.rewor, 2, "rewor-composition-closed"):
        ok = is_rewor(d.compose(R, S))
        yield "*", ok, None if ok else [_rel(R), _rel(S)]


def check_composition_associative(d: LatticeData):
    for R, S, U in d.tuples(d.rewor, 3, "composition-associative", ASSOCIATIVITY_N):
        ok = d.compose(d.compose(R, S), U) == d.compose(R, d.compose(S, U))
        yield "*", ok, None if ok else [_rel(R), _rel(S), _rel(U)]


def check_composition_distributes(d: LatticeData):
    for R1, R2, S in d.tuples(d.rewor, 3, "composition-distributes"):
        I = R1 & R2
        ok = d.compose(I, S) == (d.compose(R1, S) & d.compose(R2, S)) and d.compose(
            S, I
        ) == (d.compose(S, R1) & d.compose(S, R2))
        yield "*", ok, None if ok else [_rel(R1), _rel(R2), _rel(S)]


def check_wor_intersection_closed(d: LatticeData):
    for R, S in d.tuples(d.weak_ordered(), 2, "wor-intersection-closed"):
        ok = is_weak_ordered(R & S)
        yield "*", ok, None if ok else [_rel(R), _rel(S)]


def _re_pool(d: LatticeData):
    pool = {R.bits: R for R in [*d.tolerances, *d.rewor]}
    return [pool[b] for b in sorted(pool)]


def _re_extended(d: LatticeData):
    pool = {R.bits: R for R in _re_pool(d)}
    for T1 in d.tolerances:
        for T2 in d.tolerances:
            C = d.compose(T1, T2)
            pool.setdefault(C.bits, C)
    return [pool[b] for b in sorted(pool)]


def _re_triples(d: LatticeData, check_id: str):
    yield from d.tuples(_re_pool(d), 3, check_id)
    rng = d.rng(check_id + "/extended")
    ext = _re_extended(d)
    for _ in range(SAMPLE_SIZE):
        yield tuple(rng.choice(ext) for _ in range(3))


def check_re_intersection_subdistributive(d: LatticeData):
    for R1, R2, S in _re_triples(d, "re-intersection-subdistributive"):
        ok = (d.compose(R1, R2) & S) <= d.compose(R1 & S, R2 & S)
        yield "*", ok, None if ok else [_rel(R1), _rel(R2), _rel(S)]


def check_re_composition_distributes(d: LatticeData):
    for R1, R2, S in _re_triples(d, "re-composition-distributes"):
        I = R1 & R2
        ok = d.compose(I, S) == (d.compose(R1, S) & d.compose(R2, S)) and d.compose(
            S, I
        ) == (d.compose(S, R1) & d.compose(S, R2))
        yield "*", ok, None if ok else [_rel(R1), _rel(R2), _rel(S)]


def check_tolerance_determined_by_order_part(d: LatticeData):
    parts = [(T, T & d.le) for T in d.tolerances]
    for T1, P1 in parts:
        for T2, P2 in parts:
            ok = (T1 == T2) == (P1 == P2)
            yield d.tol_ids[T1.bits], ok, None if ok else [_rel(T1), _rel(T2)]


def check_rewor_contains_order(d: LatticeData):
    nabla = full(d.L)
    for S in d.rewor:
        Si = S.inverse()
        ok = d.le <= S and d.compose(d.le, Si) == nabla and d.compose(Si, d.le) == nabla
        yield "*", ok, None if ok else _rel(S)


def check_beta_yields_rewor(d: LatticeData):
    for T in d.tolerances:
        R = beta(T)
        ok = is_rewor(R) and is_rewor_by_characterization(R)
        yield d.tol_ids[T.bits], ok, None if ok else _rel(T)


def check_tolerance_from_order_products(d: LatticeData):
    for T in d.tolerances:
        S = d.compose(d.compose(d.le, T), d.le) & d.compose(d.compose(d.ge, T), d.ge)
        ok = S == T
        yield d.tol_ids[T.bits], ok, None if ok else _rel(T)


def check_tol_rewor_isomorphism(d: LatticeData):
    tols, rews = d.tolerances, d.rewor
    images = []
    for T in tols:
        R = beta(T)
        ok = alpha(R) == T
        images.append(R)
        yield d.tol_ids[T.bits], ok, None if ok else _rel(T)
    for R in rews:
        ok = beta(alpha(R)) == R
        yield "*", ok, None if ok else _rel(R)
    ok = len(tols) == len(rews) and set(images) == set(rews)
    yield "*", ok, None if ok else {"tolerances": len(tols), "rewor": len(rews)}
    # order isomorphism: T1 <= T2 iff beta(T1) <= beta(T2)
    for i, T1 in enumerate(tols):
        for j, T2 in enumerate(tols):
            ok = (T1 <= T2) == (images[i] <= images[j])
            yield d.tol_ids[T1.bits], ok, None if ok else [_rel(T1), _rel(T2)]


def check_rewor_from_tolerance(d: LatticeData):
    for R in d.rewor:
        ok = d.compose(d.compose(d.le, R & R.inverse()), d.le) == R
        yield "*", ok, None if ok else _rel(R)


def check_blocks_convex(d: LatticeData):
    L = d.L
    for T in d.tolerances:
        ok = True
        for b in tolerance_blocks(L, T):
            if not (
                is_convex_sublattice(L, b.members)
                and (b.ideal & b.filter) == b.members
                and interval(L, b.bottom, b.top) == b.members
            ):
                ok = False
                break
        yield d.tol_ids[T.bits], ok, None if ok else _rel(T)


def check_blocks_cover(d: LatticeData):
    for T in d.tolerances:
        covered = set()
        for b in tolerance_blocks(d.L, T):
            covered |= set(b.members.indices())
        ok = covered == set(range(d.L.n))
        yield d.tol_ids[T.bits], ok, None if ok else _rel(T)


def check_factor_antisymmetric(d: LatticeData):
    for T in d.tolerances:
        bs = tolerance_blocks(d.L, T)
        ok = len({b.ideal for b in bs}) == len(bs)
        yield d.tol_ids[T.bits], ok, None if ok else _rel(T)


def check_factor_lattice_bounds(d: LatticeData):
    for T in d.tolerances:
        try:
            bad = check_factor_bounds(factor_lattice(d.L, T))
        except FactorNotALattice as e:
            bad = str(e)
        yield d.tol_ids[T.bits], bad is None, bad


def check_congruence_quotient(d: LatticeData):
    L = d.L
    for T in d.tolerances:
        if not T.is_transitive():
            continue
        F = factor_lattice(L, T)
        reps = [b.bottom for b in F.blocks]
        disjoint = sum(len(b.members) for b in F.blocks) == L.n
        # quotient order: [a] <= [b] iff (a v b) T b
        agrees = all(
            F.order[i, j] == ((L.join(reps[i], reps[j]), reps[j]) in T)
            for i in range(len(reps))
            for j in range(len(reps))
        )
        ok = disjoint and agrees
        yield d.tol_ids[T.bits], ok, None if ok else _rel(T)


def check_block_monotone(d: LatticeData):
    cache = {}

    def bl(T):
        if T.bits not in cache:
            cache[T.bits] = [set(b.members.indices()) for b in tolerance_blocks(d.L, T)]
        return cache[T.bits]

    for T1, T2 in d.tuples(d.tolerances, 2, "block-monotone"):
        if not T1 <= T2:
            continue
        ok = all(any(b <= c for c in bl(T2)) for b in bl(T1))
        yield d.tol_ids[T1.bits], ok, None if ok else [_rel(T1), _rel(T2)]


def _wor_contexts(d: LatticeData):
    L = d.L
    for T in d.tolerances:
        yield d.tol_ids[T.bits], tolerance_context(L, T), beta(T)
    for f in d.join_endomorphisms():
        R = wor_from_join_endomorphism(f)
        yield "*", FormalContext(L.elem_names, L.elem_names, R.matrix), R


def check_galois_laws(d: LatticeData):
    rng = d.rng("galois-laws")
    n = d.L.n
    for tid, K, _ in _wor_contexts(d):
        ok = True
        for _ in range(8):
            A = frozenset(i for i in range(n) if rng.random() < 0.5)
            B = frozenset(i for i in range(n) if rng.random() < 0.5)
            Ai = derive_intent(K, A)
            Be = derive_extent(K, B)
            A2 = derive_extent(K, Ai)
            B2 = derive_intent(K, Be)
            if not (A <= A2 and B <= B2 and derive_intent(K, A2) == Ai
                    and derive_extent(K, B2) == Be):
                ok = False
            # antitone
            A_small = frozenset(list(A)[: len(A) // 2])
            if not derive_intent(K, A) <= derive_intent(K, A_small):
                ok = False
        yield tid, ok, None


def check_concept_density(d: LatticeData):
    for T in d.tolerances:
        K = tolerance_context(d.L, T)
        CL = concepts(K)
        g = [CL.index(gamma(K, x)) for x in range(len(K.objects))]
        m = [CL.index(mu(K, y)) for y in range(len(K.attributes))]
        ok = True
        for i, c in enumerate(CL.concepts):
            if CL.supremum(g[x] for x in c.extent) != i:
                ok = False
            if CL.infimum(m[y] for y in c.intent) != i:
                ok = False
        yield d.tol_ids[T.bits], ok, None if ok else _rel(T)


def check_extents_ideals(d: LatticeData):
    L = d.L
    for tid, K, R in _wor_contexts(d):
        ok = True
        for c in concepts(K).concepts:
            A = L.subset(c.extent)
            B = L.subset(c.intent)
            # empty extents/intents count as degenerate ideals/filters
            if not (A.is_down_closed() and A.is_join_closed()
                    and B.is_up_closed() and B.is_meet_closed()):
                ok = False
                break
        yield tid, ok, None if ok else _rel(R)


def check_block_concept_bijection(d: LatticeData):
    for T in d.tolerances:
        try:
            block_concept_correspondence(d.L, T)
            yield d.tol_ids[T.bits], True, None
        except CorrespondenceViolation as e:
            yield d.tol_ids[T.bits], False, {"error": str(e), "witness": repr(e.witness)}


def check_delta_embedding(d: LatticeData):
    for T in d.tolerances:
        try:
            delta_embedding(d.L, T)
            yield d.tol_ids[T.bits], True, None
        except EmbeddingViolation as e:
            yield d.tol_ids[T.bits], False, {"error": str(e), "witness": repr(e.witness)}


def check_factor_concept_isomorphism(d: LatticeData):
    for T in d.tolerances:
        res = verify_factor_concept_isomorphism(d.L, T)
        yield d.tol_ids[T.bits], res.ok, None if res.ok else repr(res.witnesses)


def check_dm_fixed_point(d: LatticeData):
    ok = are_isomorphic(dm_completion(d.L).as_lattice, d.L) is not None
    yield "*", ok, None


CHECKS: dict[str, Callable] = {
    "lattice-laws": check_lattice_laws,
    "convex-ideal-filter": check_convex_ideal_filter,
    "wor-characterization": check_wor_characterization,
    "wor-compatible": check_wor_compatible,
    "join-endomorphism-wor": check_join_endomorphism_wor,
    "rewor-unit-laws": check_rewor_unit_laws,
    "rewor-composition-closed": check_rewor_composition_closed,
    "composition-associative": check_composition_associative,
    "composition-distributes": check_composition_distributes,
    "wor-intersection-closed": check_wor_intersection_closed,
    "re-intersection-subdistributive": check_re_intersection_subdistributive,
    "re-composition-distributes": check_re_composition_distributes,
    "tolerance-determined-by-order-part": check_tolerance_determined_by_order_part,
    "rewor-contains-order": check_rewor_contains_order,
    "beta-yields-rewor": check_beta_yields_rewor,
    "tolerance-from-order-products": check_tolerance_from_order_products,
    "tol-rewor-isomorphism": check_tol_rewor_isomorphism,
    "rewor-from-tolerance": check_rewor_from_tolerance,
    "blocks-convex": check_blocks_convex,
    "blocks-cover": check_blocks_cover,
    "factor-antisymmetric": check_factor_antisymmetric,
    "factor-bounds": check_factor_lattice_bounds,
    "congruence-quotient": check_congruence_quotient,
    "block-monotone": check_block_monotone,
    "galois-laws": check_galois_laws,
    "concept-density": check_concept_density,
    "extents-ideals": check_extents_ideals,
    "block-concept-bijection": check_block_concept_bijection,
    "delta-embedding": check_delta_embedding,
    "factor-concept-isomorphism": check_factor_concept_isomorphism,
    "dm-fixed-point": check_dm_fixed_point,
}


# -- report ----------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Per (lattice, check) results.

    Passing instances are folded into one entry per (lattice, tolerance,
    check) carrying the instance count; each failing instance gets its own
    entry with a witness.
    """

    entries: list = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if not e.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "entries": len(self.entries),
            "instances": sum(e.instances for e in self.entries),
            "failures": len(self.failures),
            "lattices": len({e.lattice for e in self.entries}),
            "checks": len({e.check for e in self.entries}),
        }

    def by_check(self) -> dict:
        out = {}
        for e in self.entries:
            passed, failed = out.get(e.check, (0, 0))
            if e.passed:
                passed += e.instances
            else:
                failed += 1
            out[e.check] = (passed, failed)
        return out

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "summary": self.summary(),
            "entries": [asdict(e) for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True, default=str) + "\n"

    def to_text(self) -> str:
        lines = [f"{'check':<36} {'instances':>10} {'failures':>9}  status"]
        for cid, (passed, failed) in self.by_check().items():
            status = "PASS" if failed == 0 else "FAIL"
            lines.append(f"{cid:<36} {passed:>10} {failed:>9}  {status}")
        s = self.summary()
        lines.append(
            f"{s['lattices']} lattices, {s['instances']} instances, "
            f"{s['failures']} failures"
        )
        for e in self.failures:
            lines.append(f"FAIL {e.lattice} {e.tolerance} {e.check}: {e.witness}")
        return "\n".join(lines) + "\n"


def run_theorem_suite(corpus, checks=None, seed: int = 0) -> VerificationReport:
    """Run the selected checks (all when None) on every corpus lattice."""
    if checks is None:
        checks = list(CHECKS)
    checks = list(checks)
    if not checks:
        raise UnknownCheckId("no checks selected")
    for c in checks:
        if c not in CHECKS:
            raise UnknownCheckId(c)
    lattices = corpus.lattices if isinstance(corpus, Corpus) else list(corpus)
    report = VerificationReport(
        config={
            "seed": seed,
            "checks": checks,
            "lattices": [L.name for L in lattices],
            "nmax": max((L.n for L in lattices), default=0),
            "exhaustive_n": EXHAUSTIVE_N,
            "sample_size": SAMPLE_SIZE,
        }
    )
    for L in lattices:
        data = LatticeData(L, seed)
        for cid in checks:
            counts = {}
            for tid, passed, witness in CHECKS[cid](data):
                if passed:
                    counts[tid] = counts.get(tid, 0) + 1
                else:
                    report.entries.append(Entry(L.name, tid, cid, False, 1, witness))
            if not counts and not any(
                e.lattice == L.name and e.check == cid for e in report.entries
            ):
                counts["*"] = 0
            for tid in sorted(counts, key=lambda t: (t != "*", len(t), t)):
                report.entries.append(Entry(L.name, tid, cid, True, counts[tid]))
    return report
