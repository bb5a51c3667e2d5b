"""Acceptance criteria 1-9, one test each.

Every test prints a single ``CRITERION n: PASS|FAIL`` line (also repeated
in the terminal summary).  All comparisons are exact.
"""

import random
import subprocess
import sys
import time
from contextlib import contextmanager
from functools import lru_cache

import numpy as np

import oracles
from conftest import ACCEPTANCE, FIXTURES, le_plus, sym
from tolfca import formats
from tolfca.blocks import blocks, factor_lattice
from tolfca.corpus import generate_corpus
from tolfca.fca import (
    FormalContext,
    block_concept_correspondence,
    concepts,
    dm_completion,
    verify_factor_concept_isomorphism,
)
from tolfca.harness import run_theorem_suite
from tolfca.lattice import are_isomorphic, build_lattice
from tolfca.relations import (
    Relation,
    alpha,
    beta,
    enumerate_rewor,
    enumerate_tolerances,
    identity,
    is_rewor,
    is_rewor_by_characterization,
    order,
)


@lru_cache(maxsize=None)
def corpus(nmax):
    return generate_corpus(nmax)


@contextmanager
def criterion(num, title):
    start = time.perf_counter()
    notes = []
    try:
        yield notes
    except BaseException:
        status = "FAIL"
        raise
    else:
        status = "PASS"
    finally:
        extra = f" [{'; '.join(notes)}]" if notes else ""
        line = (f"CRITERION {num}: {status} - {title}{extra} "
                f"({time.perf_counter() - start:.1f}s)")
        print(line)
        ACCEPTANCE.append(line)


def suite_ok(report, notes):
    s = report.summary()
    notes.append(f"{s['lattices']} lattices, {s['instances']} instances, {s['failures']} failures")
    assert report.ok, report.to_text()


def test_criterion_1_tolerance_rewor_isomorphism():
    with criterion(1, "alpha/beta inverse, |Tol| = |ReWOR|, order isomorphism, n <= 6") as notes:
        start = time.perf_counter()
        pairs = 0
        for L in corpus(6):
            tols = enumerate_tolerances(L)
            rewors = enumerate_rewor(L)
            assert len(tols) == len(rewors), L.name
            images = [beta(T) for T in tols]
            assert sorted(images, key=Relation.sort_key) == rewors, L.name
            for T, R in zip(tols, images):
                assert alpha(R) == T
            for R in rewors:
                assert beta(alpha(R)) == R
            for i, T1 in enumerate(tols):
                for j, T2 in enumerate(tols):
                    assert (T1 <= T2) == (images[i] <= images[j])
            pairs += len(tols)
        suite_ok(run_theorem_suite(corpus(6), ["tol-rewor-isomorphism"]), notes)
        elapsed = time.perf_counter() - start
        notes.append(f"{pairs} tolerances")
        assert elapsed < 120


def test_criterion_2_block_concept_bijection():
    with criterion(2, "blocks <-> concepts with nonempty extent & intent, n <= 6") as notes:
        count = 0
        for L in corpus(6):
            for T in enumerate_tolerances(L):
                corr = block_concept_correspondence(L, T)
                assert len(corr.blocks) + len(corr.empty_meet_concepts) == len(corr.concept_lattice)
                count += 1
        C3 = formats.load_lattice(FIXTURES / "c3.json")
        assert are_isomorphic(C3, corpus(6).by_name("C3")) is not None
        tols = enumerate_tolerances(C3)
        assert len(tols) == 5
        glued = sym(C3, ("0", "m"), ("m", "1"))
        assert glued in tols
        corr = block_concept_correspondence(C3, glued)
        assert [b.members.labels() for b in corr.blocks] == [["0", "m"], ["m", "1"]]
        assert len(corr.concept_lattice) == 2 and corr.empty_meet_concepts == []
        notes.append(f"{count} (lattice, tolerance) pairs")


def test_criterion_3_factor_concept_isomorphism():
    with criterion(3, "L/T and DM(L/T) isomorphic to the concept lattice; dense image") as notes:
        count = 0
        for L in corpus(6):
            for T in enumerate_tolerances(L):
                r = verify_factor_concept_isomorphism(L, T)
                assert r.ok, (L.name, r.witnesses)
                assert r.factor_iso is not None and r.completion_iso is not None
                assert r.supremum_dense and r.infimum_dense and r.order_equivalent
                count += 1
        notes.append(f"{count} (lattice, tolerance) pairs")


def test_criterion_4_closure_unit_laws_distributivity():
    with criterion(4, "ReWOR closed under composition and intersection, unit laws, distributivity") as notes:
        checks = ["rewor-composition-closed", "wor-intersection-closed", "rewor-unit-laws",
                  "composition-distributes", "composition-associative"]
        suite_ok(run_theorem_suite(corpus(6), checks), notes)


def test_criterion_5_re_and_rewor_identities():
    with criterion(5, "Re(L) sub/distributivity, order-part determination, ReWOR/Tol identities") as notes:
        checks = ["re-intersection-subdistributive", "re-composition-distributes",
                  "tolerance-determined-by-order-part", "rewor-contains-order",
                  "beta-yields-rewor", "tolerance-from-order-products"]
        suite_ok(run_theorem_suite(corpus(6), checks), notes)


def random_relation(L, rng, rewors):
    n2 = L.n * L.n
    kind = rng.randrange(3)
    if kind == 0:
        bits = rng.getrandbits(n2)
    elif kind == 1:
        bits = order(L).bits | (rng.getrandbits(n2) & rng.getrandbits(n2))
    else:
        bits = rng.choice(rewors).bits ^ (1 << rng.randrange(n2))
    return Relation(L, bits) | identity(L)


def test_criterion_6_oracle_equivalence():
    with criterion(6, "enumerations equal brute-force filters; checker pair agrees, n <= 5") as notes:
        positives = 0
        lats = corpus(5).lattices
        for L in lats:
            leq = oracles.leq_lists(L)
            tols = {frozenset(T.pairs()) for T in enumerate_tolerances(L)}
            rewors = enumerate_rewor(L)
            assert tols == oracles.brute_tolerances(leq), L.name
            assert {frozenset(R.pairs()) for R in rewors} == oracles.brute_rewor(leq), L.name
            rng = random.Random(f"checker:{L.name}")
            for _ in range(1000):
                R = random_relation(L, rng, rewors)
                a = is_rewor(R)
                assert a == is_rewor_by_characterization(R), (L.name, R.labelled_pairs())
                positives += a
        notes.append(f"{len(lats)} lattices, {positives} positive random instances")


def test_criterion_7_concrete_counts():
    with criterion(7, "|Tol(C2)|=2, |Tol(C3)|=5, glued blocks, 2 concepts for (C3,C3,R1)"):
        C2 = corpus(6).by_name("C2")
        C3 = formats.load_lattice(FIXTURES / "c3.json")
        assert len(enumerate_tolerances(C2)) == len(oracles.brute_tolerances(oracles.leq_lists(C2))) == 2
        assert len(enumerate_tolerances(C3)) == len(oracles.brute_tolerances(oracles.leq_lists(C3))) == 5
        glued = sym(C3, ("0", "m"), ("m", "1"))
        got = {frozenset(b.members.labels()) for b in blocks(C3, glued)}
        assert got == {frozenset({"0", "m"}), frozenset({"m", "1"})}
        R1 = le_plus(C3, ("m", "0"))
        K = FormalContext(C3.elem_names, C3.elem_names, R1.matrix)
        assert len(concepts(K)) == 2
        rows = [list(r) for r in np.asarray(K.incidence)]
        assert len(oracles.brute_concepts(rows)) == 2
        assert len(factor_lattice(C3, glued)) == 2


def test_criterion_8_dm_fixed_point():
    with criterion(8, "DM(L) isomorphic to L on the corpus; DM(2-antichain) isomorphic to B2") as notes:
        for L in corpus(6):
            assert are_isomorphic(dm_completion(L).as_lattice, L) is not None, L.name
        B2 = build_lattice(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
        assert are_isomorphic(dm_completion(np.eye(2, dtype=bool)).as_lattice, B2) is not None
        notes.append(f"{len(corpus(6))} lattices")


def test_criterion_9_round_trips_and_cli_verify(tmp_path):
    with criterion(9, "JSON and .cxt round trips; `verify --nmax 6` exits 0") as notes:
        files = 0
        for p in sorted(FIXTURES.glob("*.json")):
            if p.name == "bowtie.json":
                continue
            if '"pairs"' in p.read_text():
                L = formats.load_lattice(FIXTURES / "c3.json")
                R = formats.load_relation(p, L)
                again = formats.relation_from_dict(formats.relation_to_dict(R), L)
                assert again == R
                assert formats.dumps_relation(again) == formats.dumps_relation(R)
            else:
                L = formats.load_lattice(p)
                again = formats.lattice_from_dict(formats.lattice_to_dict(L))
                assert again == L and again.name == L.name
                assert formats.dumps_lattice(again) == formats.dumps_lattice(L)
            files += 1
        for p in sorted(FIXTURES.glob("*.cxt")):
            text = p.read_text()
            assert formats.dumps_cxt(formats.parse_cxt(text)) == text
            files += 1
        for L in corpus(6):
            assert formats.lattice_from_dict(formats.lattice_to_dict(L)) == L
            for T in enumerate_tolerances(L):
                assert formats.relation_from_dict(formats.relation_to_dict(T), L) == T
        proc = subprocess.run(
            [sys.executable, "-m", "tolfca", "verify", "--nmax", "6",
             "--json", str(tmp_path / "report.json")],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stdout + proc.stderr
        notes.append(f"{files} fixture files; " + proc.stdout.strip().splitlines()[-1])
