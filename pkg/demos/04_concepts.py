"""
Concept lattices
================

Concept lattices of formal contexts, the Dedekind-MacNeille completion, and
the match between blocks of a tolerance T and concepts of (L, L, beta(T)).
"""

import numpy as np

from tolfca import (
    FormalContext,
    block_concept_correspondence,
    build_lattice,
    concepts,
    dm_completion,
    tolerance_generated_by,
    verify_factor_concept_isomorphism,
)

K = FormalContext(
    ["frog", "dog", "reed", "car"],
    ["animal", "plant", "moves"],
    [[1, 1, 0], [1, 0, 1], [0, 1, 0], [0, 0, 1]],
)
CL = concepts(K)
for c in CL.concepts:
    print(c.label(K))

# completing a 2-element antichain adds a bottom and a top
print(len(dm_completion(np.eye(2, dtype=bool))), "concepts")

# blocks <-> concepts whose extent meets their intent
C4 = build_lattice(["0", "a", "b", "1"], [("0", "a"), ("a", "b"), ("b", "1")], "C4")
T = tolerance_generated_by(C4, [("0", "a"), ("b", "1")])
corr = block_concept_correspondence(C4, T)
for b, c in corr.pairs():
    print(b.label, "->", c.label(corr.concept_lattice.context))

check = verify_factor_concept_isomorphism(C4, T)
print("factor lattice isomorphic to the concept lattice:", check.factor_iso is not None)
print("completion isomorphic too:", check.completion_iso is not None)
