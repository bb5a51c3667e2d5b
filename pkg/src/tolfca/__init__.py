"""Tolerances of finite lattices, their factor lattices, weak ordered
relations, and the matching concept lattices."""

from .blocks import Block, FactorLattice, block_of, blocks, factor_lattice
from .corpus import Corpus, generate_corpus, named_lattices
from .errors import LatticeError
from .fca import (
    Concept,
    ConceptLattice,
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
from .harness import CHECKS, VerificationReport, run_theorem_suite
from .lattice import (
    FiniteLattice,
    SubsetView,
    are_isomorphic,
    build_lattice,
    down_set,
    interval_hull,
    is_convex_sublattice,
    lattice_from_order,
    up_set,
)
from .relations import (
    JoinEndomorphism,
    Relation,
    alpha,
    beta,
    compose,
    enumerate_rewor,
    enumerate_tolerances,
    full,
    identity,
    intersect,
    inverse,
    is_compatible,
    is_rewor_by_characterization,
    is_tolerance,
    is_weak_ordered,
    order,
    tolerance_generated_by,
    union,
    wor_from_join_endomorphism,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "CHECKS",
    "Concept",
    "ConceptLattice",
    "Corpus",
    "FactorLattice",
    "FiniteLattice",
    "FormalContext",
    "JoinEndomorphism",
    "LatticeError",
    "Relation",
    "SubsetView",
    "VerificationReport",
    "alpha",
    "are_isomorphic",
    "beta",
    "block_concept_correspondence",
    "block_of",
    "blocks",
    "build_lattice",
    "compose",
    "concepts",
    "delta_embedding",
    "derive_extent",
    "derive_intent",
    "dm_completion",
    "down_set",
    "enumerate_rewor",
    "enumerate_tolerances",
    "factor_lattice",
    "full",
    "gamma",
    "generate_corpus",
    "identity",
    "intersect",
    "interval_hull",
    "inverse",
    "is_compatible",
    "is_convex_sublattice",
    "is_rewor_by_characterization",
    "is_tolerance",
    "is_weak_ordered",
    "lattice_from_order",
    "mu",
    "named_lattices",
    "order",
    "run_theorem_suite",
    "tolerance_context",
    "tolerance_generated_by",
    "union",
    "up_set",
    "verify_factor_concept_isomorphism",
    "wor_from_join_endomorphism",
]
