"""
Running the property suite
==========================

Generate every lattice up to a size and run the registered checks on all of
their tolerances.  Failures come back with witnesses.
"""

from tolfca import CHECKS, generate_corpus, run_theorem_suite

corpus = generate_corpus(5)
print(len(corpus), "lattices")

report = run_theorem_suite(corpus, seed=0)
print(report.to_text())

# a subset of checks
report = run_theorem_suite(corpus, ["tol-rewor-isomorphism", "block-concept-bijection"])
print(report.summary())
print(len(CHECKS), "checks registered")
