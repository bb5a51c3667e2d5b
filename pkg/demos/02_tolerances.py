"""
Tolerances and reflexive weak ordered relations
===============================================

Enumerate every tolerance of a small lattice, move between tolerances and
reflexive weak ordered relations with alpha and beta, and build a relation
from a join-endomorphism.
"""

from tolfca import (
    JoinEndomorphism,
    alpha,
    beta,
    build_lattice,
    enumerate_rewor,
    enumerate_tolerances,
    is_rewor_by_characterization,
    is_weak_ordered,
    order,
    tolerance_generated_by,
    wor_from_join_endomorphism,
)

C3 = build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")], "C3")

tols = enumerate_tolerances(C3)
print(len(tols), "tolerances")
for T in tols:
    R = beta(T)
    extra = sorted(set(R.labelled_pairs()) - set(order(C3).labelled_pairs()))
    print("  T =", [p for p in T.labelled_pairs() if p[0] != p[1]], " beta(T) = <= +", extra)
    assert alpha(R) == T

# both sides have the same size
print(len(enumerate_rewor(C3)), "reflexive weak ordered relations")

# identifying 0 with 1 forces everything together
print(tolerance_generated_by(C3, [("0", "1")]).labelled_pairs())

# {(x, y) : f(x) <= y} for a join-endomorphism f
f = JoinEndomorphism(C3, ("0", "1", "1"))
Rf = wor_from_join_endomorphism(f)
print("R^f =", Rf.labelled_pairs())
print("weak ordered:", is_weak_ordered(Rf), " reflexive:", Rf.is_reflexive(),
      " passes the characterization:", is_rewor_by_characterization(Rf))
