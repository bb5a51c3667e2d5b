"""
Finite lattices from covers
===========================

Build a lattice from its Hasse diagram, look up joins and meets, and test
subsets for convexity.
"""

from tolfca import build_lattice, down_set, interval_hull, is_convex_sublattice
from tolfca.errors import NotALattice

# N5: 0 < a < c < 1 and 0 < b < 1
N5 = build_lattice(
    ["0", "a", "b", "c", "1"],
    [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    "N5",
)
a, b, c = (N5.index(x) for x in "abc")
print("a v b =", N5.label(N5.join(a, b)))
print("c ^ b =", N5.label(N5.meet(c, b)))

# join and meet tables are plain numpy arrays
print(N5.join_table)

# down-sets, and convex sublattices with their bounding interval
print("down set of {a, c}:", down_set(N5, ["a", "c"]))
print("{a, c} convex:", is_convex_sublattice(N5, ["a", "c"]),
      "hull:", N5.labels(interval_hull(N5, ["a", "c"])))

# a poset with two minimal upper bounds is rejected
try:
    build_lattice(["0", "a", "b", "c", "d"],
                  [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")])
except NotALattice as e:
    print("rejected:", e)
