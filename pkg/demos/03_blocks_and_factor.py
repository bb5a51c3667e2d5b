"""
Blocks and the factor lattice
=============================

The blocks of a tolerance are its maximal cliques.  Ordered by their
principal ideals they form a lattice.
"""

from tolfca import blocks, build_lattice, factor_lattice, tolerance_generated_by
from tolfca.formats import to_dot

C3 = build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")], "C3")

# glue 0 with m and m with 1, but not 0 with 1
T = tolerance_generated_by(C3, [("0", "m"), ("m", "1")])
for b in blocks(C3, T):
    print(b.label, b.members.labels())

F = factor_lattice(C3, T)
print(F.as_lattice.n, "elements in the factor lattice")
print(to_dot(F))

# a larger example: the hexagon with one side glued
H = build_lattice(["0", "a", "b", "c", "d", "1"],
                  [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")],
                  "hexagon")
T = tolerance_generated_by(H, [("0", "b")])
print([b.label for b in blocks(H, T)])
print(to_dot(factor_lattice(H, T)))
