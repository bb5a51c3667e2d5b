"""Brute-force reference implementations used to freeze expected values.

Nothing here imports the package's algorithms.  Orders are plain lists of
lists of bools; relations are Python sets of (x, y) pairs.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

import numpy as np


def leq_lists(L):
    """Order of a package lattice as a list of lists (data only)."""
    return [[bool(v) for v in row] for row in np.asarray(L.leq)]


def lub(leq, x, y):
    n = len(leq)
    ups = [z for z in range(n) if leq[x][z] and leq[y][z]]
    least = [z for z in ups if all(leq[z][w] for w in ups)]
    return least[0] if len(least) == 1 else None


def glb(leq, x, y):
    n = len(leq)
    downs = [z for z in range(n) if leq[z][x] and leq[z][y]]
    great = [z for z in downs if all(leq[w][z] for w in downs)]
    return great[0] if len(great) == 1 else None


def is_partial_order(leq):
    n = len(leq)
    for x in range(n):
        if not leq[x][x]:
            return False
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                return False
            for z in range(n):
                if leq[x][y] and leq[y][z] and not leq[x][z]:
                    return False
    return True


def is_lattice_order(leq):
    n = len(leq)
    return is_partial_order(leq) and all(
        lub(leq, x, y) is not None and glb(leq, x, y) is not None
        for x in range(n)
        for y in range(n)
    )


def brute_isomorphism(leq1, leq2):
    n = len(leq1)
    if n != len(leq2):
        return None
    for p in permutations(range(n)):
        if all(leq1[x][y] == leq2[p[x]][p[y]] for x in range(n) for y in range(n)):
            return p
    return None


def brute_lattice_counts(nmax):
    """Number of unlabelled lattices of each size 1..nmax.

    Every finite poset has a linear extension, so each lattice is realised by
    an order matrix that is upper triangular with 0 the bottom and n-1 the
    top; enumerate those, keep lattices, then dedupe by permutation search.
    """
    counts = {1: 1}
    for n in range(2, nmax + 1):
        mid = list(combinations(range(1, n - 1), 2))
        found = []
        for bits in product([False, True], repeat=len(mid)):
            leq = [[x == y for y in range(n)] for x in range(n)]
            for x in range(n):
                leq[0][x] = True
                leq[x][n - 1] = True
            for (x, y), b in zip(mid, bits):
                leq[x][y] = b
            if not is_lattice_order(leq):
                continue
            if any(brute_isomorphism(leq, other) for other in found):
                continue
            found.append(leq)
        counts[n] = len(found)
    return counts


# -- relations ---------------------------------------------------------------


def order_pairs(leq):
    n = len(leq)
    return {(x, y) for x in range(n) for y in range(n) if leq[x][y]}


def compose(R, S):
    return {(x, z) for (x, y) in R for (y2, z) in S if y == y2}


def is_compatible(leq, R):
    for (a, b), (c, d) in product(R, R):
        if (lub(leq, a, c), lub(leq, b, d)) not in R:
            return False
        if (glb(leq, a, c), glb(leq, b, d)) not in R:
            return False
    return True


def brute_tolerances(leq):
    """Filter all symmetric reflexive relations by compatibility."""
    n = len(leq)
    off = list(combinations(range(n), 2))
    out = set()
    for bits in product([False, True], repeat=len(off)):
        R = {(x, x) for x in range(n)}
        for (x, y), b in zip(off, bits):
            if b:
                R |= {(x, y), (y, x)}
        if is_compatible(leq, R):
            out.add(frozenset(R))
    return out


def is_rewor_characterized(leq, R):
    n = len(leq)
    le = order_pairs(leq)
    return (
        all((x, x) in R for x in range(n))
        and is_compatible(leq, R)
        and compose(compose(le, R), le) == set(R)
    )


def brute_rewor(leq):
    """Filter all 2^(n^2 - n) reflexive relations by the characterization.

    The full set is scanned with numpy; a relation R with leq@R@leq == R
    and R reflexive must contain leq, which is a cheap vectorised test, and
    the survivors go through the exact pure-Python test.
    """
    n = len(leq)
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    masks = np.arange(1 << len(off), dtype=np.uint64)
    need = sum(1 << i for i, (x, y) in enumerate(off) if leq[x][y])
    survivors = masks[(masks & np.uint64(need)) == np.uint64(need)]
    out = set()
    for m in survivors.tolist():
        R = {(x, x) for x in range(n)} | {p for i, p in enumerate(off) if m >> i & 1}
        if is_rewor_characterized(leq, R):
            out.add(frozenset(R))
    return out


def is_weak_ordered_direct(leq, R):
    """Conditions (1)-(3) checked over every nonempty subset A."""
    n = len(leq)
    le = order_pairs(leq)
    if not compose(compose(le, R), le) <= set(R):
        return False
    for k in range(1, n + 1):
        for A in combinations(range(n), k):
            for y in range(n):
                if all((x, y) in R for x in A):
                    j = A[0]
                    for x in A[1:]:
                        j = lub(leq, j, x)
                    if (j, y) not in R:
                        return False
                if all((y, x) in R for x in A):
                    m = A[0]
                    for x in A[1:]:
                        m = glb(leq, m, x)
                    if (y, m) not in R:
                        return False
    return True


# -- contexts ----------------------------------------------------------------


def brute_concepts(rows):
    """All (extent, intent) pairs of a context given as incidence rows."""
    g = len(rows)
    m = len(rows[0]) if rows else 0
    out = set()
    for k in range(g + 1):
        for A in combinations(range(g), k):
            B = frozenset(a for a in range(m) if all(rows[x][a] for x in A))
            A2 = frozenset(x for x in range(g) if all(rows[x][a] for a in B))
            out.add((A2, B))
    return out


def maximal_cliques(n, R):
    """Maximal sets X with X x X contained in R, by subset scan."""
    cliques = [
        frozenset(X)
        for k in range(1, n + 1)
        for X in combinations(range(n), k)
        if all((x, y) in R for x in X for y in X)
    ]
    return {c for c in cliques if not any(c < d for d in cliques)}
