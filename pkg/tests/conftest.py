"""Shared fixtures: small named graphs, independent oracles, frozen counts.

The oracles here deliberately avoid the library's algorithms: splitness and
partitions are decided by scanning vertex subsets and checking pairs, so a
bug in the degree criterion or the mask tricks cannot confirm itself.

The frozen sequences were computed from the closed forms (bicolored sum,
b_n - n*b_{n-1}, the series chain) by hand at small n and then from the
exhaustive oracle; the all-graphs column is the classical unlabeled graph
count.
"""

import itertools
import os

import numpy as np
import pytest

from splitspecies.graphs import Graph, edge_bit, make_graph

TESTDATA = os.path.join(os.path.dirname(__file__), "..", "testdata")

# labeled counts by size 0..7
S_LABELED = [1, 1, 2, 8, 58, 632, 9654, 202484]
B_LABELED = [1, 0, 0, 0, 12, 240, 4980, 125160]
U_LABELED = [0, 1, 2, 8, 46, 392, 4674, 77324]
UAMB_LABELED = [0, 1, 0, 0, 0, 60, 1440, 34860]
UK_LABELED = [0, 0, 1, 4, 23, 166, 1617, 21232]
CS_LABELED = [1, 1, 3, 13, 87, 841, 11643, 227893]
BC_LABELED = [1, 2, 6, 26, 162, 1442, 18306, 330626]

# unlabeled counts by size 0..7
S_UNLABELED = [1, 1, 2, 4, 9, 21, 56, 164]
U_UNLABELED = [0, 1, 2, 4, 8, 17, 38, 94]
BC_UNLABELED = [1, 2, 4, 8, 17, 38, 94, 258]
ALL_UNLABELED = [1, 1, 2, 4, 11, 34, 156, 1044]


def path_graph(n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n):
    return make_graph(n, [])


def star_graph(leaves):
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# ---------------------------------------------------------------------------
# Independent subset-scan oracles
# ---------------------------------------------------------------------------

def oracle_partitions(g: Graph):
    """All clique/stable partitions, found by scanning subsets and pairs."""
    verts = range(g.n)
    found = []
    for r in range(g.n + 1):
        for kset in itertools.combinations(verts, r):
            sset = tuple(v for v in verts if v not in kset)
            if all(g.has_edge(a, b) for a, b in itertools.combinations(kset, 2)) and not any(
                g.has_edge(a, b) for a, b in itertools.combinations(sset, 2)
            ):
                found.append((frozenset(kset), frozenset(sset)))
    return found


def oracle_is_split(g: Graph) -> bool:
    return bool(oracle_partitions(g))


def oracle_split_flags(n: int) -> np.ndarray:
    """Splitness of every edge word on n vertices, by vectorized subset scan."""
    nbits = n * (n - 1) // 2
    words = np.arange(1 << nbits, dtype=np.int64)
    ok = np.zeros(1 << nbits, dtype=bool)
    for km in range(1 << n):
        in_k = [v for v in range(n) if km >> v & 1]
        out_k = [v for v in range(n) if not km >> v & 1]
        rk = sum(1 << edge_bit(a, b) for a, b in itertools.combinations(in_k, 2))
        rs = sum(1 << edge_bit(a, b) for a, b in itertools.combinations(out_k, 2))
        ok |= ((words & rk) == rk) & ((words & rs) == 0)
    return ok


def oracle_omega(g: Graph) -> int:
    best = 0
    for r in range(g.n, -1, -1):
        for kset in itertools.combinations(range(g.n), r):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(kset, 2)):
                return r
    return best


def oracle_alpha(g: Graph) -> int:
    for r in range(g.n, -1, -1):
        for sset in itertools.combinations(range(g.n), r):
            if not any(g.has_edge(a, b) for a, b in itertools.combinations(sset, 2)):
                return r
    return 0


@pytest.fixture(scope="session")
def census7():
    """The cached exhaustive censuses for n = 0..7 (shared across modules)."""
    from splitspecies.enumeration import class_census

    return [class_census(n) for n in range(8)]
