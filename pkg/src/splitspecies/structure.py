"""Clique/stable-set partitions, swing vertices, and the four-way classification.

A split graph falls into exactly one of four classes, read off from its set A
of swing vertices (vertices that can change sides between two partitions):

* balanced     -- A is empty; the partition is unique;
* ambiguous    -- A is a single vertex;
* k-canonical  -- A is a clique of size >= 2;
* s-canonical  -- A is a stable set of size >= 2.

Swing vertices are computed definitionally, from the full list of partitions;
at n <= 16 the exhaustive sweep over vertex subsets is cheap and serves as
ground truth for everything else in the package.

Conventions at the small end: the empty graph is balanced (its unique
partition is empty/empty) and the one-vertex graph is ambiguous (its single
vertex swings between the two partitions ({v}, {}) and ({}, {v})).  These
choices make the generating-function identities hold from order zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotAPartition, NotSMax, NotSplit, TooLarge
from .graphs import Graph, bits_of, is_split, mask_of

KIND_EMPTY = "empty"
KIND_SINGLETON = "singleton"
KIND_CLIQUE = "clique"
KIND_STABLE = "stable"


class SplitClass(enum.Enum):
    BALANCED = "balanced"
    AMBIGUOUS = "ambiguous"
    K_CANONICAL = "k-canonical"
    S_CANONICAL = "s-canonical"


@dataclass(frozen=True)
class KSPartition:
    """A partition of the vertices into a clique K and a stable set S."""

    k: tuple[int, ...]
    s: tuple[int, ...]

    def k_mask(self) -> int:
        return mask_of(self.k)

    def s_mask(self) -> int:
        return mask_of(self.s)

    def to_json(self) -> dict:
        return {"k": list(self.k), "s": list(self.s)}


@dataclass(frozen=True)
class SwingReport:
    """Swing set A plus the fixed sides Y (always-clique) and Z (always-stable).

    Every swing vertex is adjacent to all of Y and none of Z, and A, Y, Z
    partition the vertex set.  ``kind`` says what A induces: "clique" or
    "stable" for |A| >= 2, "singleton" for |A| = 1, "empty" for |A| = 0.
    """

    swings: tuple[int, ...]
    kind: str
    y: tuple[int, ...]
    z: tuple[int, ...]

    def swing_mask(self) -> int:
        return mask_of(self.swings)

    def to_json(self) -> dict:
        return {"swings": list(self.swings), "kind": self.kind,
                "y": list(self.y), "z": list(self.z)}


def is_clique(g: Graph, mask: int) -> bool:
    t = mask
    while t:
        b = t & -t
        v = b.bit_length() - 1
        t ^= b
        if g.rows[v] & mask != mask ^ (1 << v):
            return False
    return True


def is_stable(g: Graph, mask: int) -> bool:
    t = mask
    while t:
        b = t & -t
        v = b.bit_length() - 1
        t ^= b
        if g.rows[v] & mask:
            return False
    return True


def ks_partitions(g: Graph) -> list[KSPartition]:
    """All clique/stable-set partitions of g, ordered by ascending K bit word.

    Empty iff g is not split.
    """
    if g.n > 16:
        raise TooLarge("partition enumeration requires n <= 16")
    full = g.vertex_mask()
    out = []
    for km in range(full + 1):
        sm = full ^ km
        if is_clique(g, km) and is_stable(g, sm):
            out.append(KSPartition(bits_of(km), bits_of(sm)))
    return out


def clique_number(g: Graph) -> int:
    """omega(g), by exhaustive search over vertex subsets."""
    if g.n > 16:
        raise TooLarge("clique number requires n <= 16")
    best = 0
    for mask in range(1 << g.n):
        c = mask.bit_count()
        if c > best and is_clique(g, mask):
            best = c
    return best


def independence_number(g: Graph) -> int:
    """alpha(g) = omega of the complement."""
    from .graphs import complement

    return clique_number(complement(g))


def swing_report(g: Graph) -> SwingReport:
    """Identify the swing vertices of a split graph, definitionally.

    A vertex v swings iff some partition can be turned into another one by
    moving v alone across the divide.  Requires is_split(g).
    """
    parts = _partitions_checked(g)
    full = g.vertex_mask()
    swings = 0
    always_k = full
    always_s = full
    for p in parts:
        km, sm = p.k_mask(), p.s_mask()
        always_k &= km
        always_s &= sm
        t = km
        while t:  # movable K -> S: no neighbor inside S
            b = t & -t
            v = b.bit_length() - 1
            t ^= b
            if g.rows[v] & sm == 0:
                swings |= b
        t = sm
        while t:  # movable S -> K: adjacent to all of K
            b = t & -t
            v = b.bit_length() - 1
            t ^= b
            if g.rows[v] & km == km:
                swings |= b
    y = always_k & ~swings
    z = always_s & ~swings
    count = swings.bit_count()
    if count == 0:
        kind = KIND_EMPTY
    elif count == 1:
        kind = KIND_SINGLETON
    elif is_clique(g, swings):
        kind = KIND_CLIQUE
    else:
        assert is_stable(g, swings), "swing set neither clique nor stable"
        kind = KIND_STABLE
    return SwingReport(bits_of(swings), kind, bits_of(y), bits_of(z))


def classify(g: Graph) -> SplitClass:
    """Which of the four structural classes the split graph g belongs to."""
    return classify_report(swing_report(g))


def classify_report(rep: SwingReport) -> SplitClass:
    return {
        KIND_EMPTY: SplitClass.BALANCED,
        KIND_SINGLETON: SplitClass.AMBIGUOUS,
        KIND_CLIQUE: SplitClass.K_CANONICAL,
        KIND_STABLE: SplitClass.S_CANONICAL,
    }[rep.kind]


def s_max_partitions(g: Graph) -> list[KSPartition]:
    """All partitions whose stable side has maximum size alpha(g)."""
    parts = _partitions_checked(g)
    alpha = max(len(p.s) for p in parts)
    return [p for p in parts if len(p.s) == alpha]


def k_max_partitions(g: Graph) -> list[KSPartition]:
    """All partitions whose clique side has maximum size omega(g)."""
    parts = _partitions_checked(g)
    omega = max(len(p.k) for p in parts)
    return [p for p in parts if len(p.k) == omega]


def canonical_partition(g: Graph) -> KSPartition | None:
    """The distinguished partition, or None for an ambiguous graph.

    K-canonical: the unique K-max partition.  S-canonical: the unique S-max
    partition.  Balanced: the unique partition.  Ambiguous: None.
    """
    cls = classify(g)
    if cls is SplitClass.AMBIGUOUS:
        return None
    if cls is SplitClass.K_CANONICAL:
        (part,) = k_max_partitions(g)
    elif cls is SplitClass.S_CANONICAL:
        (part,) = s_max_partitions(g)
    else:
        (part,) = ks_partitions(g)
    return part


def _partitions_checked(g: Graph) -> list[KSPartition]:
    parts = ks_partitions(g)
    if not parts:
        raise NotSplit("graph has no clique/stable-set partition")
    return parts


# ---------------------------------------------------------------------------
# Colored split graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ColoredSplitGraph:
    """A split graph with a chosen S-max partition: clique green, stable red.

    The constructor validates both that (green, red) is a clique/stable-set
    partition and that red attains the independence number, so an instance is
    a valid colored structure by construction.
    """

    graph: Graph
    green: tuple[int, ...]
    red: tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        gm, rm = mask_of(self.green), mask_of(self.red)
        if gm & rm or (gm | rm) != g.vertex_mask() \
                or self.green != bits_of(gm) or self.red != bits_of(rm):
            raise NotAPartition("green and red must partition the vertex set (sorted, disjoint)")
        if not is_clique(g, gm) or not is_stable(g, rm):
            raise NotAPartition("green must induce a clique and red a stable set")
        if len(self.red) != independence_number(g):
            raise NotSMax("the red side does not have maximum size")

    @property
    def n(self) -> int:
        return self.graph.n

    def green_mask(self) -> int:
        return mask_of(self.green)

    def red_mask(self) -> int:
        return mask_of(self.red)

    def partition(self) -> KSPartition:
        return KSPartition(self.green, self.red)

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "green": list(self.green),
            "red": list(self.red),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ColoredSplitGraph":
        from .graphs import make_graph

        g = make_graph(data["n"], [tuple(e) for e in data["edges"]])
        return cls(g, tuple(sorted(data["green"])), tuple(sorted(data["red"])))


def color(g: Graph, p: KSPartition) -> ColoredSplitGraph:
    """Turn a graph plus an S-max partition into a colored split graph.

    Raises NotAPartition if p is not a partition of g at all, NotSMax if it
    is a partition but its stable side is not of maximum size.
    """
    gm, sm = p.k_mask(), p.s_mask()
    if gm & sm or (gm | sm) != g.vertex_mask():
        raise NotAPartition("K and S must partition the vertex set")
    if not is_clique(g, gm) or not is_stable(g, sm):
        raise NotAPartition("K must induce a clique and S a stable set")
    return ColoredSplitGraph(g, p.k, p.s)


def all_colorings(g: Graph) -> list[ColoredSplitGraph]:
    """Every colored split graph over g: one per S-max partition."""
    return [ColoredSplitGraph(g, p.k, p.s) for p in s_max_partitions(g)]
