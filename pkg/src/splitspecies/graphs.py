"""Labeled simple graphs on vertices 0..n-1, stored as adjacency bitmask rows.

A graph on n <= 16 vertices keeps one machine word per vertex: bit j of
``rows[i]`` is set iff ij is an edge.  Every operation here is a pure function
on immutable values, so graphs are hashable, comparable, and safe to share
between threads.

The module also defines the dense "edge word" encoding used by the
enumeration machinery: edge (i, j) with i < j maps to bit ``j*(j-1)//2 + i``,
so the pairs are ordered (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...  This
ordering nests: a graph extended by an isolated vertex keeps its word.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    LengthMismatch,
    MonochromeEdge,
    NotAPartition,
    OutOfRange,
    SelfLoop,
    TooLarge,
)

MAX_VERTICES = 16
CANON_MAX_VERTICES = 8


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus adjacency bitmask rows."""

    n: int
    rows: tuple[int, ...]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) pairs with i < j, in edge-word bit order."""
        return [(i, j) for (i, j) in edge_pairs(self.n) if self.has_edge(i, j)]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_word(self) -> int:
        """Dense encoding of the edge set as a single integer."""
        word = 0
        for e, (i, j) in enumerate(edge_pairs(self.n)):
            if self.rows[i] >> j & 1:
                word |= 1 << e
        return word

    @classmethod
    def from_edge_word(cls, n: int, word: int) -> "Graph":
        rows = [0] * n
        for e, (i, j) in enumerate(edge_pairs(n)):
            if word >> e & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls(n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs (i, j), i < j, in edge-word bit order."""
    return [(i, j) for j in range(n) for i in range(j)]


def edge_bit(i: int, j: int) -> int:
    """Bit index of the pair {i, j} in the edge-word encoding."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, validating labels.

    Raises TooLarge for n > 16, OutOfRange for an endpoint >= n or < 0,
    SelfLoop for an edge (v, v).  Duplicate edges are tolerated.
    """
    if n < 0:
        raise OutOfRange(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise TooLarge(f"at most {MAX_VERTICES} vertices supported, got {n}")
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise OutOfRange(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def relabel(g: Graph, p: Sequence[int]) -> Graph:
    """Apply permutation p: edge (i, j) of g becomes edge (p[i], p[j])."""
    if len(p) != g.n:
        raise LengthMismatch(f"permutation length {len(p)} != vertex count {g.n}")
    if sorted(p) != list(range(g.n)):
        raise ValueError(f"not a permutation of 0..{g.n - 1}: {list(p)}")
    rows = [0] * g.n
    for v in range(g.n):
        r = g.rows[v]
        nr = 0
        while r:
            b = r & -r
            nr |= 1 << p[b.bit_length() - 1]
            r ^= b
        rows[p[v]] = nr
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    """Graph whose edges are exactly the non-edges of g."""
    full = g.vertex_mask()
    return Graph(g.n, tuple((~g.rows[v] & full & ~(1 << v)) for v in range(g.n)))


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees, sorted non-increasing."""
    return sorted((r.bit_count() for r in g.rows), reverse=True)


def is_split(g: Graph) -> bool:
    """Degree-sequence split test (Hammer-Simeone).

    With degrees d_1 >= ... >= d_n and m = max{i : d_i >= i - 1}, the graph
    admits a clique/stable-set partition iff

        sum_{i<=m} d_i  =  m(m-1) + sum_{i>m} d_i.

    The empty graph counts as split (K = S = empty).
    """
    degs = degree_sequence(g)
    m = 0
    for i, d in enumerate(degs):
        if d >= i:
            m = i + 1
    top = sum(degs[:m])
    return top == m * (m - 1) + (sum(degs) - top)


# ---------------------------------------------------------------------------
# Canonical codes
# ---------------------------------------------------------------------------

def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant key: minimal edge word over all relabelings.

    Two graphs get equal codes iff they are isomorphic.  Exhaustive over all
    n! permutations, hence restricted to n <= 8.
    """
    if g.n > CANON_MAX_VERTICES:
        raise TooLarge(f"canonical codes require n <= {CANON_MAX_VERTICES}")
    best = min(_word_images(g))
    return b"G" + bytes([g.n]) + best.to_bytes(4, "big")


def canonical_code_bicolored(b: "BicoloredGraph") -> bytes:
    """Color-preserving isomorphism key for a bicolored graph.

    Minimizes (green mask, edge word) jointly over all relabelings; the green
    and red classes are never interchanged, so a single green vertex and a
    single red vertex get distinct codes.
    """
    g = b.graph
    if g.n > CANON_MAX_VERTICES:
        raise TooLarge(f"canonical codes require n <= {CANON_MAX_VERTICES}")
    nbits = g.n * (g.n - 1) // 2
    green_mask = mask_of(b.green)
    best = None
    for p in itertools.permutations(range(g.n)):
        word = _permuted_word(g, p)
        gm = 0
        for v in b.green:
            gm |= 1 << p[v]
        key = (gm << nbits) | word
        if best is None or key < best:
            best = key
    assert best is not None or g.n == 0
    if g.n == 0:
        best = 0
    return b"B" + bytes([g.n]) + best.to_bytes(5, "big")


def _permuted_word(g: Graph, p: Sequence[int]) -> int:
    word = 0
    for i, j in edge_pairs(g.n):
        if g.rows[i] >> j & 1:
            word |= 1 << edge_bit(p[i], p[j])
    return word


def _word_images(g: Graph):
    if g.n == 0:
        yield 0
        return
    for p in itertools.permutations(range(g.n)):
        yield _permuted_word(g, p)


# ---------------------------------------------------------------------------
# Bicolored graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BicoloredGraph:
    """Graph plus a green/red vertex coloring in which every edge is bichromatic.

    The two colors are an *ordered* pair: swapping them generally yields a
    different structure, and the canonical code keeps them apart.
    """

    graph: Graph
    green: tuple[int, ...]
    red: tuple[int, ...]

    def __post_init__(self):
        full = self.graph.vertex_mask()
        gm, rm = mask_of(self.green), mask_of(self.red)
        if gm & rm or (gm | rm) != full or self.green != bits_of(gm) or self.red != bits_of(rm):
            raise NotAPartition("green and red must partition the vertex set (sorted, disjoint)")
        for v in self.green:
            if self.graph.rows[v] & gm:
                raise MonochromeEdge(f"edge within the green class at vertex {v}")
        for v in self.red:
            if self.graph.rows[v] & rm:
                raise MonochromeEdge(f"edge within the red class at vertex {v}")

    def green_mask(self) -> int:
        return mask_of(self.green)

    def red_mask(self) -> int:
        return mask_of(self.red)

    def isolated_greens(self) -> tuple[int, ...]:
        return tuple(v for v in self.green if self.graph.rows[v] == 0)

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "green": list(self.green),
            "red": list(self.red),
        }

    @classmethod
    def from_json(cls, data: dict) -> "BicoloredGraph":
        g = make_graph(data["n"], [tuple(e) for e in data["edges"]])
        return cls(g, tuple(sorted(data["green"])), tuple(sorted(data["red"])))


def make_bicolored(n: int, edges: Iterable[tuple[int, int]], green: Iterable[int]) -> BicoloredGraph:
    g = make_graph(n, edges)
    gm = mask_of(green)
    return BicoloredGraph(g, bits_of(gm), bits_of(g.vertex_mask() ^ gm))


# ---------------------------------------------------------------------------
# Mask/tuple helpers and serialization
# ---------------------------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(data: dict) -> Graph:
    return make_graph(data["n"], [tuple(e) for e in data["edges"]])


def parse_graph_text(text: str) -> Graph:
    """Parse the fixture format: first line n, then one 'i j' pair per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph file")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        i, j = ln.split()
        edges.append((int(i), int(j)))
    return make_graph(n, edges)


def format_graph_text(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{i} {j}" for i, j in g.edges()]) + "\n"


def load_graph(path: str) -> Graph:
    """Load a graph from a .json file or the plain-text fixture format."""
    with open(path) as f:
        text = f.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_graph_text(text)
