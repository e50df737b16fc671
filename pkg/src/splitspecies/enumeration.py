"""Exhaustive enumeration of every graph class, labeled and unlabeled.

This module is the ground-truth oracle: labeled structures are generated by
sweeping all edge words (all 2^C(n,2) graphs, or all coloring/edge-set pairs
for bicolored classes) and filtering; unlabeled structures are counted by
collapsing the labeled sweep into orbits under vertex relabeling.

The sweeps are vectorized with numpy, but the quantities they compute are
defined purely combinatorially: a graph is split iff some vertex subset is a
clique with stable complement (tested via the degree criterion, which the
test suite validates against the subset definition), and two structures are
identified in the unlabeled count iff some permutation carries one to the
other.

Orbit counting works by scanning the sorted array of structure keys and, at
each not-yet-seen key, generating the whole orbit with precomputed
permutation tables and flagging its members.  Each orbit is counted once, at
its minimal key, which doubles as the canonical code.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import NotSplit, TooLarge
from .graphs import BicoloredGraph, Graph, bits_of, edge_bit, edge_pairs
from .structure import ColoredSplitGraph


class ClassTag(enum.Enum):
    ALL_GRAPHS = "all-graphs"
    SPLIT = "split"
    BALANCED = "balanced"
    UNBALANCED = "unbalanced"
    K_CANONICAL = "k-canonical"
    S_CANONICAL = "s-canonical"
    AMBIGUOUS = "ambiguous"
    COLORED_SPLIT = "colored-split"
    BICOLORED = "bicolored"
    BICOLORED_NO_ISOLATED_GREEN = "bicolored-no-isolated-green"


_GRAPH_TAGS = (ClassTag.ALL_GRAPHS, ClassTag.SPLIT)
_CLASSIFIED_TAGS = (ClassTag.BALANCED, ClassTag.UNBALANCED, ClassTag.K_CANONICAL,
                    ClassTag.S_CANONICAL, ClassTag.AMBIGUOUS)

# class codes used in the packed per-graph arrays
_BAL, _AMB, _KCAN, _SCAN = 0, 1, 2, 3
_CLS_OF_TAG = {ClassTag.BALANCED: _BAL, ClassTag.AMBIGUOUS: _AMB,
               ClassTag.K_CANONICAL: _KCAN, ClassTag.S_CANONICAL: _SCAN}


def _check_limit(n: int, tag: ClassTag, unlabeled: bool = False):
    if n < 0:
        raise ValueError("n must be non-negative")
    if unlabeled:
        limit = 8 if tag is ClassTag.SPLIT else 7
    elif tag in _GRAPH_TAGS:
        limit = 8
    else:
        limit = 7
    if n > limit:
        raise TooLarge(f"{tag.value} supports n <= {limit} here, got {n}")


# ---------------------------------------------------------------------------
# Vectorized split test and per-graph structural data
# ---------------------------------------------------------------------------

def _split_flags_chunk(n: int, start: int, stop: int) -> np.ndarray:
    """Degree-criterion split flags for edge words in [start, stop)."""
    pairs = edge_pairs(n)
    words = np.arange(start, stop, dtype=np.int64)
    deg = np.zeros((len(words), max(n, 1)), dtype=np.uint8)
    for e, (i, j) in enumerate(pairs):
        bit = ((words >> e) & 1).astype(np.uint8)
        deg[:, i] += bit
        deg[:, j] += bit
    dsort = np.sort(deg, axis=1)[:, ::-1].astype(np.int64)
    cond = dsort >= np.arange(max(n, 1), dtype=np.int64)
    m = cond.sum(axis=1)
    cum = np.cumsum(dsort, axis=1)
    total = cum[:, -1]
    rows_idx = np.arange(len(words))
    sum_top = np.where(m > 0, cum[rows_idx, np.maximum(m - 1, 0)], 0)
    return sum_top == m * (m - 1) + (total - sum_top)


@lru_cache(maxsize=16)
def _split_words(n: int) -> np.ndarray:
    """Sorted array of the edge words of all split graphs on n vertices."""
    nbits = n * (n - 1) // 2
    if n == 0:
        return np.array([0], dtype=np.int64)
    chunks = []
    step = 1 << min(nbits, 22)
    for start in range(0, 1 << nbits, step):
        flags = _split_flags_chunk(n, start, start + step)
        chunks.append(np.flatnonzero(flags).astype(np.int64) + start)
    return np.concatenate(chunks)


def _rows_of_word(n: int, word: int) -> list[int]:
    rows = [0] * n
    e = 0
    for j in range(n):
        for i in range(j):
            if word >> e & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            e += 1
    return rows


def _mask_clique(rows, mask: int) -> bool:
    t = mask
    while t:
        b = t & -t
        if rows[b.bit_length() - 1] & mask != mask ^ b:
            return False
        t ^= b
    return True


def _mask_stable(rows, mask: int) -> bool:
    t = mask
    while t:
        b = t & -t
        if rows[b.bit_length() - 1] & mask:
            return False
        t ^= b
    return True


def _kmax_partition(rows, n: int) -> tuple[int, int]:
    """A clique/stable partition with maximum clique side, as (K, S) masks.

    Tries the degree-ordered prefix first and verifies it; falls back to an
    exhaustive subset scan if the verification ever fails (degree ties).
    """
    full = (1 << n) - 1
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    m = 0
    for i, v in enumerate(order):
        if rows[v].bit_count() >= i:
            m = i + 1
    km = 0
    for v in order[:m]:
        km |= 1 << v
    if _mask_clique(rows, km) and _mask_stable(rows, full ^ km):
        return km, full ^ km
    best = -1
    best_km = 0
    for cand in range(full + 1):
        if _mask_clique(rows, cand) and _mask_stable(rows, full ^ cand):
            if cand.bit_count() > best:
                best = cand.bit_count()
                best_km = cand
    if best < 0:
        raise NotSplit("no clique/stable-set partition")
    return best_km, full ^ best_km


def _classify_masks(rows, n: int) -> tuple[int, int, int]:
    """(class code, swing mask, K-max mask) for a split graph given as rows.

    Reads the class off one K-max partition (K, S): the vertices of K with no
    neighbor in S are the swings visible there.  Two or more of them form the
    swing clique (k-canonical); none means balanced; exactly one means the
    graph is ambiguous or s-canonical, decided by how many stable-side
    vertices can enter the clique of the derived S-max partition.
    """
    km, sm = _kmax_partition(rows, n)
    movable = 0
    t = km
    while t:
        b = t & -t
        if rows[b.bit_length() - 1] & sm == 0:
            movable |= b
        t ^= b
    if movable == 0:
        return _BAL, 0, km
    if movable.bit_count() >= 2:
        return _KCAN, movable, km
    k2 = km ^ movable
    s2 = sm | movable
    entering = 0
    t = s2
    while t:
        b = t & -t
        if rows[b.bit_length() - 1] & k2 == k2:
            entering |= b
        t ^= b
    if entering.bit_count() >= 2:
        return _SCAN, entering, km
    return _AMB, movable, km


@dataclass(frozen=True)
class _SplitData:
    """Per-graph structural arrays over the sorted split words of size n."""

    words: np.ndarray    # int64, ascending
    classes: np.ndarray  # uint8, class codes
    swings: np.ndarray   # int32, swing-set masks
    kmax: np.ndarray     # int32, K-max partition clique masks


@lru_cache(maxsize=16)
def _split_data(n: int) -> _SplitData:
    words = _split_words(n)
    classes = np.zeros(len(words), dtype=np.uint8)
    swings = np.zeros(len(words), dtype=np.int32)
    kmax = np.zeros(len(words), dtype=np.int32)
    for q in range(len(words)):
        rows = _rows_of_word(n, int(words[q]))
        cls, sw, km = _classify_masks(rows, n)
        classes[q] = cls
        swings[q] = sw
        kmax[q] = km
    return _SplitData(words, classes, swings, kmax)


# ---------------------------------------------------------------------------
# Permutation orbit machinery
# ---------------------------------------------------------------------------

@lru_cache(maxsize=16)
def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-permutation bit images: edge_bits[q, e] and vert_bits[q, v].

    Entry values are already shifted (1 << target), so an orbit is assembled
    by OR-ing columns.
    """
    perms = list(itertools.permutations(range(n)))
    nbits = n * (n - 1) // 2
    edge_tab = np.zeros((len(perms), nbits), dtype=np.int64)
    vert_tab = np.zeros((len(perms), max(n, 1)), dtype=np.int64)
    for q, p in enumerate(perms):
        for e, (i, j) in enumerate(edge_pairs(n)):
            edge_tab[q, e] = 1 << edge_bit(p[i], p[j])
        for v in range(n):
            vert_tab[q, v] = 1 << p[v]
    return edge_tab, vert_tab


def _word_orbit(word: int, edge_bits: np.ndarray) -> np.ndarray:
    orbit = np.zeros(edge_bits.shape[0], dtype=np.int64)
    e = 0
    while word:
        if word & 1:
            orbit |= edge_bits[:, e]
        word >>= 1
        e += 1
    return orbit


def _mask_orbit(mask: int, vert_bits: np.ndarray) -> np.ndarray:
    orbit = np.zeros(vert_bits.shape[0], dtype=np.int64)
    v = 0
    while mask:
        if mask & 1:
            orbit |= vert_bits[:, v]
        mask >>= 1
        v += 1
    return orbit


def _orbit_reps(keys: np.ndarray, orbit_of) -> list[int]:
    """Indices of one representative per orbit in a sorted key array.

    ``orbit_of(key)`` must return the full orbit of a key as an array whose
    members all occur in ``keys``.
    """
    flags = np.zeros(len(keys), dtype=bool)
    reps = []
    for pos in range(len(keys)):
        if flags[pos]:
            continue
        reps.append(pos)
        orbit = np.unique(orbit_of(int(keys[pos])))
        flags[np.searchsorted(keys, orbit)] = True
    return reps


# ---------------------------------------------------------------------------
# Bicolored sweeps
# ---------------------------------------------------------------------------

def _bipartite_layout(n: int, green_mask: int):
    """Slot-to-edge-bit table for the cross edges of one green mask."""
    greens = bits_of(green_mask)
    reds = bits_of(((1 << n) - 1) ^ green_mask)
    slots = []
    for g in greens:
        for r in reds:
            slots.append(1 << edge_bit(g, r))
    return greens, reds, slots


def _bicolored_keys(n: int, no_isolated_green: bool) -> np.ndarray:
    """Sorted keys (edge word << n | green mask) of all bicolored structures."""
    out = []
    for green in range(1 << max(n, 0)):
        greens, reds, slots = _bipartite_layout(n, green)
        k, r = len(greens), len(reds)
        bip = np.arange(1 << (k * r), dtype=np.int64)
        words = np.zeros(len(bip), dtype=np.int64)
        for s, bitval in enumerate(slots):
            words |= ((bip >> s) & 1) * bitval
        if no_isolated_green and k:
            ok = np.ones(len(bip), dtype=bool)
            row = (1 << r) - 1
            for i in range(k):
                ok &= (bip & (row << (i * r))) != 0
            words = words[ok]
        out.append((words << n) | green)
    keys = np.concatenate(out) if out else np.array([], dtype=np.int64)
    keys.sort()
    return keys


def _colored_split_keys(n: int) -> np.ndarray:
    """Sorted keys (edge word << n | green mask) of all colored split graphs.

    One key per (split graph, S-max partition) pair, derived from the stored
    K-max partition: drop one swing vertex from the clique side (k-canonical
    graphs have one choice per swing vertex; everything else drops its single
    movable vertex or nothing).
    """
    data = _split_data(n)
    keys = []
    for q in range(len(data.words)):
        word = int(data.words[q]) << n
        cls = int(data.classes[q])
        km = int(data.kmax[q])
        sw = int(data.swings[q])
        if cls == _KCAN:
            t = sw
            while t:
                b = t & -t
                keys.append(word | (km ^ b))
                t ^= b
        elif cls == _BAL:
            keys.append(word | km)
        else:
            # ambiguous or s-canonical: one movable vertex sits in the clique side
            keys.append(word | (km & ~sw))
    arr = np.array(keys, dtype=np.int64)
    arr.sort()
    return arr


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

_CENSUS_ORDER = [
    ClassTag.ALL_GRAPHS, ClassTag.SPLIT, ClassTag.BALANCED, ClassTag.UNBALANCED,
    ClassTag.K_CANONICAL, ClassTag.S_CANONICAL, ClassTag.AMBIGUOUS,
    ClassTag.COLORED_SPLIT, ClassTag.BICOLORED, ClassTag.BICOLORED_NO_ISOLATED_GREEN,
]


@dataclass(frozen=True)
class Census:
    """Labeled and unlabeled counts of every class at one size."""

    n: int
    labeled: dict
    unlabeled: dict

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labeled": {t.value: self.labeled[t] for t in _CENSUS_ORDER},
            "unlabeled": {t.value: self.unlabeled[t] for t in _CENSUS_ORDER},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Census":
        return cls(
            data["n"],
            {ClassTag(k): v for k, v in data["labeled"].items()},
            {ClassTag(k): v for k, v in data["unlabeled"].items()},
        )

    def to_csv(self) -> str:
        lines = ["n,tag,labeled,unlabeled"]
        for t in _CENSUS_ORDER:
            lines.append(f"{self.n},{t.value},{self.labeled[t]},{self.unlabeled[t]}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=16)
def class_census(n: int) -> Census:
    """One pass over size n computing, and cross-asserting, every class count."""
    if n > 7:
        raise TooLarge("the full census supports n <= 7")
    data = _split_data(n)
    edge_bits, vert_bits = _perm_tables(n)

    labeled = {}
    unlabeled = {}
    nclass = np.bincount(data.classes, minlength=4)
    labeled[ClassTag.SPLIT] = len(data.words)
    labeled[ClassTag.BALANCED] = int(nclass[_BAL])
    labeled[ClassTag.AMBIGUOUS] = int(nclass[_AMB])
    labeled[ClassTag.K_CANONICAL] = int(nclass[_KCAN])
    labeled[ClassTag.S_CANONICAL] = int(nclass[_SCAN])
    labeled[ClassTag.UNBALANCED] = len(data.words) - int(nclass[_BAL])
    labeled[ClassTag.ALL_GRAPHS] = 1 << (n * (n - 1) // 2)

    colored_keys = _colored_split_keys(n)
    labeled[ClassTag.COLORED_SPLIT] = len(colored_keys)
    bic_keys = _bicolored_keys(n, no_isolated_green=False)
    bic_star_keys = _bicolored_keys(n, no_isolated_green=True)
    labeled[ClassTag.BICOLORED] = len(bic_keys)
    labeled[ClassTag.BICOLORED_NO_ISOLATED_GREEN] = len(bic_star_keys)

    # unlabeled graph classes: one orbit sweep over all words, one over split
    def word_orbit(w):
        return _word_orbit(w, edge_bits)

    all_words = np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)
    unlabeled[ClassTag.ALL_GRAPHS] = len(_orbit_reps(all_words, word_orbit))

    split_reps = _orbit_reps(data.words, word_orbit)
    cls_counts = [0, 0, 0, 0]
    for pos in split_reps:
        cls_counts[int(data.classes[pos])] += 1
    unlabeled[ClassTag.SPLIT] = len(split_reps)
    unlabeled[ClassTag.BALANCED] = cls_counts[_BAL]
    unlabeled[ClassTag.AMBIGUOUS] = cls_counts[_AMB]
    unlabeled[ClassTag.K_CANONICAL] = cls_counts[_KCAN]
    unlabeled[ClassTag.S_CANONICAL] = cls_counts[_SCAN]
    unlabeled[ClassTag.UNBALANCED] = len(split_reps) - cls_counts[_BAL]

    def key_orbit(key):
        return (_word_orbit(key >> n, edge_bits) << n) | _mask_orbit(key & ((1 << n) - 1), vert_bits)

    unlabeled[ClassTag.COLORED_SPLIT] = len(_orbit_reps(colored_keys, key_orbit))
    unlabeled[ClassTag.BICOLORED] = len(_orbit_reps(bic_keys, key_orbit))
    unlabeled[ClassTag.BICOLORED_NO_ISOLATED_GREEN] = len(_orbit_reps(bic_star_keys, key_orbit))

    census = Census(n, labeled, unlabeled)
    _assert_census_identities(census)
    return census


def _assert_census_identities(c: Census):
    """Internal consistency of the one-pass census, checked on every build."""
    for counts in (c.labeled, c.unlabeled):
        assert counts[ClassTag.SPLIT] == counts[ClassTag.BALANCED] + counts[ClassTag.UNBALANCED]
        assert counts[ClassTag.UNBALANCED] == (
            counts[ClassTag.K_CANONICAL] + counts[ClassTag.S_CANONICAL] + counts[ClassTag.AMBIGUOUS]
        )
        assert counts[ClassTag.K_CANONICAL] == counts[ClassTag.S_CANONICAL]
    # colored split graphs in excess of split graphs all come from k-canonical ones:
    # cS - cUK = S - UK
    lab = c.labeled
    cuk = colored_kcanonical_labeled(c.n)
    assert lab[ClassTag.COLORED_SPLIT] - cuk == lab[ClassTag.SPLIT] - lab[ClassTag.K_CANONICAL]


def colored_kcanonical_labeled(n: int) -> int:
    """Number of labeled colored split graphs whose underlying graph is k-canonical."""
    _check_limit(n, ClassTag.COLORED_SPLIT)
    data = _split_data(n)
    total = 0
    for q in range(len(data.words)):
        if int(data.classes[q]) == _KCAN:
            total += int(data.swings[q]).bit_count()
    return total


# ---------------------------------------------------------------------------
# Public enumeration API
# ---------------------------------------------------------------------------

def enumerate_labeled(n: int, tag: ClassTag) -> Iterator:
    """Yield each labeled structure of the class exactly once, in a fixed order.

    Graphs come in ascending edge-word order; colored split graphs per graph
    in ascending green-mask order; bicolored structures in ascending
    (green mask, cross-edge word) order.
    """
    _check_limit(n, tag)
    if tag is ClassTag.ALL_GRAPHS:
        for word in range(1 << (n * (n - 1) // 2)):
            yield Graph.from_edge_word(n, word)
    elif tag is ClassTag.SPLIT:
        for word in _split_words(n):
            yield Graph.from_edge_word(n, int(word))
    elif tag in _CLASSIFIED_TAGS:
        data = _split_data(n)
        if tag is ClassTag.UNBALANCED:
            wanted = {_AMB, _KCAN, _SCAN}
        else:
            wanted = {_CLS_OF_TAG[tag]}
        for q in range(len(data.words)):
            if int(data.classes[q]) in wanted:
                yield Graph.from_edge_word(n, int(data.words[q]))
    elif tag is ClassTag.COLORED_SPLIT:
        for key in _colored_split_keys(n):
            key = int(key)
            g = Graph.from_edge_word(n, key >> n)
            green = key & ((1 << n) - 1)
            yield ColoredSplitGraph(g, bits_of(green), bits_of(g.vertex_mask() ^ green))
    else:
        star = tag is ClassTag.BICOLORED_NO_ISOLATED_GREEN
        full = (1 << n) - 1
        for green in range(full + 1):
            greens, reds, slots = _bipartite_layout(n, green)
            k, r = len(greens), len(reds)
            row = (1 << r) - 1
            for bip in range(1 << (k * r)):
                if star and any((bip >> (i * r)) & row == 0 for i in range(k)):
                    continue
                word = 0
                s = 0
                rest = bip
                while rest:
                    if rest & 1:
                        word |= slots[s]
                    rest >>= 1
                    s += 1
                g = Graph.from_edge_word(n, word)
                yield BicoloredGraph(g, bits_of(green), bits_of(full ^ green))


def count_labeled(n: int, tag: ClassTag) -> int:
    """Number of labeled structures, by enumeration (vectorized where large)."""
    if tag is ClassTag.ALL_GRAPHS:
        if n > 8:
            raise TooLarge("all-graphs counting supports n <= 8")
        return 1 << (n * (n - 1) // 2)
    if tag is ClassTag.SPLIT:
        _check_limit(n, tag)
        return len(_split_words(n))
    _check_limit(n, tag)
    census = class_census(n)
    return census.labeled[tag]


def count_unlabeled(n: int, tag: ClassTag) -> int:
    """Number of isomorphism classes (color-preserving for colored classes)."""
    _check_limit(n, tag, unlabeled=True)
    if n == 8:  # split only, per _check_limit
        words = _split_words(8)
        edge_bits, _ = _perm_tables(8)
        return len(_orbit_reps(words, lambda w: _word_orbit(w, edge_bits)))
    return class_census(n).unlabeled[tag]


def census_range(max_n: int) -> list[Census]:
    return [class_census(n) for n in range(max_n + 1)]


def write_census_files(directory: str, max_n: int = 7):
    """Regenerate the golden census files census-n{0..max_n}.json."""
    import os

    for n in range(max_n + 1):
        path = os.path.join(directory, f"census-n{n}.json")
        with open(path, "w") as f:
            json.dump(class_census(n).to_json(), f, indent=1, sort_keys=True)
            f.write("\n")
