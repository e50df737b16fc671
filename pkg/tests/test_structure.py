"""Partitions, swing analysis, the four-way classification, colored graphs.

The structural facts exercised exhaustively here: every partition of a split
graph realizes exactly one of the size patterns (omega, alpha),
(omega-1, alpha), (omega, alpha-1) with a movable witness in the unbalanced
cases; the swing set is a clique or a stable set whose removal/choice
structure lists the K-max and S-max partitions; and complementation swaps the
k-canonical and s-canonical classes while fixing the other two.
"""

import random

import pytest

from splitspecies.errors import NotAPartition, NotSMax, NotSplit, TooLarge
from splitspecies.graphs import Graph, complement, make_graph
from splitspecies.structure import (
    ColoredSplitGraph,
    KSPartition,
    SplitClass,
    all_colorings,
    canonical_partition,
    classify,
    clique_number,
    color,
    independence_number,
    k_max_partitions,
    ks_partitions,
    s_max_partitions,
    swing_report,
)

from conftest import (
    complete_graph,
    cycle_graph,
    empty_graph,
    oracle_alpha,
    oracle_omega,
    oracle_partitions,
    path_graph,
    star_graph,
)


def _split_words_and_classes(n):
    from splitspecies.enumeration import _split_data

    data = _split_data(n)
    return data


def test_ks_partitions_examples():
    k1 = empty_graph(1)
    assert [(p.k, p.s) for p in ks_partitions(k1)] == [((), (0,)), ((0,), ())]
    p4 = path_graph(4)
    assert [(p.k, p.s) for p in ks_partitions(p4)] == [((1, 2), (0, 3))]
    assert ks_partitions(cycle_graph(4)) == []
    with pytest.raises(TooLarge):
        ks_partitions(Graph(17, tuple([0] * 17)))


@pytest.mark.parametrize("n", range(0, 6))
def test_ks_partitions_match_subset_oracle_exhaustive(n):
    for word in range(1 << (n * (n - 1) // 2)):
        g = Graph.from_edge_word(n, word)
        got = {(frozenset(p.k), frozenset(p.s)) for p in ks_partitions(g)}
        assert got == set(oracle_partitions(g))


def test_ks_partitions_match_subset_oracle_sampled_n6():
    rng = random.Random(99)
    for _ in range(300):
        g = Graph.from_edge_word(6, rng.getrandbits(15))
        got = {(frozenset(p.k), frozenset(p.s)) for p in ks_partitions(g)}
        assert got == set(oracle_partitions(g))


def test_swing_report_examples():
    rep = swing_report(empty_graph(1))
    assert rep.swings == (0,) and rep.kind == "singleton"
    rep = swing_report(make_graph(2, [(0, 1)]))
    assert rep.swings == (0, 1) and rep.kind == "clique"
    rep = swing_report(path_graph(4))
    assert rep.swings == () and rep.kind == "empty"
    assert set(rep.y) == {1, 2} and set(rep.z) == {0, 3}
    with pytest.raises(NotSplit):
        swing_report(cycle_graph(4))


def test_classify_examples():
    assert classify(path_graph(4)) is SplitClass.BALANCED
    assert classify(empty_graph(1)) is SplitClass.AMBIGUOUS
    assert classify(make_graph(2, [(0, 1)])) is SplitClass.K_CANONICAL
    assert classify(empty_graph(2)) is SplitClass.S_CANONICAL
    assert classify(empty_graph(0)) is SplitClass.BALANCED
    assert classify(path_graph(3)) is SplitClass.S_CANONICAL  # both leaves swing


def test_first_ambiguous_graph_is_p4_plus_apex():
    g = make_graph(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])
    assert classify(g) is SplitClass.AMBIGUOUS
    assert swing_report(g).swings == (4,)


@pytest.mark.parametrize("n", range(0, 7))
def test_proposition_size_trichotomy(n):
    """Every partition hits exactly one size case, with a movable witness."""
    data = _split_words_and_classes(n)
    for q in range(len(data.words)):
        g = Graph.from_edge_word(n, int(data.words[q]))
        omega = clique_number(g)
        alpha = independence_number(g)
        parts = ks_partitions(g)
        assert parts, "split graph must have a partition"
        unique = len(parts) == 1
        for p in parts:
            sizes = (len(p.k), len(p.s))
            cases = [
                sizes == (omega, alpha) and unique,
                sizes == (omega - 1, alpha),
                sizes == (omega, alpha - 1),
            ]
            assert sum(cases) == 1, (g, sizes, omega, alpha)
            if cases[1]:  # some stable vertex completes the clique
                assert any(
                    g.rows[x] & p.k_mask() == p.k_mask() for x in p.s
                )
            if cases[2]:  # some clique vertex moves to the stable side
                assert any(g.rows[x] & p.s_mask() == 0 for x in p.k)
        if n >= 7 and q > 4000:  # n = 7 checked on a deterministic prefix
            break


@pytest.mark.parametrize("n", range(1, 7))
def test_swing_structure_lists_all_partitions(n):
    """Prop-style structure: A clique or stable; the K-max/S-max partitions
    are exactly the ones generated from A, Y, Z."""
    data = _split_words_and_classes(n)
    for q in range(len(data.words)):
        g = Graph.from_edge_word(n, int(data.words[q]))
        rep = swing_report(g)
        a_mask = rep.swing_mask()
        if not rep.swings:
            continue
        y_mask = sum(1 << v for v in rep.y)
        z_mask = sum(1 << v for v in rep.z)
        # adjacency structure: every swing sees all of Y and none of Z
        for a in rep.swings:
            assert g.rows[a] & y_mask == y_mask
            assert g.rows[a] & z_mask == 0
        kmax = {(p.k_mask(), p.s_mask()) for p in k_max_partitions(g)}
        smax = {(p.k_mask(), p.s_mask()) for p in s_max_partitions(g)}
        every = {(p.k_mask(), p.s_mask()) for p in ks_partitions(g)}
        assert every == kmax | smax
        if rep.kind == "clique":
            assert kmax == {(a_mask | y_mask, z_mask)}
            assert smax == {
                ((a_mask ^ (1 << a)) | y_mask, z_mask | (1 << a)) for a in rep.swings
            }
        elif rep.kind == "stable":
            assert smax == {(y_mask, a_mask | z_mask)}
            assert kmax == {
                (y_mask | (1 << a), (a_mask ^ (1 << a)) | z_mask) for a in rep.swings
            }
        else:  # singleton: both descriptions degenerate to the same two partitions
            (a,) = rep.swings
            assert kmax == {((1 << a) | y_mask, z_mask)}
            assert smax == {(y_mask, (1 << a) | z_mask)}


def test_swing_structure_sampled_n7():
    data = _split_words_and_classes(7)
    rng = random.Random(77)
    for _ in range(400):
        q = rng.randrange(len(data.words))
        g = Graph.from_edge_word(7, int(data.words[q]))
        rep = swing_report(g)
        assert classify(g).value == {0: "balanced", 1: "ambiguous",
                                     2: "k-canonical", 3: "s-canonical"}[int(data.classes[q])]
        assert rep.swing_mask() == int(data.swings[q])


@pytest.mark.parametrize("n", range(0, 6))
def test_fast_classifier_matches_definitional(n):
    """The bulk classifier used by the census agrees with the definition."""
    from splitspecies.enumeration import _classify_masks, _rows_of_word

    data = _split_words_and_classes(n)
    names = {0: SplitClass.BALANCED, 1: SplitClass.AMBIGUOUS,
             2: SplitClass.K_CANONICAL, 3: SplitClass.S_CANONICAL}
    for q in range(len(data.words)):
        word = int(data.words[q])
        g = Graph.from_edge_word(n, word)
        cls, swings, kmax = _classify_masks(_rows_of_word(n, word), n)
        assert names[cls] is classify(g)
        assert swings == swing_report(g).swing_mask()
        assert (kmax, g.vertex_mask() ^ kmax) in {
            (p.k_mask(), p.s_mask()) for p in k_max_partitions(g)
        }


def test_classify_complement_swaps_canonical_classes():
    swap = {
        SplitClass.K_CANONICAL: SplitClass.S_CANONICAL,
        SplitClass.S_CANONICAL: SplitClass.K_CANONICAL,
        SplitClass.BALANCED: SplitClass.BALANCED,
        SplitClass.AMBIGUOUS: SplitClass.AMBIGUOUS,
    }
    for n in range(0, 6):
        data = _split_words_and_classes(n)
        for q in range(len(data.words)):
            g = Graph.from_edge_word(n, int(data.words[q]))
            assert classify(complement(g)) is swap[classify(g)]
    rng = random.Random(13)
    data = _split_words_and_classes(7)
    for _ in range(300):
        g = Graph.from_edge_word(7, int(data.words[rng.randrange(len(data.words))]))
        assert classify(complement(g)) is swap[classify(g)]


def test_s_max_partitions_examples():
    assert len(s_max_partitions(path_graph(4))) == 1
    k2 = make_graph(2, [(0, 1)])
    assert {p.s for p in s_max_partitions(k2)} == {(0,), (1,)}
    k1 = empty_graph(1)
    parts = s_max_partitions(k1)
    assert len(parts) == 1 and parts[0].s == (0,)


@pytest.mark.parametrize("n", range(0, 7))
def test_s_max_partition_counts(n):
    """Exactly one S-max partition unless k-canonical, then one per swing."""
    data = _split_words_and_classes(n)
    for q in range(len(data.words)):
        g = Graph.from_edge_word(n, int(data.words[q]))
        expected = int(data.swings[q]).bit_count() if int(data.classes[q]) == 2 else 1
        assert len(s_max_partitions(g)) == expected
        if n >= 7 and q > 3000:
            break


def test_canonical_partition_examples():
    k2 = make_graph(2, [(0, 1)])
    part = canonical_partition(k2)
    assert part.k == (0, 1) and part.s == ()
    assert canonical_partition(path_graph(4)) == ks_partitions(path_graph(4))[0]
    assert canonical_partition(empty_graph(1)) is None


def test_color_examples():
    p4 = path_graph(4)
    c = color(p4, ks_partitions(p4)[0])
    assert c.green == (1, 2) and c.red == (0, 3)
    k2 = make_graph(2, [(0, 1)])
    with pytest.raises(NotSMax):
        color(k2, KSPartition((0, 1), ()))
    with pytest.raises(NotAPartition):
        color(k2, KSPartition((0,), ()))
    k1 = empty_graph(1)
    c = color(k1, KSPartition((), (0,)))
    assert c.red == (0,) and c.green == ()


def test_colored_split_graph_validation():
    p4 = path_graph(4)
    with pytest.raises(NotSMax):
        ColoredSplitGraph(make_graph(2, [(0, 1)]), (0, 1), ())
    with pytest.raises(NotAPartition):
        ColoredSplitGraph(p4, (0, 1), (2, 3))  # not a clique side
    c = ColoredSplitGraph(p4, (1, 2), (0, 3))
    assert ColoredSplitGraph.from_json(c.to_json()) == c


def test_clique_and_independence_numbers():
    assert clique_number(complete_graph(3)) == 3
    assert independence_number(complete_graph(3)) == 1
    assert clique_number(path_graph(4)) == 2
    assert independence_number(path_graph(4)) == 2
    assert clique_number(empty_graph(5)) == 1
    assert independence_number(empty_graph(5)) == 5
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(0, 7)
        g = Graph.from_edge_word(n, rng.getrandbits(n * (n - 1) // 2))
        assert clique_number(g) == oracle_omega(g)
        assert independence_number(g) == oracle_alpha(g)
        assert independence_number(g) == clique_number(complement(g))


def test_star_graph_is_s_canonical_for_two_leaves():
    # both leaves of the 2-star swing (as a stable pair), so uk rejects it
    star = star_graph(2)
    assert classify(star) is SplitClass.S_CANONICAL


def test_all_colorings_counts(census7):
    from splitspecies.enumeration import ClassTag

    for n in range(0, 6):
        data = _split_words_and_classes(n)
        total = 0
        for q in range(len(data.words)):
            g = Graph.from_edge_word(n, int(data.words[q]))
            total += len(all_colorings(g))
        assert total == census7[n].labeled[ClassTag.COLORED_SPLIT]
