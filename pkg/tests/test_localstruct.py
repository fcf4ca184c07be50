"""Family predicates, pair machinery, and the lifting inequalities."""

import random
from fractions import Fraction

import pytest

from locolor.catalog import (
    balanced_blowup,
    complete,
    cycle,
    join,
    named,
    turan,
    wheel,
)
from locolor.graph import Graph, GraphError, min_degree, random_graph
from locolor.homomorphism import are_isomorphic
from locolor.localstruct import (
    PairKind,
    classify_pair,
    contains_odd_wheel,
    dense_pair_graph,
    dense_set,
    family_nesting_check,
    is_a_locally_b_partite,
    is_edge_maximal_in_family,
    lifting_inequality_check,
    quasidense_reachable,
)


def test_family_membership_examples():
    for a, b in ((1, 2), (2, 2), (1, 3)):
        assert is_a_locally_b_partite(turan(a + b, 3 * (a + b)), a, b).holds
    assert is_a_locally_b_partite(named("H0"), 1, 2).holds
    w7 = is_a_locally_b_partite(wheel(7), 1, 2)
    assert not w7.holds and w7.witness == (7,)  # the hub sees the odd rim


def test_apex_over_h0_memberships():
    # The apex vertex sees a full copy of H0, which is 4-chromatic, so the
    # join is neither locally bipartite nor locally 3-partite; it is
    # 2-locally bipartite and locally 4-partite.
    g = join(complete(1), named("H0"))
    assert not is_a_locally_b_partite(g, 1, 2).holds
    assert not is_a_locally_b_partite(g, 1, 3).holds
    assert is_a_locally_b_partite(g, 1, 4).holds
    assert is_a_locally_b_partite(g, 2, 2).holds


def test_family_nesting():
    assert family_nesting_check(turan(3, 9), 2).ok
    report = family_nesting_check(complete(5), 2)
    assert report.ok and not report.clique_free
    rng = random.Random(13)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), 0.5)
        assert family_nesting_check(g, rng.choice([2, 3])).ok


def test_classify_pair_examples():
    h0 = named("H0")
    # Computed classification of H0: exactly (a0,a3) and (a0,a4) are dense.
    dense = {
        (u, v)
        for u, v in h0.non_edges()
        if classify_pair(h0, u, v, 2).kind is PairKind.DENSE
    }
    assert dense == {(0, 3), (0, 4)}
    assert classify_pair(h0, 1, 4, 2).kind is PairKind.SPARSE

    c7bar = named("C7bar")
    for u, v in c7bar.non_edges():
        assert classify_pair(c7bar, u, v, 2).kind is PairKind.DENSE

    k4_minus = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert classify_pair(k4_minus, 2, 3, 2).kind is PairKind.DENSE

    assert classify_pair(h0, 0, 1, 2).kind is PairKind.ADJACENT
    assert classify_pair(h0, 0, 1, 2).b == 2
    with pytest.raises(GraphError):
        classify_pair(h0, 3, 3, 2)


def test_classify_pair_symmetric():
    rng = random.Random(19)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9), 0.5)
        u, v = rng.sample(range(g.n), 2)
        b = rng.choice([1, 2, 3])
        assert classify_pair(g, u, v, b) == classify_pair(g, v, u, b)


def test_dense_set_examples():
    h0 = named("H0")
    # H0 is not H0-free, so no independence is promised here; the raw set
    # {a3, a4} indeed spans an edge.
    assert dense_set(h0, 0, 2) == {3, 4}
    assert h0.has_edge(3, 4)

    for v in range(5):
        assert dense_set(cycle(5), v, 2) == frozenset()

    t39 = turan(3, 9)
    for v in range(9):
        partners = dense_set(t39, v, 2)
        assert len(partners) == 2  # the rest of v's own part
        assert all(not t39.has_edge(v, u) for u in partners)


def test_dense_pair_graph_matches_figures():
    t0 = named("T0")
    expected = {
        frozenset(e)
        for e in [(0, 2), (2, 4), (4, 6), (6, 7), (7, 1), (1, 3), (3, 5), (5, 0), (8, 9)]
    }
    assert {frozenset(e) for e in dense_pair_graph(t0, 2).edges()} == expected

    h1pp = named("H1plusplus")
    expected = {
        frozenset(e)
        for e in [(1, 7), (7, 4), (4, 8), (8, 6), (6, 2), (2, 5), (5, 1), (0, 3)]
    }
    assert {frozenset(e) for e in dense_pair_graph(h1pp, 2).edges()} == expected

    assert dense_pair_graph(cycle(5), 2).edge_count == 0


def test_quasidense_reachability():
    t0 = named("T0")
    assert quasidense_reachable(t0, 0, 2) == frozenset(range(8))
    assert quasidense_reachable(t0, 8, 2) == frozenset({8, 9})
    assert quasidense_reachable(cycle(5), 0, 2) == frozenset({0})

    rng = random.Random(29)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        u, v = rng.sample(range(g.n), 2)
        assert (v in quasidense_reachable(g, u, 2)) == (u in quasidense_reachable(g, v, 2))


def test_contains_odd_wheel():
    assert contains_odd_wheel(wheel(7))
    assert not contains_odd_wheel(named("H2plus"))
    assert contains_odd_wheel(complete(4))  # K4 is the 3-wheel
    rng = random.Random(37)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 8), 0.5)
        assert contains_odd_wheel(g) == (not is_a_locally_b_partite(g, 1, 2).holds)


def test_edge_maximality():
    assert is_edge_maximal_in_family(named("C7bar"), 1, 2).maximal
    assert is_edge_maximal_in_family(named("H2plus"), 1, 2).maximal

    h2 = is_edge_maximal_in_family(named("H2"), 1, 2)
    assert not h2.maximal
    assert len(h2.extensions) == 1
    assert are_isomorphic(h2.extensions[0], named("C7bar"))

    h0 = is_edge_maximal_in_family(named("H0"), 1, 2)
    assert len(h0.extensions) == 2
    assert sum(are_isomorphic(g, named("H1")) for g in h0.extensions) == 1

    with pytest.raises(GraphError):
        is_edge_maximal_in_family(wheel(7), 1, 2)


def test_lifting_inequalities():
    report = lifting_inequality_check(turan(4, 12), [0], 3, Fraction(1, 7))
    assert report.applicable
    assert report.size_ok and report.min_degree_ok
    assert report.common_size == 9 and report.size_lower_bound == 9

    # s exceeding b + gamma is out of range: not applicable, not an error.
    whole = lifting_inequality_check(cycle(5), range(5), 2, Fraction(1, 2))
    assert not whole.applicable

    with pytest.raises(GraphError):
        lifting_inequality_check(cycle(5), [], 2, Fraction(1, 2))


def test_lifting_random_instances():
    from locolor.catalog import blow_up

    rng = random.Random(43)
    checked = 0
    while checked < 60:
        base = rng.choice([complete(4), complete(5), named("C7bar")])
        sizes = [rng.randint(1, 3) for _ in range(base.n)]
        g = blow_up(base, sizes)
        d = Fraction(min_degree(g), g.n)
        if d <= Fraction(1, 2):
            continue
        s = rng.choice([1, 2])
        upper = 1 / (1 - d)
        if upper <= s:
            continue
        target = (s + upper) / 2
        b = s + 1
        gamma = target - b
        xs = rng.sample(range(g.n), s)
        report = lifting_inequality_check(g, xs, b, gamma)
        if not report.applicable:
            continue
        checked += 1
        assert report.size_ok and report.min_degree_ok
