"""Core graph type and the primitive quantities."""

import random
from fractions import Fraction

import pytest

from locolor.catalog import complete, cycle, named
from locolor.graph import (
    Graph,
    GraphError,
    WeightedGraph,
    common_neighbourhood,
    induced_subgraph,
    min_degree,
    neighbour_weight,
    ordered_edge_count,
    random_graph,
    weighted_incidence,
    weighted_min_degree_ratio,
)


def test_adjacency_is_symmetric_and_loopless():
    g = Graph(4, [(0, 1), (1, 2)])
    assert g.has_edge(1, 0) and g.has_edge(2, 1)
    assert not g.has_edge(0, 0)
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


def test_vertex_limit_env(monkeypatch):
    monkeypatch.setenv("LOCOLOR_MAX_N", "10")
    with pytest.raises(GraphError):
        Graph(11)
    monkeypatch.setenv("LOCOLOR_MAX_N", "80")
    assert Graph(80).n == 80
    monkeypatch.delenv("LOCOLOR_MAX_N")
    with pytest.raises(GraphError):
        Graph(65)


def test_common_neighbourhood_examples():
    k4 = complete(4)
    assert common_neighbourhood(k4, [0, 1]) == {2, 3}

    # Every edge of C7bar closes one or two triangles but never spans a K4.
    c7bar = named("C7bar")
    for u, v in c7bar.edges():
        gamma = common_neighbourhood(c7bar, [u, v])
        assert len(gamma) in (1, 2)
        assert all(not c7bar.has_edge(x, y) for x in gamma for y in gamma if x < y)

    # In H0 the pair (a0, a3) has common neighbourhood {a1, a2}, which spans
    # an edge: the pair is dense, not sparse.
    h0 = named("H0")
    gamma = common_neighbourhood(h0, [0, 3])
    assert gamma == {1, 2}
    assert h0.has_edge(1, 2)

    with pytest.raises(GraphError, match="empty query set"):
        common_neighbourhood(k4, [])


def test_common_neighbourhood_antitone():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 10), 0.5)
        verts = list(range(g.n))
        x = rng.sample(verts, rng.randint(1, min(3, g.n)))
        extra = [v for v in verts if v not in x]
        if not extra:
            continue
        y = x + [rng.choice(extra)]
        assert common_neighbourhood(g, y) <= common_neighbourhood(g, x)


def test_induced_subgraph_examples():
    c7 = cycle(7)
    assert induced_subgraph(c7, range(7)) == c7
    h2plus = named("H2plus")
    assert induced_subgraph(h2plus, range(7)) == named("H2")
    w7 = named("W7")
    assert induced_subgraph(w7, range(7)) == cycle(7)
    path = induced_subgraph(c7, [0, 1, 2])
    assert path.edges() == [(0, 1), (1, 2)]


def test_min_degree_examples():
    assert min_degree(named("C7bar")) == 4
    assert min_degree(named("T0")) == 3
    assert min_degree(complete(5)) == 4
    with pytest.raises(GraphError):
        min_degree(Graph(0))


def test_ordered_edge_count_examples():
    k3 = complete(3)
    assert ordered_edge_count(k3, range(3)) == 6
    h0 = named("H0")
    assert ordered_edge_count(h0, range(7)) == 22
    w7 = named("W7")
    assert ordered_edge_count(w7, [7]) == 7


def test_ordered_edge_count_is_twice_edges():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 12), 0.4)
        assert ordered_edge_count(g, range(g.n)) == 2 * g.edge_count


def test_weighted_incidence():
    h1 = named("H1")
    weights = tuple(Fraction(x) for x in (2, 1, 2, 1, 1, 2, 1))
    wg = WeightedGraph(h1, weights)
    assert weighted_incidence(wg, range(7)) == 36

    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 9), 0.5)
        unit = WeightedGraph(g, tuple(Fraction(1) for _ in range(g.n)))
        assert weighted_incidence(unit, range(g.n)) == ordered_edge_count(g, range(g.n))

    single = WeightedGraph(complete(3), (Fraction(0), Fraction(1), Fraction(1)))
    assert weighted_incidence(single, [0]) == 0


def test_weighted_min_degree_ratio():
    c5 = cycle(5)
    unit = WeightedGraph(c5, tuple(Fraction(1) for _ in range(5)))
    assert weighted_min_degree_ratio(unit) == Fraction(2, 5)

    eps = Fraction(1, 1000)
    h2plus = named("H2plus")
    wg = WeightedGraph(h2plus, (2, eps, 2, 1, 1, 2, eps, 1))
    assert weighted_min_degree_ratio(wg) == Fraction(5000, 9002)

    h1pp = named("H1plusplus")
    wg = WeightedGraph(h1pp, (5, eps, 3, 2, eps, 3, eps, 1, 1))
    assert weighted_min_degree_ratio(wg) == 8 / (15 + 3 * eps)

    with pytest.raises(GraphError, match="empty blow-up class"):
        weighted_min_degree_ratio(WeightedGraph(c5, (0, 1, 1, 1, 1)))


def test_weighted_graph_validation():
    with pytest.raises(GraphError):
        WeightedGraph(cycle(5), (1, 1, 1))
    with pytest.raises(GraphError):
        WeightedGraph(cycle(5), (1, 1, 1, 1, -1))
    wg = WeightedGraph(cycle(5), (1, 2, 1, 2, 1))
    assert neighbour_weight(wg, 0) == 3  # neighbours 1 and 4 weigh 2 + 1


def test_codegree_lower_bound():
    # d(u,v) >= d(u) + d(v) - n >= 2 delta - n, on 500 random graphs.
    rng = random.Random(99)
    for _ in range(500):
        g = random_graph(rng, rng.randint(2, 16), rng.choice([0.3, 0.5, 0.7]))
        delta = min_degree(g)
        for _ in range(3):
            u, v = rng.sample(range(g.n), 2)
            codeg = len(common_neighbourhood(g, [u, v]))
            assert codeg >= g.degree(u) + g.degree(v) - g.n >= 2 * delta - g.n


def test_graph_identity_and_hash():
    g = Graph(3, [(0, 1)])
    h = Graph(3, [(1, 0)])
    assert g == h and hash(g) == hash(h)
    assert g != Graph(3, [(0, 2)])
    assert g.with_edge(1, 2) != g  # immutably adds
    assert g.edges() == [(0, 1)]
