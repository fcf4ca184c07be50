"""Exact solvers: colouring, cliques, independence, criticality."""

import random

import pytest

from locolor.catalog import complete, cycle, kneser, named, schrijver, turan, wheel
from locolor.colouring import (
    bipartite_matching_number,
    brute_force_chromatic_number,
    chromatic_number,
    clique_number,
    cliques_of_size,
    has_clique,
    independence_number,
    is_k_colourable,
    is_vertex_critical,
    verify_colouring,
)
from locolor.graph import Graph, GraphError, random_graph


def test_is_k_colourable_examples():
    assert is_k_colourable(complete(4), 3) is None
    h0 = named("H0")
    assert is_k_colourable(h0, 3) is None
    colouring = is_k_colourable(h0, 4)
    assert colouring is not None and verify_colouring(h0, colouring, 4)
    assert is_k_colourable(schrijver(8, 3), 3) is None


def test_is_k_colourable_monotone_and_deterministic():
    rng = random.Random(17)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8), 0.5)
        chi = chromatic_number(g)
        for k in range(0, g.n + 1):
            result = is_k_colourable(g, k)
            assert (result is not None) == (k >= chi)
        assert is_k_colourable(g, chi) == is_k_colourable(g, chi)


def test_chromatic_number_examples():
    assert chromatic_number(cycle(7)) == 3
    assert chromatic_number(named("T0")) == 4
    assert chromatic_number(kneser(5, 2)) == 3
    assert chromatic_number(Graph(0)) == 0
    assert chromatic_number(Graph(5)) == 1


def test_chi_at_least_clique_number():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 8), 0.5)
        assert chromatic_number(g) >= clique_number(g)


def test_clique_operations():
    assert clique_number(named("C7bar")) == 3
    assert len(list(cliques_of_size(complete(4), 2))) == 6
    assert not has_clique(turan(3, 9), 4)
    assert clique_number(Graph(0)) == 0

    # Enumeration is deterministic, ascending, and duplicate-free.
    h2 = named("H2")
    triangles = list(cliques_of_size(h2, 3))
    assert triangles == sorted(triangles)
    assert len(set(triangles)) == len(triangles)
    for t in triangles:
        assert all(h2.has_edge(u, v) for u in t for v in t if u < v)


def test_independence():
    assert independence_number(cycle(7))[0] == 3
    assert independence_number(named("C7bar"))[0] == 2
    assert independence_number(turan(3, 9))[0] == 3
    size, witness = independence_number(kneser(5, 2))
    assert size == 4 and len(witness) == 4
    assert independence_number(Graph(0)) == (0, frozenset())


def test_vertex_criticality():
    assert is_vertex_critical(cycle(5), 3)
    assert is_vertex_critical(schrijver(8, 3), 4)
    # Deleting the hub of W7 leaves C7 (chi 3); deleting a rim vertex leaves
    # a fan (chi 3): so the 7-wheel is vertex-critical at 4.
    assert is_vertex_critical(wheel(7), 4)
    assert not is_vertex_critical(cycle(6), 3)
    assert not is_vertex_critical(named("H2plus"), 4)  # H2 survives a deletion
    with pytest.raises(GraphError):
        is_vertex_critical(cycle(5), 0)


def test_brute_force_oracle_agreement():
    rng = random.Random(31)
    for _ in range(120):
        g = random_graph(rng, rng.randint(0, 6), rng.choice([0.2, 0.5, 0.8]))
        assert chromatic_number(g) == brute_force_chromatic_number(g)


def test_bipartite_matching_duality():
    rng = random.Random(41)
    for _ in range(60):
        m1, m2 = rng.randint(1, 6), rng.randint(1, 6)
        edges = [
            (u, m1 + v) for u in range(m1) for v in range(m2) if rng.random() < 0.5
        ]
        g = Graph(m1 + m2, edges)
        alpha, _ = independence_number(g)
        assert alpha == g.n - bipartite_matching_number(g)
    with pytest.raises(GraphError):
        bipartite_matching_number(complete(3))


def test_blowup_chi_preserved_small():
    from locolor.catalog import balanced_blowup

    rng = random.Random(7)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8), 0.5)
        t = rng.randint(1, 3)
        if g.n * t > 24:
            continue
        assert chromatic_number(balanced_blowup(g, t)) == chromatic_number(g)
