"""Serialisation: graph6 bit-exactness, adjacency text, DOT."""

import random

import pytest

from locolor.catalog import complete, cycle, named
from locolor.graph import Graph, random_graph
from locolor.graphio import (
    FormatError,
    emit_graph,
    from_adjacency_text,
    from_graph6,
    parse_graph,
    to_adjacency_text,
    to_dot,
    to_graph6,
)

networkx = pytest.importorskip("networkx")


def test_k3_is_Bw():
    assert to_graph6(complete(3)) == "Bw"
    assert from_graph6("Bw") == complete(3)


def test_graph6_round_trip_random():
    rng = random.Random(53)
    for _ in range(120):
        g = random_graph(rng, rng.randint(0, 20), rng.choice([0.2, 0.5, 0.8]))
        assert from_graph6(to_graph6(g)) == g


def test_graph6_against_independent_encoder():
    rng = random.Random(59)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 15), rng.choice([0.3, 0.6]))
        nx_graph = networkx.Graph()
        nx_graph.add_nodes_from(range(g.n))
        nx_graph.add_edges_from(g.edges())
        theirs = networkx.to_graph6_bytes(nx_graph, header=False).decode().strip()
        assert to_graph6(g) == theirs
        back = networkx.from_graph6_bytes(to_graph6(g).encode())
        assert set(map(frozenset, back.edges())) == set(map(frozenset, g.edges()))


def test_graph6_header_and_errors():
    g = named("H0")
    assert from_graph6(">>graph6<<" + to_graph6(g)) == g

    with pytest.raises(FormatError) as err:
        from_graph6("B\x1f")
    assert err.value.offset == 1

    with pytest.raises(FormatError, match="truncated"):
        from_graph6("F")  # promises 7 vertices, no payload

    with pytest.raises(FormatError, match="trailing"):
        from_graph6("BwBw")

    with pytest.raises(FormatError, match="empty"):
        from_graph6("")


def test_graph6_large_n_form(monkeypatch):
    monkeypatch.setenv("LOCOLOR_MAX_N", "80")
    g = Graph(70, [(0, 69), (3, 40)])
    encoded = to_graph6(g)
    assert encoded.startswith("~")
    assert from_graph6(encoded) == g


def test_adjacency_text():
    path = from_adjacency_text("3\n0 1\n1 2\n")
    assert path == Graph(3, [(0, 1), (1, 2)])
    commented = "# a path\n3  # vertices\n0 1\n1 2  # last edge\n"
    assert from_adjacency_text(commented) == path
    g = named("T0")
    assert from_adjacency_text(to_adjacency_text(g)) == g


def test_adjacency_text_errors_carry_offsets():
    with pytest.raises(FormatError) as err:
        from_adjacency_text("3\n0 5\n")
    assert err.value.offset == 4  # the byte where '5' starts

    with pytest.raises(FormatError):
        from_adjacency_text("3\n0\n")
    with pytest.raises(FormatError):
        from_adjacency_text("x\n")
    with pytest.raises(FormatError):
        from_adjacency_text("# nothing\n")
    with pytest.raises(FormatError):
        from_adjacency_text("3\n1 1\n")


def test_dot_emit_only():
    text = to_dot(cycle(3))
    assert "graph G {" in text and "0 -- 1;" in text
    with pytest.raises(ValueError, match="emit-only"):
        parse_graph("graph G {}", "dot")


def test_dispatch():
    g = cycle(5)
    for fmt in ("graph6", "adjlist"):
        assert parse_graph(emit_graph(g, fmt), fmt) == g
    with pytest.raises(ValueError):
        emit_graph(g, "gml")
