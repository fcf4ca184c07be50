"""Immutable small-graph value type and primitive quantities.

Graphs are simple and undirected, on vertices 0..n-1, with adjacency kept
as per-vertex bitmasks so that set operations are single integer ops.
All ratio-valued quantities are exact ``fractions.Fraction``s; no floats.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

DEFAULT_MAX_VERTICES = 64
MAX_VERTICES_ENV = "LOCOLOR_MAX_N"


class GraphError(ValueError):
    """Raised for invalid graph constructions or queries."""


def max_vertices() -> int:
    """Vertex-count limit; raise it with the LOCOLOR_MAX_N env var."""
    raw = os.environ.get(MAX_VERTICES_ENV)
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError as exc:
        raise GraphError(f"{MAX_VERTICES_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise GraphError(f"{MAX_VERTICES_ENV} must be positive, got {value}")
    return value


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        limit = max_vertices()
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if n > limit:
            raise GraphError(
                f"vertex count {n} exceeds limit {limit} (raise {MAX_VERTICES_ENV} to allow)"
            )
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._hash = hash((n, self._adj))

    @classmethod
    def from_masks(cls, masks: tuple[int, ...]) -> Graph:
        """Internal fast path: build from a validated adjacency-mask tuple."""
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = masks
        g._hash = hash((g.n, masks))
        return g

    # -- queries ----------------------------------------------------------

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbours(self, v: int) -> frozenset[int]:
        return _mask_to_set(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.has_edge(u, v)]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)
        ]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    # -- derived graphs (all return new values) ----------------------------

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"invalid edge ({u},{v})")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph.from_masks(tuple(adj))

    def without_vertex(self, v: int) -> Graph:
        keep = [u for u in range(self.n) if u != v]
        return induced_subgraph(self, keep)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class WeightedGraph:
    """Graph plus exact nonnegative rational vertex weights."""

    graph: Graph
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise GraphError(
                f"expected {self.graph.n} weights, got {len(self.weights)}"
            )
        norm = tuple(Fraction(w) for w in self.weights)
        if any(w < 0 for w in norm):
            raise GraphError("vertex weights must be nonnegative")
        object.__setattr__(self, "weights", norm)

    @property
    def total_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))


def _check_subset(g: Graph, xs: Iterable[int]) -> list[int]:
    out = sorted(set(xs))
    if out and not (0 <= out[0] and out[-1] < g.n):
        raise GraphError(f"vertex set {out} not within 0..{g.n - 1}")
    return out


def common_neighbourhood(g: Graph, xs: Iterable[int]) -> frozenset[int]:
    """Vertices adjacent to every member of xs; xs must be nonempty."""
    members = _check_subset(g, xs)
    if not members:
        raise GraphError("empty query set")
    mask = g.adj_mask(members[0])
    for x in members[1:]:
        mask &= g.adj_mask(x)
    return _mask_to_set(mask)


def common_neighbourhood_mask(g: Graph, xs_mask: int) -> int:
    """Bitmask form of common_neighbourhood; xs_mask must be nonzero."""
    if xs_mask == 0:
        raise GraphError("empty query set")
    mask = (1 << g.n) - 1
    rest = xs_mask
    while rest:
        low = rest & -rest
        mask &= g.adj_mask(low.bit_length() - 1)
        rest ^= low
    return mask


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on s, relabelled 0..|s|-1 in ascending original order."""
    members = _check_subset(g, s)
    index = {v: i for i, v in enumerate(members)}
    edges = [
        (index[u], index[v])
        for i, u in enumerate(members)
        for v in members[i + 1 :]
        if g.has_edge(u, v)
    ]
    return Graph(len(members), edges)


def local_graph(g: Graph, xs: Iterable[int]) -> Graph:
    """Induced subgraph on the common neighbourhood of xs."""
    return induced_subgraph(g, common_neighbourhood(g, xs))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degree(v) for v in range(g.n))


def ordered_edge_count(g: Graph, xs: Iterable[int]) -> int:
    """Ordered pairs (x, v) with x in xs and xv an edge; equals sum of degrees over xs."""
    members = _check_subset(g, xs)
    by_degrees = sum(g.degree(x) for x in members)
    mask = set_to_mask(members)
    by_incidence = sum((g.adj_mask(v) & mask).bit_count() for v in range(g.n))
    assert by_degrees == by_incidence
    return by_degrees


def weighted_incidence(wg: WeightedGraph, xs: Iterable[int]) -> Fraction:
    """Sum of weight(x) * deg(x) over xs, cross-checked against the dual sum."""
    g = wg.graph
    members = _check_subset(g, xs)
    by_degrees = sum((wg.weights[x] * g.degree(x) for x in members), Fraction(0))
    in_xs = set(members)
    by_incidence = Fraction(0)
    for v in range(g.n):
        by_incidence += sum(
            (wg.weights[x] for x in _mask_to_set(g.adj_mask(v)) if x in in_xs), Fraction(0)
        )
    assert by_degrees == by_incidence
    return by_degrees


def neighbour_weight(wg: WeightedGraph, v: int) -> Fraction:
    """Total weight of the neighbours of v."""
    return sum((wg.weights[u] for u in wg.graph.neighbours(v)), Fraction(0))


def weighted_min_degree_ratio(wg: WeightedGraph) -> Fraction:
    """min_v (weight of v's neighbourhood) / (total weight), all weights > 0.

    This is the limiting min-degree fraction of blow-ups whose class sizes
    are proportional to the weights; empty classes are rejected because a
    blow-up class must be non-empty.
    """
    g = wg.graph
    if g.n == 0 or wg.total_weight == 0 or any(w == 0 for w in wg.weights):
        raise GraphError("empty blow-up class")
    return min(neighbour_weight(wg, v) for v in range(g.n)) / wg.total_weight


def random_graph(rng, n: int, p: Fraction | float = Fraction(1, 2)) -> Graph:
    """Erdos-Renyi sample used by the seeded property suites."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def connected_components(g: Graph) -> list[frozenset[int]]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= g.adj_mask(low.bit_length() - 1)
                rest ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(_mask_to_set(comp))
    return comps


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            rest = g.adj_mask(v)
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if colour[u] == -1:
                    colour[u] = colour[v] ^ 1
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle, or None if bipartite."""
    best: int | None = None
    for start in range(g.n):
        # BFS parity distances from start; an edge joining equal parities
        # closes an odd closed walk of known length through start.
        dist = [-1] * g.n
        dist[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for v in queue:
                rest = g.adj_mask(v)
                while rest:
                    low = rest & -rest
                    u = low.bit_length() - 1
                    rest ^= low
                    if dist[u] == -1:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
                    elif dist[u] == dist[v]:
                        cand = dist[u] + dist[v] + 1
                        if best is None or cand < best:
                            best = cand
            queue = nxt
    return best


def iter_subsets(universe: list[int], size: int) -> Iterator[tuple[int, ...]]:
    from itertools import combinations

    return combinations(universe, size)
