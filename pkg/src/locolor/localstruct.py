"""Family predicates and pair machinery for locally colourable graphs.

Covers membership tests for the families F(a,b) (common neighbourhood of
every a-clique is b-colourable), the adjacent/dense/sparse trichotomy of
vertex pairs at clique level b, dense-pair graphs and their reachability,
odd-wheel detection, edge-maximality within a family, and the exact
rational inequality checks behind the degree-lifting lemma.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .colouring import has_clique, is_k_colourable, mask_has_clique
from .graph import (
    Graph,
    GraphError,
    common_neighbourhood_mask,
    connected_components,
    induced_subgraph,
    is_bipartite,
    min_degree,
    set_to_mask,
)
from .homomorphism import dedupe_up_to_isomorphism


class PairKind(enum.Enum):
    ADJACENT = "adjacent"
    DENSE = "dense"
    SPARSE = "sparse"


@dataclass(frozen=True)
class PairClass:
    """Trichotomy class of a vertex pair, tagged with the clique level used."""

    kind: PairKind
    b: int


@dataclass(frozen=True)
class FamilyCheck:
    holds: bool
    witness: Optional[tuple[int, ...]]  # violating a-clique when holds is False


def is_a_locally_b_partite(g: Graph, a: int, b: int) -> FamilyCheck:
    """Is the common neighbourhood of every a-clique b-colourable?"""
    if a < 1 or b < 1:
        raise GraphError(f"family parameters must be positive, got a={a}, b={b}")
    from .colouring import cliques_of_size

    for clique in cliques_of_size(g, a):
        mask = common_neighbourhood_mask(g, set_to_mask(clique))
        local = induced_subgraph(g, _mask_vertices(mask))
        if is_k_colourable(local, b) is None:
            return FamilyCheck(False, clique)
    return FamilyCheck(True, None)


def _mask_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class NestingReport:
    l: int
    memberships: tuple[bool, ...]  # membership in F(a, l+1-a) for a = 1..l
    clique_free: bool  # K_{l+2}-freeness
    ok: bool


def family_nesting_check(g: Graph, l: int) -> NestingReport:
    """Check the chain F(1,l) within F(2,l-1) within ... within F(l,1) on g.

    Membership must be monotone along the chain and the final family must
    coincide with K_{l+2}-freeness.
    """
    if l < 1:
        raise GraphError(f"need l >= 1, got {l}")
    memberships = tuple(
        is_a_locally_b_partite(g, a, l + 1 - a).holds for a in range(1, l + 1)
    )
    clique_free = not has_clique(g, l + 2)
    ok = all(
        (not memberships[i]) or memberships[i + 1] for i in range(l - 1)
    ) and memberships[-1] == clique_free
    return NestingReport(l, memberships, clique_free, ok)


def classify_pair(g: Graph, u: int, v: int, b: int) -> PairClass:
    """Adjacent if uv is an edge; else dense when the common neighbourhood
    holds a b-clique; else sparse."""
    if u == v:
        raise GraphError(f"pair must be two distinct vertices, got ({u},{v})")
    if b < 1:
        raise GraphError(f"clique level must be positive, got {b}")
    if g.has_edge(u, v):
        return PairClass(PairKind.ADJACENT, b)
    mask = g.adj_mask(u) & g.adj_mask(v)
    if mask_has_clique(g, mask, b):
        return PairClass(PairKind.DENSE, b)
    return PairClass(PairKind.SPARSE, b)


def dense_set(g: Graph, v: int, b: int = 2) -> frozenset[int]:
    """All vertices forming a b-dense pair with v."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return frozenset(
        u
        for u in range(g.n)
        if u != v and classify_pair(g, u, v, b).kind is PairKind.DENSE
    )


def dense_pair_graph(g: Graph, b: int = 2) -> Graph:
    """Graph on V(g) whose edges are exactly the b-dense pairs."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if classify_pair(g, u, v, b).kind is PairKind.DENSE
    ]
    return Graph(g.n, edges)


def quasidense_reachable(g: Graph, u: int, b: int = 2) -> frozenset[int]:
    """Vertices joined to u by a chain of b-dense pairs (u itself included)."""
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    dg = dense_pair_graph(g, b)
    for comp in connected_components(dg):
        if u in comp:
            return comp
    raise AssertionError("vertex missing from its own component")


def contains_odd_wheel(g: Graph) -> bool:
    """True iff some vertex's neighbourhood induces a non-bipartite graph."""
    for v in range(g.n):
        nbrs = _mask_vertices(g.adj_mask(v))
        if not is_bipartite(induced_subgraph(g, nbrs)):
            return True
    return False


@dataclass(frozen=True)
class EdgeMaximality:
    maximal: bool
    extensions: tuple[Graph, ...]  # iso classes of in-family one-edge extensions


def is_edge_maximal_in_family(g: Graph, a: int, b: int) -> EdgeMaximality:
    """Does adding any single non-edge leave the family F(a,b)?

    Returns the isomorphism classes of the extensions that stay inside the
    family; the graph is edge-maximal exactly when that list is empty.
    """
    if not is_a_locally_b_partite(g, a, b).holds:
        raise GraphError("graph is not in the family, edge-maximality undefined")
    staying = []
    for u, v in g.non_edges():
        extended = g.with_edge(u, v)
        if is_a_locally_b_partite(extended, a, b).holds:
            staying.append(extended)
    classes = tuple(dedupe_up_to_isomorphism(staying))
    return EdgeMaximality(not classes, classes)


@dataclass(frozen=True)
class LiftingReport:
    """Exact evaluation of the degree-lifting inequalities for one (G, X, b, gamma).

    applicable is the hypothesis (b + gamma > s and min degree above the
    (1 - 1/(b+gamma)) fraction); the two conclusion flags are meaningful
    only when applicable.
    """

    s: int
    applicable: bool
    common_size: int
    size_lower_bound: int
    size_ok: bool
    local_min_degree: Optional[int]
    min_degree_fraction_bound: Optional[Fraction]
    min_degree_ok: bool


def lifting_inequality_check(
    g: Graph, xs: Iterable[int], b: int, gamma: Fraction
) -> LiftingReport:
    """Check |G_X| >= s*delta - (s-1)*n and the lifted min-degree fraction."""
    members = sorted(set(xs))
    if not members:
        raise GraphError("X must be nonempty")
    s = len(members)
    gamma = Fraction(gamma)
    n = g.n
    delta = min_degree(g)
    hypothesis = b + gamma > s and Fraction(delta) > (1 - Fraction(1, b + gamma)) * n
    mask = common_neighbourhood_mask(g, set_to_mask(members))
    verts = _mask_vertices(mask)
    common_size = len(verts)
    bound = s * delta - (s - 1) * n
    if not hypothesis:
        return LiftingReport(s, False, common_size, bound, False, None, None, False)
    size_ok = common_size >= bound
    local = induced_subgraph(g, verts)
    if local.n == 0:
        return LiftingReport(s, True, 0, bound, size_ok, None, None, False)
    local_delta = min_degree(local)
    fraction_bound = (1 - Fraction(1, b - s + gamma)) * local.n
    min_degree_ok = Fraction(local_delta) > fraction_bound
    return LiftingReport(
        s, True, common_size, bound, size_ok, local_delta, fraction_bound, min_degree_ok
    )
