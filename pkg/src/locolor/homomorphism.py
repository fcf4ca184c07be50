"""Homomorphism existence, subgraph embedding, and graph isomorphism.

Non-existence answers are exhaustion certificates: the backtracking search
uses only sound pruning (odd-girth and clique-number prechecks, domain
propagation along placed neighbours, degree bounds for injective maps) and
records how many nodes it expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .colouring import clique_number
from .graph import Graph, is_bipartite, odd_girth


@dataclass(frozen=True)
class Homomorphism:
    source: Graph
    target: Graph
    mapping: tuple[int, ...]

    def is_valid(self) -> bool:
        """Edge-by-edge re-validation, independent of the search that found it."""
        if len(self.mapping) != self.source.n:
            return False
        if any(not 0 <= t < self.target.n for t in self.mapping):
            return False
        return all(
            self.target.has_edge(self.mapping[u], self.mapping[v])
            for u, v in self.source.edges()
        )

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == self.source.n

    @property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.n


@dataclass(frozen=True)
class SearchResult:
    hom: Optional[Homomorphism]
    nodes_expanded: int


def _source_order(g: Graph) -> list[int]:
    """Connected ordering: after the first vertex, prefer vertices with the
    most already-placed neighbours (ties: higher degree, lower index)."""
    n = g.n
    placed: list[int] = []
    placed_mask = 0
    for _ in range(n):
        best, best_key = -1, (-2, -2, 0)
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            key = ((g.adj_mask(v) & placed_mask).bit_count(), g.degree(v), -v)
            if key > best_key:
                best, best_key = v, key
        placed.append(best)
        placed_mask |= 1 << best
    return placed


def _search(
    g: Graph,
    h: Graph,
    injective: bool = False,
    induced: bool = False,
    domains: Optional[list[int]] = None,
) -> SearchResult:
    n, m = g.n, h.n
    if n == 0:
        return SearchResult(Homomorphism(g, h, ()), 0)
    if m == 0:
        return SearchResult(None, 0)
    if injective and m < n:
        return SearchResult(None, 0)

    full = (1 << m) - 1
    if domains is None:
        dom = [full] * n
    else:
        dom = list(domains)
    if injective:
        # Degree pruning is sound here: an injective map sends a vertex's
        # neighbourhood injectively into its image's neighbourhood.
        for v in range(n):
            allowed = 0
            for t in range(m):
                if h.degree(t) >= g.degree(v):
                    allowed |= 1 << t
            dom[v] &= allowed
    order = _source_order(g)
    mapping = [-1] * n
    used = 0
    nodes = 0

    def place(idx: int) -> bool:
        nonlocal used, nodes
        if idx == n:
            return True
        v = order[idx]
        cands = dom[v]
        if injective:
            cands &= ~used
        rest = cands
        while rest:
            low = rest & -rest
            t = low.bit_length() - 1
            rest ^= low
            nodes += 1
            ok = True
            if induced:
                for u in range(n):
                    if mapping[u] != -1 and u != v and not g.has_edge(u, v):
                        if h.has_edge(mapping[u], t):
                            ok = False
                            break
            if ok:
                saved: list[tuple[int, int]] = []
                adj_t = h.adj_mask(t)
                nbrs = g.adj_mask(v)
                while nbrs:
                    lw = nbrs & -nbrs
                    u = lw.bit_length() - 1
                    nbrs ^= lw
                    if mapping[u] == -1:
                        new_dom = dom[u] & adj_t
                        if new_dom != dom[u]:
                            saved.append((u, dom[u]))
                            dom[u] = new_dom
                        if new_dom == 0:
                            ok = False
                            break
                    elif not adj_t >> mapping[u] & 1:
                        ok = False
                        break
                if ok:
                    mapping[v] = t
                    used |= 1 << t
                    if place(idx + 1):
                        return True
                    mapping[v] = -1
                    used &= ~(1 << t)
                for u, old in saved:
                    dom[u] = old
        return False

    if all(dom[v] for v in range(n)) and place(0):
        hom = Homomorphism(g, h, tuple(mapping))
        assert hom.is_valid()
        return SearchResult(hom, nodes)
    return SearchResult(None, nodes)


def hom_search(g: Graph, h: Graph) -> SearchResult:
    """Exhaustive homomorphism search with sound prechecks and node counting."""
    if g.n > 0 and g.edge_count > 0:
        if h.edge_count == 0:
            return SearchResult(None, 0)
        og_g = odd_girth(g)
        if og_g is not None:
            og_h = odd_girth(h)
            # An odd closed walk maps to an odd closed walk of the same
            # length, so the target's odd girth cannot exceed the source's.
            if og_h is None or og_h > og_g:
                return SearchResult(None, 0)
        if clique_number(g) > clique_number(h):
            return SearchResult(None, 0)
    return _search(g, h)


def find_hom(g: Graph, h: Graph) -> Optional[Homomorphism]:
    return hom_search(g, h).hom


def find_injective_hom(g: Graph, h: Graph) -> Optional[Homomorphism]:
    """Injective edge-preserving map: subgraph containment, not induced."""
    return _search(g, h, injective=True).hom


def find_induced_embedding(g: Graph, h: Graph) -> Optional[Homomorphism]:
    """Injective map preserving both edges and non-edges."""
    return _search(g, h, injective=True, induced=True).hom


def _refinement_colours(g: Graph, rounds: int | None = None) -> tuple[int, ...]:
    """Iterated degree refinement; stable colouring as canonical small ints."""
    colours = [g.degree(v) for v in range(g.n)]
    for _ in range(rounds if rounds is not None else g.n):
        signatures = [
            (colours[v], tuple(sorted(colours[u] for u in g.neighbours(v))))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if refined == colours:
            break
        colours = refined
    return tuple(colours)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism via refinement-pruned induced-embedding search."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    cg, ch = _refinement_colours(g), _refinement_colours(h)
    if sorted(cg) != sorted(ch):
        return False
    domains = []
    for v in range(g.n):
        mask = 0
        for t in range(h.n):
            if cg[v] == ch[t]:
                mask |= 1 << t
        domains.append(mask)
    hom = _search(g, h, injective=True, induced=True, domains=domains).hom
    # Induced + injective + equal sizes and edge counts is a full isomorphism.
    return hom is not None


def brute_force_isomorphic(g: Graph, h: Graph, limit: int = 7) -> bool:
    """Oracle: try every vertex permutation (tiny n only)."""
    if g.n > limit or h.n > limit:
        raise ValueError(f"permutation oracle limited to n <= {limit}")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    edges_h = {frozenset(e) for e in h.edges()}
    for perm in permutations(range(g.n)):
        if all(frozenset((perm[u], perm[v])) in edges_h for u, v in g.edges()):
            return True
    return False


def dedupe_up_to_isomorphism(graphs: list[Graph]) -> list[Graph]:
    """Representatives of the isomorphism classes, in first-seen order."""
    reps: list[Graph] = []
    for g in graphs:
        if not any(are_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


@dataclass(frozen=True)
class DiagramReport:
    names: tuple[str, ...]
    matrix: dict[tuple[str, str], Optional[Homomorphism]]
    nodes: dict[tuple[str, str], int]
    expected: frozenset[tuple[str, str]]
    mismatches: tuple[tuple[str, str, str], ...]  # (src, dst, "hom"/"nohom")

    @property
    def ok(self) -> bool:
        return not self.mismatches


def reachability_closure(
    names: list[str], arrows: list[tuple[str, str]]
) -> frozenset[tuple[str, str]]:
    """Reflexive-transitive closure of the arrow set over the given names."""
    reach = {a: {a} for a in names}
    changed = True
    while changed:
        changed = False
        for src, dst in arrows:
            for a in names:
                if src in reach[a] and dst not in reach[a]:
                    reach[a].add(dst)
                    changed = True
    return frozenset((a, b) for a in names for b in reach[a])


def verify_hom_diagram(
    graphs: list[tuple[str, Graph]], arrows: list[tuple[str, str]]
) -> DiagramReport:
    """Full Hom/NoHom matrix versus the reachability closure of the arrows."""
    names = tuple(name for name, _ in graphs)
    lookup = dict(graphs)
    expected = reachability_closure(list(names), arrows)
    matrix: dict[tuple[str, str], Optional[Homomorphism]] = {}
    nodes: dict[tuple[str, str], int] = {}
    mismatches = []
    for a in names:
        for b in names:
            result = hom_search(lookup[a], lookup[b])
            matrix[(a, b)] = result.hom
            nodes[(a, b)] = result.nodes_expanded
            found = result.hom is not None
            if found and (a, b) not in expected:
                mismatches.append((a, b, "hom"))
            elif not found and (a, b) in expected:
                mismatches.append((a, b, "nohom"))
    return DiagramReport(names, matrix, nodes, expected, tuple(mismatches))
