"""Exhaustive labelled-graph enumeration for the smallest-witness claim.

Checks, for each n up to max_n, how many labelled n-vertex graphs are
locally bipartite with chromatic number at least 4.  All 2^C(n,2) labelled
graphs are scanned; cheap integer filters (iterated removal of vertices of
degree below 3, neighbourhood bipartiteness with early exit) run before
the exact colouring call.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import is_k_colourable
from .graph import Graph, GraphError
from .graphio import to_graph6
from .homomorphism import are_isomorphic

ENUMERATION_LIMIT = 7


def _locally_bipartite_masks(n: int, masks: list[int]) -> bool:
    for v in range(n):
        nb = masks[v]
        if nb.bit_count() < 3:
            continue  # too small to hold an odd cycle
        colour = 0  # bitmask of side-1 vertices
        seen = 0
        rest_vertices = nb
        while rest_vertices:
            low = rest_vertices & -rest_vertices
            s = low.bit_length() - 1
            rest_vertices ^= low
            if seen >> s & 1:
                continue
            seen |= 1 << s
            stack = [s]
            while stack:
                x = stack.pop()
                side = colour >> x & 1
                nbrs = masks[x] & nb
                while nbrs:
                    lw = nbrs & -nbrs
                    y = lw.bit_length() - 1
                    nbrs ^= lw
                    if not seen >> y & 1:
                        seen |= 1 << y
                        if not side:
                            colour |= 1 << y
                        stack.append(y)
                    elif (colour >> y & 1) == side:
                        return False
    return True


def _peel_alive(n: int, masks: list[int]) -> int:
    """Vertices surviving iterated removal of degree < 3; chi >= 4 lives in there."""
    alive = (1 << n) - 1
    changed = True
    while changed and alive:
        changed = False
        for v in range(n):
            if alive >> v & 1 and (masks[v] & alive).bit_count() < 3:
                alive &= ~(1 << v)
                changed = True
    return alive


def _extract(n: int, masks: list[int], alive: int) -> Graph:
    verts = []
    rest = alive
    while rest:
        low = rest & -rest
        verts.append(low.bit_length() - 1)
        rest ^= low
    index = {v: i for i, v in enumerate(verts)}
    core = [0] * len(verts)
    for v in verts:
        nbrs = masks[v] & alive
        while nbrs:
            low = nbrs & -nbrs
            core[index[v]] |= 1 << index[low.bit_length() - 1]
            nbrs ^= low
    return Graph.from_masks(tuple(core))


@dataclass(frozen=True)
class EnumerationReport:
    max_n: int
    counts: dict[int, int]
    witnesses: dict[int, tuple[str, ...]]  # graph6 strings, first few per n
    h0_among_witnesses: bool | None  # populated once n = 7 is enumerated

    @property
    def smallest_witness_order(self) -> int | None:
        hits = [n for n, c in sorted(self.counts.items()) if c > 0]
        return hits[0] if hits else None


def enumerate_smallest_4chromatic_locally_bipartite(
    max_n: int, witness_cap: int = 4
) -> EnumerationReport:
    """Count labelled locally bipartite graphs with chi >= 4 for each n <= max_n."""
    if max_n > ENUMERATION_LIMIT:
        raise GraphError(
            f"labelled enumeration supported up to n = {ENUMERATION_LIMIT}, got {max_n}"
        )
    if max_n < 1:
        raise GraphError(f"max_n must be positive, got {max_n}")
    counts: dict[int, int] = {}
    witnesses: dict[int, tuple[str, ...]] = {}
    h0_found: bool | None = None
    h0 = None
    for n in range(1, max_n + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        bit_edges = len(pairs)
        count = 0
        kept: list[str] = []
        found_h0_here = False
        for code in range(1 << bit_edges):
            masks = [0] * n
            mm = code
            while mm:
                low = mm & -mm
                u, v = pairs[low.bit_length() - 1]
                masks[u] |= 1 << v
                masks[v] |= 1 << u
                mm ^= low
            alive = _peel_alive(n, masks)
            if alive.bit_count() < 4:
                continue
            if not _locally_bipartite_masks(n, masks):
                continue
            if is_k_colourable(_extract(n, masks, alive), 3) is not None:
                continue
            count += 1
            g = Graph.from_masks(tuple(masks))
            if len(kept) < witness_cap:
                kept.append(to_graph6(g))
            if n == 7 and not found_h0_here and g.edge_count == 11:
                if h0 is None:
                    from .catalog import named

                    h0 = named("H0")
                found_h0_here = are_isomorphic(g, h0)
        counts[n] = count
        witnesses[n] = tuple(kept)
        if n == 7:
            h0_found = found_h0_here
    return EnumerationReport(max_n, counts, witnesses, h0_found)
