"""Exact decision procedures: colourability, cliques, independence, criticality.

The colouring solver is branch-and-bound with saturation-degree vertex
ordering; clique search is bitmask backtracking.  Everything is exact and
deterministic: same input, same answer, same witness.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Optional

from .graph import Graph, GraphError

Colouring = tuple[int, ...]


def verify_colouring(g: Graph, colouring: Colouring, k: int) -> bool:
    """Independent propriety check applied to every colouring before it is reported."""
    if len(colouring) != g.n:
        return False
    if any(not (0 <= c < k) for c in colouring) and g.n > 0:
        return False
    return all(colouring[u] != colouring[v] for u, v in g.edges())


def is_k_colourable(g: Graph, k: int) -> Optional[Colouring]:
    """A proper k-colouring if one exists, else None; exhaustive and deterministic."""
    if k < 0:
        raise GraphError(f"colour count must be nonnegative, got {k}")
    n = g.n
    if n == 0:
        return ()
    if k == 0:
        return None
    if all(g.adj_mask(v) == 0 for v in range(n)):
        return (0,) * n
    if k >= n:
        return tuple(range(n))

    full = (1 << k) - 1
    colour = [-1] * n
    forbid = [0] * n  # bitmask of colours already used by neighbours

    def select() -> int:
        # Highest saturation, then highest degree, then lowest index.
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if colour[v] == -1:
                key = (forbid[v].bit_count(), g.degree(v))
                if key > best_key:
                    best, best_key = v, key
        return best

    def extend(done: int, max_used: int) -> bool:
        if done == n:
            return True
        v = select()
        allowed = ~forbid[v] & full
        # Symmetry breaking: at most one previously unused colour is tried.
        cap = min(k - 1, max_used + 1)
        allowed &= (1 << (cap + 1)) - 1
        while allowed:
            low = allowed & -allowed
            c = low.bit_length() - 1
            allowed ^= low
            colour[v] = c
            touched = []
            rest = g.adj_mask(v)
            while rest:
                lw = rest & -rest
                u = lw.bit_length() - 1
                rest ^= lw
                if colour[u] == -1 and not forbid[u] >> c & 1:
                    forbid[u] |= 1 << c
                    touched.append(u)
            if extend(done + 1, max(max_used, c)):
                return True
            for u in touched:
                forbid[u] &= ~(1 << c)
            colour[v] = -1
        return False

    if not extend(0, -1):
        return None
    result = tuple(colour)
    assert verify_colouring(g, result, k)
    return result


def chromatic_number(g: Graph) -> int:
    """Least k admitting a proper k-colouring; 0 for the empty graph."""
    if g.n == 0:
        return 0
    k = clique_number(g)
    while is_k_colourable(g, k) is None:
        k += 1
    return k


def cliques_of_size(g: Graph, q: int) -> Iterator[tuple[int, ...]]:
    """All q-cliques, each exactly once, in ascending lexicographic order."""
    if q < 1:
        raise GraphError(f"clique size must be positive, got {q}")
    n = g.n

    def extend(clique: tuple[int, ...], candidates: int) -> Iterator[tuple[int, ...]]:
        if len(clique) == q:
            yield clique
            return
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            higher = ~((1 << (v + 1)) - 1)
            yield from extend(clique + (v,), candidates & g.adj_mask(v) & higher)

    yield from extend((), (1 << n) - 1)


def has_clique(g: Graph, q: int) -> bool:
    if q < 1:
        raise GraphError(f"clique size must be positive, got {q}")
    if q > g.n:
        return False
    return next(cliques_of_size(g, q), None) is not None


def mask_has_clique(g: Graph, mask: int, q: int) -> bool:
    """True iff the vertex set given by mask contains a q-clique of g."""
    if q <= 0:
        return True

    def extend(depth: int, candidates: int) -> bool:
        if depth == q:
            return True
        if candidates.bit_count() < q - depth:
            return False
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if extend(depth + 1, candidates & g.adj_mask(v) & ~((1 << (v + 1)) - 1)):
                return True
        return False

    return extend(0, mask)


def max_clique(g: Graph) -> frozenset[int]:
    """One maximum clique, found by branch-and-bound with a greedy colour bound."""
    n = g.n
    if n == 0:
        return frozenset()
    best: list[int] = []

    def colour_bound(candidates: int) -> list[tuple[int, int]]:
        # Greedy colouring of the candidate set; a vertex in colour class c
        # can extend the clique by at most c vertices, so sorting by class
        # makes the first failed bound prune the whole remainder.
        classes: list[int] = []
        placed: list[tuple[int, int]] = []
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            for idx, cls in enumerate(classes):
                if not cls & g.adj_mask(v):
                    classes[idx] |= 1 << v
                    placed.append((v, idx + 1))
                    break
            else:
                classes.append(1 << v)
                placed.append((v, len(classes)))
        placed.sort(key=lambda pair: pair[1])
        return placed

    def expand(clique: list[int], candidates: int) -> None:
        nonlocal best
        order = colour_bound(candidates)
        for v, bound in reversed(order):
            if len(clique) + bound <= len(best):
                return
            clique.append(v)
            nxt = candidates & g.adj_mask(v)
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = clique[:]
            clique.pop()
            candidates &= ~(1 << v)

    expand([], (1 << n) - 1)
    return frozenset(best)


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return len(max_clique(g))


def complement_masks(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks(tuple((~g.adj_mask(v) & full & ~(1 << v)) for v in range(g.n)))


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact independence number with one maximum independent set as witness."""
    if g.n == 0:
        return 0, frozenset()
    witness = max_clique(complement_masks(g))
    assert all(not g.has_edge(u, v) for u in witness for v in witness if u < v)
    return len(witness), witness


def is_vertex_critical(g: Graph, k: int) -> bool:
    """True iff chi(g) = k and deleting any vertex drops the chromatic number."""
    if k < 1:
        raise GraphError(f"criticality level must be positive, got {k}")
    if chromatic_number(g) != k:
        return False
    return all(chromatic_number(g.without_vertex(v)) == k - 1 for v in range(g.n))


def bipartite_matching_number(g: Graph) -> int:
    """Maximum matching size of a bipartite graph, by augmenting paths.

    Dual oracle for the independence solver: on bipartite graphs the
    independence number equals n minus the matching number.
    """
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbours(v):
                if colour[u] == -1:
                    colour[u] = colour[v] ^ 1
                    stack.append(u)
                elif colour[u] == colour[v]:
                    raise GraphError("matching oracle requires a bipartite graph")
    left = [v for v in range(g.n) if colour[v] == 0]
    match: dict[int, int] = {}

    def augment(v: int, seen: set[int]) -> bool:
        for u in g.neighbours(v):
            if u in seen:
                continue
            seen.add(u)
            if u not in match or augment(match[u], seen):
                match[u] = v
                return True
        return False

    size = 0
    for v in left:
        if augment(v, set()):
            size += 1
    return size


def brute_force_chromatic_number(g: Graph, limit: int = 8) -> int:
    """Oracle: smallest k over exhaustive k^n assignment enumeration (tiny n only)."""
    n = g.n
    if n == 0:
        return 0
    if n > limit:
        raise GraphError(f"brute-force oracle limited to n <= {limit}")
    edges = g.edges()
    for k in range(1, n + 1):
        for assignment in product(range(k), repeat=n):
            if all(assignment[u] != assignment[v] for u, v in edges):
                return k
    raise AssertionError("unreachable: n colours always suffice")
