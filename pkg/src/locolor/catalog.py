"""Constructors for every named graph and graph-building operation.

The named 4-chromatic graphs (H0, H1, H2, C7bar, H2plus, T0, H1plusplus,
W7) are transcribed once from their published drawings and frozen here as
edge lists with the original vertex labels.  Cross-checks against
independent constructions (complement of C7, Moser spindle, the
edge-addition chain) live in the claims registry and guard against
transcription errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError

_CYCLE7 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]

_ZOO: dict[str, tuple[int, list[tuple[int, int]], dict[str, int]]] = {
    "H0": (
        7,
        _CYCLE7 + [(5, 0), (0, 2), (1, 3), (4, 6)],
        {f"a{i}": i for i in range(7)},
    ),
    "H1": (
        7,
        _CYCLE7 + [(3, 5), (5, 0), (0, 2), (2, 4), (6, 1)],
        {f"a{i}": i for i in range(7)},
    ),
    "H2": (
        7,
        _CYCLE7 + [(1, 3), (3, 5), (5, 0), (0, 2), (2, 4), (4, 6)],
        {f"a{i}": i for i in range(7)},
    ),
    "C7bar": (
        7,
        _CYCLE7 + [(0, 2), (2, 4), (4, 6), (6, 1), (1, 3), (3, 5), (5, 0)],
        {f"a{i}": i for i in range(7)},
    ),
    "H2plus": (
        8,
        _CYCLE7
        + [(1, 3), (3, 5), (5, 0), (0, 2), (2, 4), (4, 6)]
        + [(7, 0), (7, 2), (7, 5)],
        {**{f"v{i}": i for i in range(7)}, "u": 7},
    ),
    "T0": (
        10,
        _CYCLE7
        + [(7, 0), (7, 8), (7, 9)]
        + [(8, i) for i in (0, 2, 3, 4, 5, 6)]
        + [(9, i) for i in (0, 1, 2, 3, 4, 5)],
        {**{f"v{i}": i for i in range(7)}, "t": 7, "u1": 8, "u6": 9},
    ),
    "H1plusplus": (
        9,
        _CYCLE7
        + [(3, 5), (5, 0), (0, 2), (2, 4), (6, 1)]
        + [(7, 0), (7, 2), (7, 3), (8, 0), (8, 5), (8, 3)],
        {**{f"a{i}": i for i in range(7)}, "ul": 7, "ur": 8},
    ),
}

ZOO_NAMES = ("H0", "H1", "H2", "C7bar", "H2plus", "T0", "H1plusplus", "W7")

# The seven graphs related by the containment/homomorphism diagram.
DIAGRAM_NAMES = ("H0", "H1", "H2", "C7bar", "H2plus", "H1plusplus", "T0")

# Diagram arrows (source, target): full containment arrows plus the two
# homomorphism-only arrows into H2plus.
DIAGRAM_ARROWS = (
    ("H0", "H1"),
    ("H1", "H2"),
    ("H1", "H1plusplus"),
    ("H2", "H2plus"),
    ("H2", "C7bar"),
    ("H1plusplus", "H2plus"),
    ("T0", "H2plus"),
)


@dataclass(frozen=True)
class NamedGraph:
    identifier: str
    graph: Graph
    labels: dict[str, int]


def catalog_names() -> list[str]:
    return list(ZOO_NAMES)


def _wheel_order(name: str) -> int | None:
    if name.startswith("W") and name[1:].isdigit():
        return int(name[1:])
    return None


def entry(name: str) -> NamedGraph:
    """Catalog lookup: the named graph together with its vertex-label map."""
    if name in _ZOO:
        n, edges, labels = _ZOO[name]
        return NamedGraph(name, Graph(n, edges), dict(labels))
    k = _wheel_order(name)
    if k is not None:
        if k < 3 or k % 2 == 0:
            raise GraphError(f"wheel W{k} not in catalog: need odd k >= 3")
        return NamedGraph(name, wheel(k), {"hub": k, **{f"v{i}": i for i in range(k)}})
    raise GraphError(f"unknown catalog graph {name!r}")


def named(name: str) -> Graph:
    return entry(name).graph


def labels(name: str) -> dict[str, int]:
    return entry(name).labels


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks(tuple(~g.adj_mask(v) & full & ~(1 << v) for v in range(g.n)))


def wheel(k: int) -> Graph:
    """Hub joined to every vertex of a k-cycle."""
    if k < 3:
        raise GraphError(f"wheel needs a cycle of length >= 3, got {k}")
    return Graph(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(k, i) for i in range(k)])


def turan(r: int, n: int) -> Graph:
    """Complete r-partite graph on n vertices with part sizes as equal as possible."""
    if r < 1:
        raise GraphError(f"turan needs r >= 1, got {r}")
    if n < r:
        raise GraphError(f"turan needs n >= r, got n={n}, r={r}")
    base, extra = divmod(n, r)
    sizes = [base + 1] * extra + [base] * (r - extra)
    return blow_up(complete(r), sizes)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of g and h plus every cross edge."""
    offset = g.n
    edges = g.edges()
    edges += [(u + offset, v + offset) for u, v in h.edges()]
    edges += [(u, v + offset) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


def blow_up(g: Graph, sizes: list[int] | tuple[int, ...]) -> Graph:
    """Replace vertex v by an independent class of sizes[v] vertices.

    A size of 0 deletes the vertex; this realises "tiny weight" limit
    objects exactly, at the cost of leaving the class empty.
    """
    if len(sizes) != g.n:
        raise GraphError(f"expected {g.n} class sizes, got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise GraphError("class sizes must be nonnegative")
    starts = []
    total = 0
    for s in sizes:
        starts.append(total)
        total += s
    edges = []
    for u, v in g.edges():
        for i in range(sizes[u]):
            for j in range(sizes[v]):
                edges.append((starts[u] + i, starts[v] + j))
    return Graph(total, edges)


def balanced_blowup(g: Graph, t: int) -> Graph:
    if t < 1:
        raise GraphError(f"balanced blow-up factor must be >= 1, got {t}")
    return blow_up(g, [t] * g.n)


def kneser_vertices(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of {1..n} in lexicographic order."""
    if k < 1 or k > n:
        raise GraphError(f"need 1 <= k <= n, got n={n}, k={k}")
    return list(combinations(range(1, n + 1), k))


def _subset_mask(subset: tuple[int, ...]) -> int:
    mask = 0
    for x in subset:
        mask |= 1 << x
    return mask


def kneser(n: int, k: int) -> Graph:
    """Vertex per k-subset of {1..n}, edge iff the subsets are disjoint."""
    verts = kneser_vertices(n, k)
    masks = [_subset_mask(s) for s in verts]
    edges = [
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if not masks[i] & masks[j]
    ]
    return Graph(len(verts), edges)


def cyclically_independent(subset: tuple[int, ...], n: int) -> bool:
    members = _subset_mask(subset)
    for i in range(1, n):
        if members >> i & 1 and members >> (i + 1) & 1:
            return False
    return not (members >> n & 1 and members >> 1 & 1)


def schrijver_vertices(n: int, k: int) -> list[tuple[int, ...]]:
    return [s for s in kneser_vertices(n, k) if cyclically_independent(s, n)]


def schrijver(n: int, k: int) -> Graph:
    """Induced subgraph of kneser(n, k) on cyclically independent k-subsets."""
    verts = schrijver_vertices(n, k)
    masks = [_subset_mask(s) for s in verts]
    edges = [
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if not masks[i] & masks[j]
    ]
    return Graph(len(verts), edges)


def moser_spindle() -> Graph:
    """Independent construction: two hinged rhombi with their tips joined."""
    # Rhombus = two triangles glued on an edge; both rhombi share the hinge 0,
    # with tips 3 and 6 joined.
    edges = [
        (0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
        (0, 4), (0, 5), (4, 5), (4, 6), (5, 6),
        (3, 6),
    ]
    return Graph(7, edges)


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters for the layered Schrijver construction.

    l is the number of complete-multipartite layers (the l - 1 rectangles
    plus the class of the extra vertex v); the Schrijver part is SG(n, k)
    with n = 2k + f; s is the common layer size, a multiple of n.
    """

    l: int
    k: int
    f: int
    s: int

    def __post_init__(self):
        if self.l < 2:
            raise GraphError(f"need l >= 2 (got {self.l}): no rectangles below that")
        if self.k < 1:
            raise GraphError(f"need k >= 1, got {self.k}")
        if not 0 <= self.f < self.k:
            raise GraphError(f"need 0 <= f < k, got f={self.f}, k={self.k}")
        if self.s < 1 or self.s % self.n != 0:
            raise GraphError(f"need s a positive multiple of n={self.n}, got {self.s}")

    @property
    def n(self) -> int:
        return 2 * self.k + self.f


@dataclass(frozen=True)
class ThresholdConstruction:
    params: ConstructionParams
    graph: Graph
    rectangle_classes: tuple[tuple[int, ...], ...]  # one vertex tuple per rectangle
    v_class: tuple[int, ...]
    sg_vertices: tuple[int, ...]
    sg_subsets: tuple[tuple[int, ...], ...]


def threshold_construction(params: ConstructionParams) -> ThresholdConstruction:
    """Blown-up layered graph over SG(n, k): locally l-partite yet (f+2)-chromatic.

    Layout: l - 1 rectangles, each s vertices (the n cyclic-pair classes
    v_{i,i+1} blown up by s/n), forming a complete (l-1)-partite graph; a
    class of s vertices for v joined to every rectangle; an unblown copy of
    SG(n, k) whose vertex A is adjacent to the classes of every v_{i,i+1}
    with i in A or i+1 in A, and not adjacent to the v class.
    """
    l, k, n, s = params.l, params.k, params.n, params.s
    per_class = s // n

    rect_count = l - 1
    rect_size = s
    v_start = rect_count * rect_size
    sg_start = v_start + s
    subsets = schrijver_vertices(n, k)
    total = sg_start + len(subsets)

    edges: list[tuple[int, int]] = []
    rectangles = tuple(
        tuple(range(r * rect_size, (r + 1) * rect_size)) for r in range(rect_count)
    )
    # Rectangles are mutually completely joined.
    for a in range(rect_count):
        for b in range(a + 1, rect_count):
            edges += [(u, w) for u in rectangles[a] for w in rectangles[b]]
    v_class = tuple(range(v_start, v_start + s))
    for r in rectangles:
        edges += [(u, w) for u in r for w in v_class]

    # Copy of v_{i,i+1} number i (1-based) inside rectangle r occupies
    # positions (i-1)*per_class .. i*per_class - 1 of that rectangle.
    sg_vertices = tuple(range(sg_start, total))
    for idx, subset in enumerate(subsets):
        a = sg_start + idx
        hit = set()
        for x in subset:
            hit.add(x)          # pair {x, x+1} via i = x
            hit.add(x - 1 if x > 1 else n)  # pair {x-1, x} via i = x - 1
        for r in range(rect_count):
            base = r * rect_size
            for i in hit:
                for c in range(per_class):
                    edges.append((a, base + (i - 1) * per_class + c))
    masks = [_subset_mask(sub) for sub in subsets]
    for i in range(len(subsets)):
        for j in range(i + 1, len(subsets)):
            if not masks[i] & masks[j]:
                edges.append((sg_start + i, sg_start + j))

    return ThresholdConstruction(
        params=params,
        graph=Graph(total, edges),
        rectangle_classes=rectangles,
        v_class=v_class,
        sg_vertices=sg_vertices,
        sg_subsets=tuple(subsets),
    )
