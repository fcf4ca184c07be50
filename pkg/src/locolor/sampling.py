"""Seeded instance generators for the property suites.

Uniform random graphs essentially never satisfy hypotheses like "minimum
degree above half", so the generators draw random-weight blow-ups of
catalog graphs (optionally with a few random edge deletions) and the
callers filter on each statement's hypothesis, with a minimum quota of
accepted samples.  Everything is driven by an explicit seed.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction
from typing import Callable, Iterator

from . import catalog
from .graph import Graph, min_degree


def subseed(master_seed: int, label: str) -> int:
    """Deterministic per-claim seed derived from the master seed and a label."""
    digest = hashlib.sha256(f"{master_seed}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def rng_for(master_seed: int, label: str) -> random.Random:
    return random.Random(subseed(master_seed, label))


def random_blowup(rng: random.Random, base: Graph, max_class: int = 3) -> Graph:
    sizes = [rng.randint(1, max_class) for _ in range(base.n)]
    return catalog.blow_up(base, sizes)


def delete_random_edges(rng: random.Random, g: Graph, count: int) -> Graph:
    edges = g.edges()
    if count <= 0 or not edges:
        return g
    doomed = set(map(frozenset, rng.sample(edges, min(count, len(edges)))))
    return Graph(g.n, [e for e in edges if frozenset(e) not in doomed])


def _weighted_zoo_bases() -> list[Graph]:
    # The three tightness graphs keep min degree above 1/2 for mildly
    # unbalanced blow-ups; C7bar and small complete graphs go higher.
    return [
        catalog.named("C7bar"),
        catalog.named("H2plus"),
        catalog.named("T0"),
        catalog.named("H1plusplus"),
        catalog.complete(3),
        catalog.complete(4),
    ]


def _tightness_sizes(rng: random.Random, name: str) -> list[int]:
    big = rng.randint(2, 4)
    profiles = {
        "H2plus": [2 * big, 1, 2 * big, big, big, 2 * big, 1, big],
        "T0": [4 * big, 1, 1, big, big, 1, 1, big, 3 * big, 3 * big],
        "H1plusplus": [5 * big, 1, 3 * big, 2 * big, 1, 3 * big, 1, big, big],
    }
    return profiles[name]


def dense_pool(seed: int, label: str) -> Iterator[Graph]:
    """Endless stream of blow-up-shaped graphs biased toward high min degree."""
    rng = rng_for(seed, label)
    zoo = _weighted_zoo_bases()
    tight = ("H2plus", "T0", "H1plusplus")
    while True:
        mode = rng.randrange(3)
        if mode == 0:
            g = random_blowup(rng, rng.choice(zoo), max_class=3)
        elif mode == 1:
            name = rng.choice(tight)
            g = catalog.blow_up(catalog.named(name), _tightness_sizes(rng, name))
        else:
            r = rng.randint(3, 5)
            g = random_blowup(rng, catalog.complete(r), max_class=4)
        if rng.random() < 0.3 and g.n:
            g = delete_random_edges(rng, g, rng.randint(1, 2))
        if g.n and min_degree(g) > 0:
            yield g


def filtered_samples(
    pool: Iterator[Graph],
    predicate: Callable[[Graph], bool],
    quota: int,
    max_attempts: int = 20000,
) -> list[Graph]:
    """First `quota` pool graphs satisfying the hypothesis predicate."""
    accepted: list[Graph] = []
    for _ in range(max_attempts):
        g = next(pool)
        if predicate(g):
            accepted.append(g)
            if len(accepted) >= quota:
                return accepted
    raise RuntimeError(
        f"sample quota not met: {len(accepted)}/{quota} accepted within {max_attempts} draws"
    )


def halfish_min_degree(g: Graph) -> bool:
    return g.n > 0 and Fraction(min_degree(g)) > Fraction(g.n, 2)


def min_degree_above(g: Graph, threshold: Fraction) -> bool:
    return g.n > 0 and Fraction(min_degree(g)) > threshold * g.n


def random_small_graphs(seed: int, label: str, count: int, max_n: int = 8) -> list[Graph]:
    rng = rng_for(seed, label)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice([0.2, 0.35, 0.5, 0.65, 0.8])
        out.append(Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return out


def induced_four_cycles(g: Graph, cap: int = 10) -> list[tuple[int, int, int, int]]:
    """Some induced 4-cycles (u, x, v, y) with u-x, x-v, v-y, y-u edges only."""
    found = []
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            common = g.adj_mask(u) & g.adj_mask(v)
            xs = []
            rest = common
            while rest:
                low = rest & -rest
                xs.append(low.bit_length() - 1)
                rest ^= low
            for i, x in enumerate(xs):
                for y in xs[i + 1 :]:
                    if not g.has_edge(x, y):
                        found.append((u, x, v, y))
                        if len(found) >= cap:
                            return found
    return found
