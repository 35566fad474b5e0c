"""Seeded random instance generators for tests and the CLI.

Every generator takes an explicit seed and is reproducible: the same seed
always yields the same graph, colouring, or forest.
"""

from __future__ import annotations

import random

from .graphs import EdgeColouring, Graph, LinearForest, edge

__all__ = [
    "random_complete",
    "random_min_degree",
    "random_colouring",
    "random_linear_forest",
]


def random_colouring(g: Graph, r: int, seed: int) -> EdgeColouring:
    """Uniform random colour per edge."""
    rng = random.Random(seed)
    return EdgeColouring.from_map(g, r, {e: rng.randrange(r) for e in g.edges()})


def random_complete(n: int, r: int, seed: int) -> tuple[Graph, EdgeColouring]:
    """Complete graph on n vertices with a uniform random r-colouring."""
    g = Graph.complete(n)
    return g, random_colouring(g, r, seed)


def random_min_degree(n: int, target: int, r: int, seed: int) -> tuple[Graph, EdgeColouring]:
    """Random graph grown edge by edge until its minimum degree reaches target.

    Shuffles all possible edges and keeps a prefix; the cut point is the first
    moment every vertex has degree >= target.
    """
    if target > n - 1:
        raise ValueError(f"minimum degree {target} impossible on {n} vertices")
    rng = random.Random(seed)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pool)
    deg = [0] * n
    below = n if target > 0 else 0
    kept = []
    for u, v in pool:
        if below == 0:
            break
        kept.append((u, v))
        for w in (u, v):
            deg[w] += 1
            if deg[w] == target:
                below -= 1
    g = Graph.from_edges(n, kept)
    return g, random_colouring(g, r, seed)


def random_linear_forest(g: Graph, max_edges: int, seed: int) -> LinearForest:
    """Linear forest inside g with at most max_edges edges.

    Greedy over shuffled edges, skipping any edge that would push a vertex to
    degree 3 or close a cycle.
    """
    rng = random.Random(seed)
    pool = list(g.edges())
    rng.shuffle(pool)
    deg: dict[int, int] = {}
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: list[tuple[int, int]] = []
    for u, v in pool:
        if len(chosen) == max_edges:
            break
        if deg.get(u, 0) >= 2 or deg.get(v, 0) >= 2:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        parent[ru] = rv
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        chosen.append(edge(u, v))
    return LinearForest.from_edges(chosen)
