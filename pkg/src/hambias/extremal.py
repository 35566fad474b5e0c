"""Extremal constructions showing the degree hypothesis is close to sharp.

`build_layered(r, n)` has minimum degree exactly (1/2 + 1/2r) n yet every
Hamilton cycle is perfectly colour-balanced: the small parts V_1..V_{r-1} are
independent sets whose vertices meet only colour-i edges, so each of their
vertices contributes exactly two colour-i edges to any Hamilton cycle.

`build_turan3(n)` is the complete tripartite graph with parts of size n/3 and
the natural 3-colouring (one colour per pair of parts); minimum degree 2n/3,
and every Hamilton cycle uses each colour exactly n/3 times.
"""

from __future__ import annotations

from .graphs import EdgeColouring, Graph

__all__ = ["build_layered", "build_turan3"]


def build_layered(r: int, n: int) -> tuple[Graph, EdgeColouring]:
    """Layered hub construction on parts of size n/2r (r-1 times) and (r+1)n/2r.

    Requires r >= 2 and 2r | n. Edges: every pair meeting the hub part V_r.
    Colour i (0-based i < r-1) on edges between V_{i+1} and the hub, colour
    r-1 inside the hub.
    """
    if r < 2:
        raise ValueError(f"need at least 2 colours, got r={r}")
    if n <= 0 or n % (2 * r) != 0:
        raise ValueError(f"n={n} is not a positive multiple of 2r={2 * r}")
    small = n // (2 * r)
    hub_start = small * (r - 1)
    colours = {}
    edges = []
    # Small parts: V_i = [i*small, (i+1)*small), i = 0..r-2; hub = the rest.
    for i in range(r - 1):
        for u in range(i * small, (i + 1) * small):
            for v in range(hub_start, n):
                edges.append((u, v))
                colours[(u, v)] = i
    for u in range(hub_start, n):
        for v in range(u + 1, n):
            edges.append((u, v))
            colours[(u, v)] = r - 1
    g = Graph.from_edges(n, edges)
    return g, EdgeColouring.from_map(g, r, colours)


def build_turan3(n: int) -> tuple[Graph, EdgeColouring]:
    """Balanced complete tripartite graph, one colour per pair of parts.

    Requires 3 | n. Parts are consecutive ranges of size n/3; the pair
    (part a, part b) with a < b gets colour a + b - 1, i.e. colours 0, 1, 2
    for the pairs (0,1), (0,2), (1,2).
    """
    if n <= 0 or n % 3 != 0:
        raise ValueError(f"n={n} is not a positive multiple of 3")
    k = n // 3
    part = lambda v: v // k
    edges = []
    colours = {}
    for u in range(n):
        for v in range(u + 1, n):
            a, b = part(u), part(v)
            if a == b:
                continue
            edges.append((u, v))
            colours[(u, v)] = a + b - 1
    g = Graph.from_edges(n, edges)
    return g, EdgeColouring.from_map(g, 3, colours)
