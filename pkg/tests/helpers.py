"""Shared builders for the test suite."""
from __future__ import annotations

import random

from hambias import Cycle, EdgeColouring, Graph, dirac_hamilton
from hambias.graphs import edge


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def mono_colouring(g: Graph, r: int, c: int = 0) -> EdgeColouring:
    return EdgeColouring.from_map(g, r, {e: c for e in g.edges()})


def complete_with_colours(
    n: int, r: int, overrides: dict[tuple[int, int], int]
) -> tuple[Graph, EdgeColouring]:
    """Complete graph, colour 0 everywhere except the listed edges."""
    g = Graph.complete(n)
    colours = {e: 0 for e in g.edges()}
    for (u, v), c in overrides.items():
        colours[edge(u, v)] = c
    return g, EdgeColouring.from_map(g, r, colours)


def crafted_balanced(n: int, r: int, seed: int) -> tuple[Graph, EdgeColouring, Cycle]:
    """Complete graph coloured so its Dirac cycle starts colour-balanced.

    The Dirac cycle of a complete graph does not depend on the colouring, so
    colouring its edges round-robin pins the initial histogram at n/r per
    colour (exactly, when r divides n).  Remaining edges are seeded-random.
    The solver therefore cannot exit early and must run the switch pipeline.
    """
    g = Graph.complete(n)
    h = dirac_hamilton(g)
    rng = random.Random(seed)
    colours: dict[tuple[int, int], int] = {}
    for i, e in enumerate(h.edges()):
        colours[e] = i % r
    for e in g.edges():
        if e not in colours:
            colours[e] = rng.randrange(r)
    return g, EdgeColouring.from_map(g, r, colours), h
