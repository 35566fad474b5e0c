"""Core immutable types: graphs, edge colourings, cycles, linear forests.

Vertices are 0..n-1. Undirected edges are stored normalized as (min, max)
tuples. Adjacency is kept as one int bitmask per vertex, which keeps
neighbourhood intersections cheap even at the n = 480 scale the solver is
exercised at.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import NonEdgeError

__all__ = [
    "Graph",
    "EdgeColouring",
    "Cycle",
    "LinearForest",
    "ColourHistogram",
    "edge",
    "min_degree",
    "colour_histogram",
    "is_t_unbalanced",
    "induced_subgraph",
]

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalized key for the undirected edge {u, v}."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]  # adj[v] = bitmask of neighbours of v

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[e[0]] |= 1 << e[1]
            adj[e[1]] |= 1 << e[0]
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            return False
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def edges(self) -> Iterator[Edge]:
        """All edges as normalized tuples, sorted lexicographically."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(higher):
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2


def min_degree(g: Graph) -> int:
    """Minimum degree of g; errors on the empty graph."""
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degree(v) for v in range(g.n))


def _argmin_degree(g: Graph) -> int:
    """Lowest-id vertex of minimum degree, for error reporting."""
    best, bd = 0, g.degree(0)
    for v in range(1, g.n):
        d = g.degree(v)
        if d < bd:
            best, bd = v, d
    return best


@dataclass(frozen=True, eq=False)
class EdgeColouring:
    """Total assignment of colours 0..r-1 to the edges of a graph."""

    graph: Graph
    r: int
    _colours: Mapping[Edge, int] = field(repr=False)

    @classmethod
    def from_map(cls, graph: Graph, r: int, mapping: Mapping[Edge, int]) -> "EdgeColouring":
        """Build a colouring, validating totality and colour range.

        Keys may use either orientation; both orientations of one edge count
        as a duplicate.
        """
        if r < 2:
            raise ValueError(f"need at least 2 colours, got r={r}")
        colours: dict[Edge, int] = {}
        for (u, v), c in mapping.items():
            e = edge(u, v)
            if not graph.has_edge(*e):
                raise NonEdgeError(f"colouring mentions non-edge {e}")
            if e in colours:
                raise ValueError(f"edge {e} coloured twice")
            if not (0 <= c < r):
                raise ValueError(f"colour {c} for edge {e} outside 0..{r - 1}")
            colours[e] = c
        missing = graph.edge_count - len(colours)
        if missing:
            raise ValueError(f"colouring is not total: {missing} edge(s) uncoloured")
        return cls(graph, r, colours)

    def colour_of(self, u: int, v: int) -> int:
        e = edge(u, v)
        try:
            return self._colours[e]
        except KeyError:
            raise NonEdgeError(f"no colour: {e} is not an edge") from None

    def indicator(self, c: int, u: int, v: int) -> int:
        """1 if edge {u, v} has colour c, else 0. Errors on non-edges."""
        return 1 if self.colour_of(u, v) == c else 0

    def as_dict(self) -> dict[Edge, int]:
        return dict(self._colours)


@dataclass(frozen=True)
class Cycle:
    """A cycle in a graph, fixed as a vertex sequence.

    The sequence direction and starting point are arbitrary but fixed at
    construction; two Cycle values are equal only if their orders match
    literally. The cycle need not span the graph (vertices get inserted into
    partial cycles during assembly); spanning callers check `spans`.
    """

    graph: Graph
    order: tuple[int, ...]

    def __post_init__(self):
        k = len(self.order)
        if k < 3:
            raise ValueError(f"cycle needs at least 3 vertices, got {k}")
        seen: set[int] = set()
        for v in self.order:
            if not (0 <= v < self.graph.n):
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"vertex {v} repeated in cycle order")
            seen.add(v)
        for i, u in enumerate(self.order):
            w = self.order[(i + 1) % k]
            if not self.graph.has_edge(u, w):
                raise ValueError(f"cycle traverses non-edge ({u}, {w})")

    def __len__(self) -> int:
        return len(self.order)

    @property
    def spans(self) -> bool:
        return len(self.order) == self.graph.n

    def edges(self) -> Iterator[Edge]:
        k = len(self.order)
        for i, u in enumerate(self.order):
            yield edge(u, self.order[(i + 1) % k])

    def _position(self, v: int) -> int:
        try:
            return self.order.index(v)
        except ValueError:
            raise ValueError(f"vertex {v} not on cycle") from None

    def successor(self, v: int) -> int:
        return self.order[(self._position(v) + 1) % len(self.order)]

    def predecessor(self, v: int) -> int:
        return self.order[self._position(v) - 1]

    def has_cycle_edge(self, u: int, v: int) -> bool:
        """True if {u, v} is traversed by this cycle (not merely a chord)."""
        return v in self.order and u in self.order and (
            self.successor(u) == v or self.predecessor(u) == v
        )


ColourHistogram = tuple[int, ...]


def colour_histogram(h: Cycle, col: EdgeColouring) -> ColourHistogram:
    """Per-colour edge counts along h, as a tuple indexed by colour."""
    counts = [0] * col.r
    for u, v in h.edges():
        counts[col.colour_of(u, v)] += 1
    return tuple(counts)


def is_t_unbalanced(h: Cycle, col: EdgeColouring, t: int) -> bool:
    """Does some colour appear on at least len(h)/r + t edges of h?

    Exact integer test: r * max_count >= len(h) + r * t.
    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    counts = colour_histogram(h, col)
    return col.r * max(counts) >= len(h) + col.r * t


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on `keep`, plus the new-index -> old-vertex map.

    New vertices are 0..k-1 in increasing order of the old ids.
    """
    old = sorted(set(keep))
    for v in old:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    new_of = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for i, v in enumerate(old):
        mask = 0
        for j, u in enumerate(old):
            if g.adj[v] >> u & 1:
                mask |= 1 << j
        adj[i] = mask
    return Graph(len(old), tuple(adj)), tuple(old)


@dataclass(frozen=True)
class LinearForest:
    """A set of edges forming vertex-disjoint paths (no cycles, max degree 2)."""

    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, raw: Iterable[Edge]) -> "LinearForest":
        edges = frozenset(edge(u, v) for u, v in raw)
        deg = Counter()
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 2 or deg[v] > 2:
                w = u if deg[u] > 2 else v
                raise ValueError(f"not a linear forest: vertex {w} has degree 3")
        # Union-find cycle check: adding an edge inside one component closes a cycle.
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in sorted(edges):
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError("not a linear forest: edge set contains a cycle")
            parent[ru] = rv
        return cls(edges)

    @classmethod
    def empty(cls) -> "LinearForest":
        return cls(frozenset())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def paths(self) -> list[tuple[int, ...]]:
        """Path decomposition: each component as a vertex walk.

        Deterministic: each path starts at its smaller endpoint, components
        sorted by starting vertex. Isolated vertices are not represented.
        """
        nbr: dict[int, list[int]] = {}
        for u, v in self.edges:
            nbr.setdefault(u, []).append(v)
            nbr.setdefault(v, []).append(u)
        done: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in sorted(v for v, ns in nbr.items() if len(ns) == 1):
            if start in done:
                continue
            walk = [start]
            done.add(start)
            cur = start
            while True:
                nxt = [w for w in nbr[cur] if w not in done]
                if not nxt:
                    break
                cur = nxt[0]
                walk.append(cur)
                done.add(cur)
            out.append(tuple(walk))
        return out
