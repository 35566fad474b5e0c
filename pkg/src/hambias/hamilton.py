"""Hamilton cycle construction by rotation-extension.

Two entry points share one engine:

  dirac_hamilton        needs 2 * delta(G) >= n
  posa_forced_hamilton  needs delta(G) >= n/2 + t and a linear forest of at
                        most 2t edges that the cycle must contain

The engine grows a path whose unit of growth is a whole *segment*: a maximal
forced path, or a single free vertex. Segments are rigid; rotations only ever
break non-forced edges, so every forced edge survives into the final cycle.
When neither end of the path can extend, a breadth-first search over rotations
looks for an endpoint that can; if the path is spanning it looks for a closing
edge instead, and if it is stuck non-spanning it closes a shorter cycle and
reopens it next to an unused segment (absorption).

The search is deterministic for a fixed seed. Vertex choices follow a priority
order; attempt 0 uses the identity, and each restart reshuffles priorities
with a seed-derived generator. On inputs satisfying the stated degree bounds
a restart has never been observed; exhausting all restarts raises
InternalInvariantError, because under those bounds failure would be a bug
here, not bad luck.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .errors import DegreeHypothesisError, InternalInvariantError
from .graphs import Cycle, Edge, Graph, LinearForest, _argmin_degree, _bits

__all__ = [
    "StepCounter",
    "dirac_hamilton",
    "posa_forced_hamilton",
    "insert_vertex",
    "MAX_RESTARTS",
]

MAX_RESTARTS = 24


@dataclass
class StepCounter:
    """Mutable tally of engine work, exposed for benchmarking.

    `scans` counts vertex examinations inside candidate loops, so `total` is
    an honest proxy for time spent.
    """

    extensions: int = 0
    rotations: int = 0
    closures: int = 0
    absorptions: int = 0
    scans: int = 0
    restarts: int = 0

    @property
    def total(self) -> int:
        return (
            self.extensions
            + self.rotations
            + self.closures
            + self.absorptions
            + self.scans
            + self.restarts
        )


class _Rotor:
    """One engine attempt under a fixed vertex-priority order."""

    def __init__(self, g: Graph, forced: LinearForest, priority: list[int], counter: StepCounter):
        self.g = g
        self.n = g.n
        self.pri = priority
        self.counter = counter
        self.forced_adj = [0] * g.n
        for u, v in forced.edges:
            self.forced_adj[u] |= 1 << v
            self.forced_adj[v] |= 1 << u
        covered = forced.vertices()
        segments = forced.paths() + [(v,) for v in range(g.n) if v not in covered]
        self.segments = segments
        self.seg_of = {}
        for i, seg in enumerate(segments):
            for v in seg:
                self.seg_of[v] = i
        # Bitmask of endpoints of segments not yet on the path. Extension and
        # absorption may only attach at these vertices.
        self.off_end_mask = 0
        for seg in segments:
            self.off_end_mask |= (1 << seg[0]) | (1 << seg[-1])
        self.order: list[int] = []
        self.on_mask = 0

    # ------------------------------------------------------------------
    # path growth

    def _pick(self, mask: int) -> int:
        """Priority-minimal vertex among the set bits of mask."""
        best, best_p = -1, self.n
        count = 0
        for v in _bits(mask):
            count += 1
            if self.pri[v] < best_p:
                best, best_p = v, self.pri[v]
        self.counter.scans += count
        return best

    def _append_segment(self, entry: int) -> None:
        seg = self.segments[self.seg_of[entry]]
        walk = seg if seg[0] == entry else seg[::-1]
        self.order.extend(walk)
        for v in seg:
            self.on_mask |= 1 << v
        self.off_end_mask &= ~((1 << seg[0]) | (1 << seg[-1]))

    def start(self) -> None:
        first = self._pick((1 << self.n) - 1)
        seg = self.segments[self.seg_of[first]]
        entry = seg[0] if self.pri[seg[0]] <= self.pri[seg[-1]] else seg[-1]
        self._append_segment(entry)

    def try_extend(self) -> bool:
        cand = self.g.adj[self.order[-1]] & self.off_end_mask
        if not cand:
            return False
        self._append_segment(self._pick(cand))
        self.counter.extensions += 1
        return True

    def extend_max(self) -> None:
        """Extend greedily until neither end of the path can grow."""
        stuck = 0
        while stuck < 2:
            if self.try_extend():
                stuck = 0
            else:
                self.order.reverse()
                stuck += 1

    @property
    def spanning(self) -> bool:
        return self.on_mask == (1 << self.n) - 1

    # ------------------------------------------------------------------
    # rotation search

    def _search(self, close: bool):
        """BFS over endpoint rotations with the path start fixed.

        With close=True (spanning phase) returns ("close", order) for the
        first rotated path whose ends are adjacent. Otherwise returns
        ("extend", order) for the first rotated path that can grow, falling
        back to ("cycle", order) for some closable path (food for absorption),
        or None if the rotation space is exhausted.
        """
        start = self.order[0]
        seen = {self.order[-1]}
        queue = deque([list(self.order)])
        fallback = None
        while queue:
            path = queue.popleft()
            end = path[-1]
            if not close and self.g.adj[end] & self.off_end_mask:
                return ("extend", path)
            if self.g.has_edge(start, end):
                if close:
                    self.counter.closures += 1
                    return ("close", path)
                if fallback is None:
                    fallback = path
            adj_end = self.g.adj[end]
            self.counter.scans += len(path)
            for i in range(len(path) - 2):
                u = path[i]
                if not (adj_end >> u & 1):
                    continue
                # Break (path[i], path[i+1]); must not be a forced edge.
                w = path[i + 1]
                if self.forced_adj[u] >> w & 1:
                    continue
                if w in seen:
                    continue
                seen.add(w)
                self.counter.rotations += 1
                queue.append(path[: i + 1] + path[i + 1 :][::-1])
        if fallback is not None:
            self.counter.closures += 1
            return ("cycle", fallback)
        return None

    def absorb(self, cyc: list[int]) -> bool:
        """Reopen a non-spanning cycle so an off-path segment can attach.

        Looks for an off-segment endpoint x adjacent to a cycle vertex w such
        that a cycle edge at w is breakable; reopens the cycle into a path
        ending at w. The subsequent extension pass attaches x (or better).
        """
        m = len(cyc)
        pos = {v: i for i, v in enumerate(cyc)}
        xs = sorted(_bits(self.off_end_mask), key=lambda v: self.pri[v])
        for x in xs:
            hits = self.g.adj[x] & self.on_mask
            if not hits:
                continue
            for w in sorted(_bits(hits), key=lambda v: self.pri[v]):
                self.counter.scans += 1
                j = pos[w]
                nxt = cyc[(j + 1) % m]
                prv = cyc[j - 1]
                if not (self.forced_adj[w] >> nxt & 1):
                    self.order = cyc[j + 1 :] + cyc[: j + 1]  # ends at w
                    self.counter.absorptions += 1
                    return True
                if not (self.forced_adj[w] >> prv & 1):
                    self.order = (cyc[j:] + cyc[:j])[::-1]  # ends at w
                    self.counter.absorptions += 1
                    return True
        return False

    # ------------------------------------------------------------------

    def run(self) -> list[int] | None:
        self.start()
        while True:
            self.extend_max()
            if self.spanning:
                res = self._search(close=True)
                if res is None:
                    return None
                return res[1]
            res = self._search(close=False)
            if res is None:
                return None
            kind, path = res
            if kind == "extend":
                self.order = path
                if not self.try_extend():
                    return None
                continue
            # kind == "cycle": path[0] ~ path[-1], absorb a new segment.
            if not self.absorb(path):
                return None


def _run_engine(g: Graph, forced: LinearForest, seed: int, counter: StepCounter) -> list[int]:
    for attempt in range(MAX_RESTARTS + 1):
        if attempt == 0:
            priority = list(range(g.n))
        else:
            counter.restarts += 1
            rng = random.Random(seed * 1_000_003 + attempt)
            priority = list(range(g.n))
            rng.shuffle(priority)
        order = _Rotor(g, forced, priority, counter).run()
        if order is not None:
            return order
    raise InternalInvariantError(
        f"rotation engine failed after {MAX_RESTARTS} restarts on n={g.n}, "
        f"forced={forced.edge_count} edges; inputs satisfying the degree "
        f"hypotheses should never reach this"
    )


def _check_min_degree(g: Graph, threshold_num: int, threshold_den: int, label: str) -> None:
    """Require deg(v) * den >= num for every v; report the first failure."""
    v = _argmin_degree(g)
    d = g.degree(v)
    if d * threshold_den < threshold_num:
        raise DegreeHypothesisError(
            f"minimum degree too small: vertex {v} has degree {d}, need {label}",
            vertex=v,
            degree=d,
            required=label,
        )


def dirac_hamilton(g: Graph, *, seed: int = 0, counter: StepCounter | None = None) -> Cycle:
    """Hamilton cycle of any graph with minimum degree at least n/2.

    Deterministic for a fixed graph; `seed` only varies restart priorities,
    and restarts do not occur when the degree bound holds.
    """
    if g.n < 3:
        raise ValueError(f"need at least 3 vertices, got n={g.n}")
    _check_min_degree(g, g.n, 2, f"degree >= {g.n}/2")
    counter = counter if counter is not None else StepCounter()
    order = _run_engine(g, LinearForest.empty(), seed, counter)
    return Cycle(g, tuple(order))


def posa_forced_hamilton(
    g: Graph,
    forced: LinearForest,
    t: int,
    *,
    seed: int = 0,
    counter: StepCounter | None = None,
) -> Cycle:
    """Hamilton cycle through every edge of `forced`.

    Requires 1 <= t <= n/2, minimum degree at least n/2 + t, and at most 2t
    forced edges; the forced edges must exist in g and form a linear forest
    (the LinearForest type enforces the shape).
    """
    n = g.n
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if 2 * t > n:
        raise ValueError(f"t={t} exceeds n/2 with n={n}")
    if forced.edge_count > 2 * t:
        raise ValueError(f"{forced.edge_count} forced edges exceed the budget 2t={2 * t}")
    for u, v in forced.edges:
        if not g.has_edge(u, v):
            raise ValueError(f"forced edge ({u}, {v}) is not an edge of the graph")
    _check_min_degree(g, n + 2 * t, 2, f"degree >= {n}/2 + {t}")
    counter = counter if counter is not None else StepCounter()
    order = _run_engine(g, forced, seed, counter)
    cycle = Cycle(g, tuple(order))
    cycle_edges = set(cycle.edges())
    if not forced.edges <= cycle_edges:
        raise InternalInvariantError("constructed cycle dropped a forced edge")
    return cycle


def insert_vertex(h: Cycle, v: int, base: Edge) -> Cycle:
    """Replace cycle edge `base` = {x, y} by the detour x, v, y.

    Requires v off the cycle, base traversed by h, and both vx and vy present
    in the underlying graph. Length grows by one; all other edges survive.
    """
    g = h.graph
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    if v in h.order:
        raise ValueError(f"vertex {v} is already on the cycle")
    x, y = base
    if not (g.has_edge(v, x) and g.has_edge(v, y)):
        raise ValueError(f"insertion of {v} at {base} needs edges to both endpoints")
    k = len(h.order)
    for i, u in enumerate(h.order):
        w = h.order[(i + 1) % k]
        if {u, w} == {x, y}:
            new_order = h.order[: i + 1] + (v,) + h.order[i + 1 :]
            return Cycle(g, new_order)
    raise ValueError(f"base {base} is not an edge of the cycle")
