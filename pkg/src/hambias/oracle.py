"""Exhaustive Hamilton-cycle oracle and solution verifier.

Everything here is exact and brute-force, guarded to desk scale. It exists to
check the constructive solver, not to compete with it.

`enumerate_hamilton_cycles` lists each Hamilton cycle once in canonical form.
`bias_landscape` reports the set of colour-count vectors over all Hamilton
cycles; it uses a subset dynamic program, so it handles instances whose cycle
count is far too large to enumerate explicitly (millions at n = 12).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EnumerationSizeError
from .graphs import Cycle, EdgeColouring, Graph, colour_histogram

__all__ = [
    "enumerate_hamilton_cycles",
    "bias_landscape",
    "LandscapeResult",
    "verify_solution",
    "VerifyResult",
    "DEFAULT_ENUMERATION_LIMIT",
]

DEFAULT_ENUMERATION_LIMIT = 14


def _guard(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise EnumerationSizeError(
            f"{what} is exhaustive; refusing n={g.n} > limit={limit}"
        )


def enumerate_hamilton_cycles(g: Graph, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Iterator[Cycle]:
    """Yield every Hamilton cycle of g exactly once.

    Canonical form: order starts at vertex 0 and order[1] < order[-1], which
    quotients out rotation and reflection. Cycles stream in lexicographic
    order of their canonical sequences.
    """
    _guard(g, limit, "enumeration")
    n = g.n
    if n < 3:
        return
    full = (1 << n) - 1
    adj = g.adj
    order = [0]

    def extend(last: int, used: int) -> Iterator[Cycle]:
        if used == full:
            if adj[last] & 1 and order[1] < order[-1]:
                yield Cycle(g, tuple(order))
            return
        cand = adj[last] & ~used
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            order.append(v)
            yield from extend(v, used | low)
            order.pop()

    yield from extend(0, 1)


@dataclass(frozen=True)
class LandscapeResult:
    """Exact summary of colour behaviour over all Hamilton cycles."""

    n: int
    r: int
    cycle_count: int
    max_count: int | None  # largest single-colour count any Hamilton cycle attains
    vectors: tuple[tuple[int, ...], ...]  # sorted distinct colour-count vectors

    @property
    def hamiltonian(self) -> bool:
        return self.cycle_count > 0


def bias_landscape(
    g: Graph, col: EdgeColouring, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> LandscapeResult:
    """Colour-count vectors of all Hamilton cycles, by subset dynamic program.

    States are (visited-mask, last-vertex) with a multiset of colour vectors
    each; vectors are encoded in base n+1 since no colour count can exceed n.
    Every directed traversal from vertex 0 is counted, so the closed-walk
    total is twice the number of undirected Hamilton cycles.
    """
    _guard(g, limit, "bias landscape")
    n, r = g.n, col.r
    if n < 3:
        return LandscapeResult(n, r, 0, None, ())

    base = n + 1
    pw = [base**c for c in range(r)]
    colour = [[-1] * n for _ in range(n)]
    for u, v in g.edges():
        colour[u][v] = colour[v][u] = col.colour_of(u, v)

    full = (1 << n) - 1
    adj = g.adj
    # dp[mask][last] = {encoded vector: walk count}; mask always contains bit 0.
    dp: dict[int, dict[int, dict[int, int]]] = {1: {0: {0: 1}}}
    closed: dict[int, int] = {}
    for mask in range(1, full + 1, 2):  # bit 0 set
        here = dp.pop(mask, None)
        if here is None:
            continue
        for last, vecs in here.items():
            cand = adj[last] & ~mask
            if mask == full:
                if adj[last] & 1:
                    c0 = colour[last][0]
                    for enc, cnt in vecs.items():
                        key = enc + pw[c0]
                        closed[key] = closed.get(key, 0) + cnt
                continue
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                cv = colour[last][v]
                nxt = dp.setdefault(mask | low, {}).setdefault(v, {})
                for enc, cnt in vecs.items():
                    key = enc + pw[cv]
                    nxt[key] = nxt.get(key, 0) + cnt

    directed = sum(closed.values())
    if directed == 0:
        return LandscapeResult(n, r, 0, None, ())
    vectors = []
    for enc in closed:
        vec = []
        for _ in range(r):
            enc, digit = divmod(enc, base)
            vec.append(digit)
        vectors.append(tuple(vec))
    vectors.sort()
    return LandscapeResult(
        n,
        r,
        directed // 2,
        max(max(v) for v in vectors),
        tuple(vectors),
    )


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of checking a claimed Hamilton cycle, with a reason on failure."""

    ok: bool
    reason: str | None = None
    counts: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_solution(
    g: Graph, col: EdgeColouring, order: Sequence[int] | Cycle, t: int
) -> VerifyResult:
    """Check that `order` is a Hamilton cycle of g with some colour on at
    least n/r + t of its edges. Never raises on bad cycles; returns a reason.
    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    seq = tuple(order.order if isinstance(order, Cycle) else order)
    n = g.n
    if len(seq) != n:
        return VerifyResult(False, "wrong length")
    if any(not (0 <= v < n) for v in seq):
        return VerifyResult(False, "vertex out of range")
    if len(set(seq)) != n:
        return VerifyResult(False, "not a permutation")
    for i, u in enumerate(seq):
        v = seq[(i + 1) % n]
        if not g.has_edge(u, v):
            return VerifyResult(False, f"non-edge ({u}, {v})")
    counts = colour_histogram(Cycle(g, seq), col)
    if col.r * max(counts) < n + col.r * t:
        return VerifyResult(False, "insufficient bias", counts)
    return VerifyResult(True, None, counts)
