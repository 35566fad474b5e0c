"""Colour-bias boosting by pivot switching.

Pipeline for finding a Hamilton cycle on which some colour beats the trivial
n/r average by at least d, in any r-coloured graph whose minimum degree
satisfies the strict hypothesis

    2 * r * delta(G) >= (r + 1) * n + 12 * d * r**3
    (equivalently delta >= (1/2 + 1/2r) n + 6 d r^2).

Start from any Hamilton cycle. If it is not already unbalanced enough, collect
d*r^2 disjoint *switch candidates*: each is a pivot vertex with two disjoint
base edges, both forming triangles with the pivot, such that inserting the
pivot at the first base yields strictly more edges of one specific colour than
inserting it at the second. A pigeonhole pass keeps d*r candidates that agree
on one colour. Removing the pivots, a Hamilton cycle through all 2*d*r base
edges exists by the forced-edge engine; re-inserting every pivot at its first
base versus its second base yields two Hamilton cycles whose counts in the
agreed colour differ by at least d*r, and at least one of the two must be
d-unbalanced.

Candidate derivation distinguishes two shapes. Case A: two chord bases whose
insertion gains differ in some colour; pivot is the scanned vertex itself.
Case B: all gains agree, which pins down the local colour pattern (the pivot
edge to one base endpoint shares that base's colour, and the two remaining
pivot edges share a colour c3); the roles then shift to the base endpoint x,
using a fresh partner base and the non-cycle edge vy as the second base, where
inserting x costs a c3 edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BestEffortFailedError,
    BiasGuaranteeError,
    DegreeHypothesisError,
    InfeasibilityError,
    InternalInvariantError,
)
from .graphs import (
    Cycle,
    Edge,
    EdgeColouring,
    Graph,
    LinearForest,
    _argmin_degree,
    colour_histogram,
    edge,
    induced_subgraph,
    is_t_unbalanced,
)
from .hamilton import StepCounter, dirac_hamilton, insert_vertex, posa_forced_hamilton

__all__ = [
    "SwitchCandidate",
    "SwitchSystem",
    "SolveOutcome",
    "insertion_gain",
    "chord_triangles",
    "partner_base",
    "derive_switch_candidate",
    "collect_switch_system",
    "assemble_and_choose",
    "spectrum_cycles",
    "solve_unbalanced",
    "find_unbalanced_hamilton",
    "required_min_degree",
]


def insertion_gain(col: EdgeColouring, c: int, apex: int, base: Edge) -> int:
    """Change in the colour-c edge count when `apex` is inserted at `base`.

    Inserting apex z at base {x, y} trades edge xy for xz and yz, so the gain
    is 1[xz is c] + 1[yz is c] - 1[xy is c], a value in {-1, 0, 1, 2}. All
    three pairs must be edges (the apex and base must form a triangle).
    """
    if not (0 <= c < col.r):
        raise ValueError(f"colour {c} outside 0..{col.r - 1}")
    x, y = base
    return (
        col.indicator(c, apex, x)
        + col.indicator(c, apex, y)
        - col.indicator(c, x, y)
    )


def chord_triangles(g: Graph, h: Cycle, v: int) -> list[Edge]:
    """Cycle edges that form a triangle with v, in traversal order.

    A base is any edge {x, y} traversed by h with v adjacent to both x and y;
    edges incident to v itself never qualify. The scan runs once around the
    cycle starting at vertex 0's position, for deterministic downstream picks.
    """
    if v not in h.order:
        raise ValueError(f"vertex {v} is not on the cycle")
    out: list[Edge] = []
    k = len(h.order)
    vmask = g.adj[v]
    start = h.order.index(0) if 0 in h.order else 0
    for j in range(k):
        i = (start + j) % k
        x = h.order[i]
        y = h.order[(i + 1) % k]
        if x == v or y == v:
            continue
        if vmask >> x & 1 and vmask >> y & 1:
            out.append(edge(x, y))
    return out


def _partner_scan(
    col: EdgeColouring, chords: list[Edge], first: Edge, y_excl: frozenset[int]
) -> Edge:
    """First chord base disjoint from `first` and y_excl with a different colour."""
    banned = set(first) | y_excl
    c_first = col.colour_of(*first)
    for b in chords:
        if b[0] in banned or b[1] in banned:
            continue
        if col.colour_of(*b) != c_first:
            return b
    raise InfeasibilityError(
        f"no partner base: every admissible chord base has colour {c_first}"
    )


def partner_base(
    g: Graph,
    h: Cycle,
    col: EdgeColouring,
    v: int,
    first: Edge,
    y_excl: frozenset[int] = frozenset(),
    d: int = 1,
) -> tuple[Edge, int, int]:
    """Second base for pivot v, with the two distinct base colours.

    Returns (zw, c1, c2): zw is a cycle edge forming a triangle with v,
    vertex-disjoint from `first`, avoiding y_excl, and coloured c2 different
    from c1 = colour(first). The exclusion set must respect the collection
    budget of 5*d*r^2 vertices.
    """
    if len(y_excl) > 5 * d * col.r**2:
        raise ValueError(
            f"exclusion set has {len(y_excl)} vertices, over the 5*d*r^2 budget"
        )
    zw = _partner_scan(col, chord_triangles(g, h, v), first, y_excl)
    return zw, col.colour_of(*first), col.colour_of(*zw)


@dataclass(frozen=True)
class SwitchCandidate:
    """A pivot with two insertion bases whose colour gains are ordered.

    Invariant: inserting `pivot` at `first_base` gains strictly more edges of
    `colour` than inserting it at `second_base`. Both bases form triangles
    with the pivot and all five vertices are distinct.
    """

    pivot: int
    first_base: Edge
    second_base: Edge
    colour: int

    def vertices(self) -> frozenset[int]:
        return frozenset((self.pivot,) + self.first_base + self.second_base)


def _check_candidate(g: Graph, col: EdgeColouring, cand: SwitchCandidate) -> None:
    """Enforce the SwitchCandidate invariant; failure here is a bug."""
    if len(cand.vertices()) != 5:
        raise InternalInvariantError(f"candidate vertices overlap: {cand}")
    for x in cand.first_base + cand.second_base:
        if not g.has_edge(cand.pivot, x):
            raise InternalInvariantError(f"pivot {cand.pivot} not adjacent to {x}")
    g1 = insertion_gain(col, cand.colour, cand.pivot, cand.first_base)
    g2 = insertion_gain(col, cand.colour, cand.pivot, cand.second_base)
    if g1 <= g2:
        raise InternalInvariantError(
            f"gain inequality fails for {cand}: {g1} <= {g2}"
        )


def derive_switch_candidate(
    g: Graph,
    h: Cycle,
    col: EdgeColouring,
    v: int,
    y_excl: frozenset[int],
    d: int,
    *,
    strict: bool = False,
) -> SwitchCandidate:
    """Derive a switch candidate starting from scan vertex v.

    Picks the first chord base xy of v disjoint from y_excl and a partner
    base zw of a different colour. If some colour's insertion gains at the
    two bases differ (Case A), v itself pivots between them. Otherwise
    (Case B) equality of all gains forces colour(vx) = colour(xy) and
    colour(vy) = colour(vz) =: c3 after suitable labelling, and x becomes the
    pivot: a fresh partner base for x (away from v, y and y_excl, coloured
    differently from vy) serves as first base, vy as second, with colour c3.

    In strict mode the chord list is asserted to have the guaranteed length
    n/r + 12*d*r^2 - 2 (integer form), which holds whenever the strict degree
    hypothesis does.
    """
    if v in y_excl:
        raise ValueError(f"scan vertex {v} is excluded")
    r = col.r
    chords = chord_triangles(g, h, v)
    if strict:
        n = g.n
        if r * len(chords) < n + 12 * d * r**3 - 2 * r:
            raise InternalInvariantError(
                f"chord list of vertex {v} has {len(chords)} bases, below the "
                f"guaranteed n/r + 12*d*r^2 - 2"
            )
    xy = next((b for b in chords if b[0] not in y_excl and b[1] not in y_excl), None)
    if xy is None:
        raise InfeasibilityError(f"vertex {v} has no chord base avoiding the excluded set")
    zw = _partner_scan(col, chords, xy, y_excl)

    # Case A: any colour whose gains at the two bases differ.
    for c in range(r):
        ga = insertion_gain(col, c, v, xy)
        gb = insertion_gain(col, c, v, zw)
        if ga != gb:
            if ga > gb:
                return SwitchCandidate(v, xy, zw, c)
            return SwitchCandidate(v, zw, xy, c)

    # Case B: all gains equal. Equal gains at the bases' own colours force
    # one endpoint of each base to see the pivot in that base's colour.
    c1, c2 = col.colour_of(*xy), col.colour_of(*zw)
    x, y = xy if col.colour_of(v, xy[0]) == c1 else (xy[1], xy[0])
    w, z = zw if col.colour_of(v, zw[0]) == c2 else (zw[1], zw[0])
    if col.colour_of(v, x) != c1 or col.colour_of(v, w) != c2:
        raise InternalInvariantError("equal-gain base lacks the forced colour pattern")
    c3 = col.colour_of(v, y)
    if col.colour_of(v, z) != c3:
        raise InternalInvariantError("the two remaining pivot edges disagree in colour")
    if c1 == c3:
        # Mirror-symmetric configuration: swap the two bases' roles so the
        # base colour differs from c3 (c2 != c1 = c3 guarantees it).
        x, y, c1 = w, z, c2
    second = edge(v, y)
    fresh = _partner_scan(col, chord_triangles(g, h, x), second, y_excl)
    cand = SwitchCandidate(x, fresh, second, c3)
    # Gains for c3: the second base costs a c3 edge (vy is c3, xv and xy are
    # c1 != c3), the fresh base cannot (its colour differs from c3).
    return cand


@dataclass(frozen=True)
class SwitchSystem:
    """All collected candidates plus the pigeonholed majority-colour choice."""

    candidates: tuple[SwitchCandidate, ...]
    used_vertices: frozenset[int]
    star_colour: int
    chosen: tuple[SwitchCandidate, ...]


def required_min_degree(n: int, r: int, d: int) -> int:
    """Smallest integer minimum degree satisfying the strict hypothesis."""
    num = (r + 1) * n + 12 * d * r**3
    return -(-num // (2 * r))


def _check_hypothesis(g: Graph, r: int, d: int) -> None:
    need = required_min_degree(g.n, r, d)
    v = _argmin_degree(g)
    deg = g.degree(v)
    if deg < need:
        raise DegreeHypothesisError(
            f"strict hypothesis fails: vertex {v} has degree {deg}, need at "
            f"least {need} (= ceil(((r+1)n + 12dr^3) / 2r) with n={g.n}, "
            f"r={r}, d={d})",
            vertex=v,
            degree=deg,
            required=f">= {need}",
        )


def collect_switch_system(
    g: Graph,
    h: Cycle,
    col: EdgeColouring,
    d: int,
    *,
    strict: bool = True,
    counter: StepCounter | None = None,
) -> SwitchSystem:
    """Collect d*r^2 vertex-disjoint switch candidates along h.

    Scans vertices in ascending id, skipping any that already appear in a
    collected candidate; each success excludes its (at most five) vertices
    from later derivations. A pigeonhole pass then fixes the majority colour
    c* (ties to the lowest colour) and keeps the first d*r candidates of that
    colour.

    Requires h spanning and not already d-unbalanced. In strict mode the
    degree hypothesis is checked up front, making the collection guaranteed;
    otherwise running out of vertices raises InfeasibilityError.
    """
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    if not h.spans:
        raise ValueError("cycle does not span the graph")
    if is_t_unbalanced(h, col, d):
        raise ValueError("cycle is already d-unbalanced; nothing to collect")
    if strict:
        _check_hypothesis(g, col.r, d)
    counter = counter if counter is not None else StepCounter()
    r = col.r
    target = d * r * r
    used: set[int] = set()
    candidates: list[SwitchCandidate] = []
    for v in range(g.n):
        if len(candidates) == target:
            break
        if v in used:
            continue
        counter.scans += len(h)
        try:
            cand = derive_switch_candidate(
                g, h, col, v, frozenset(used), d, strict=strict
            )
        except InfeasibilityError:
            if strict:
                raise InternalInvariantError(
                    f"derivation failed at vertex {v} under the strict hypothesis"
                ) from None
            continue
        _check_candidate(g, col, cand)
        candidates.append(cand)
        used |= cand.vertices()
    if len(candidates) < target:
        raise InfeasibilityError(
            f"collected only {len(candidates)} of {target} switch candidates"
        )
    if len(used) > 5 * target:
        raise InternalInvariantError("candidate system consumed too many vertices")
    per_colour = [0] * r
    for cand in candidates:
        per_colour[cand.colour] += 1
    star = max(range(r), key=lambda c: (per_colour[c], -c))
    if per_colour[star] < d * r:
        raise InternalInvariantError(
            f"pigeonhole failure: majority colour {star} has only "
            f"{per_colour[star]} of {d * r} candidates"
        )
    chosen = tuple(c for c in candidates if c.colour == star)[: d * r]
    return SwitchSystem(tuple(candidates), frozenset(used), star, chosen)


@dataclass(frozen=True)
class _Assembly:
    """Both assembled cycles plus diagnostics, shared by the public entry points."""

    base_order: tuple[int, ...]
    low: Cycle  # every pivot at its second base
    high: Cycle  # every pivot at its first base
    gap: int  # star-colour count difference, high minus low


def _hybrid(g: Graph, base_order: tuple[int, ...], chosen, k: int) -> Cycle:
    """Insert the first k pivots at their first base, the rest at their second."""
    cyc = Cycle(g, base_order)
    for i, cand in enumerate(chosen):
        base = cand.first_base if i < k else cand.second_base
        cyc = insert_vertex(cyc, cand.pivot, base)
    return cyc


def _assemble(
    g: Graph,
    col: EdgeColouring,
    system: SwitchSystem,
    d: int,
    seed: int,
    counter: StepCounter,
) -> _Assembly:
    """Build the pivot-free forced cycle and the two full insertions."""
    r = col.r
    chosen = system.chosen
    if len(chosen) != d * r:
        raise ValueError(f"system has {len(chosen)} chosen candidates, expected {d * r}")
    pivots = [c.pivot for c in chosen]
    base_edges = [c.first_base for c in chosen] + [c.second_base for c in chosen]
    base_vertices = [v for e in base_edges for v in e]
    if len(set(base_vertices)) != len(base_vertices):
        raise InternalInvariantError("chosen base edges are not pairwise disjoint")
    if set(pivots) & set(base_vertices):
        raise InternalInvariantError("a pivot lies on a chosen base edge")

    keep = [v for v in range(g.n) if v not in set(pivots)]
    sub, old_of = induced_subgraph(g, keep)
    new_of = {v: i for i, v in enumerate(old_of)}
    forest = LinearForest.from_edges(
        (new_of[a], new_of[b]) for a, b in base_edges
    )
    t = 2 * d * r
    inner = posa_forced_hamilton(sub, forest, t, seed=seed, counter=counter)
    base_order = tuple(old_of[v] for v in inner.order)

    low = _hybrid(g, base_order, chosen, 0)
    high = _hybrid(g, base_order, chosen, len(chosen))
    star = system.star_colour
    gap = colour_histogram(high, col)[star] - colour_histogram(low, col)[star]
    if gap < d * r:
        raise InternalInvariantError(
            f"assembled cycles differ by {gap} < {d * r} edges in colour {star}"
        )
    return _Assembly(base_order, low, high, gap)


def assemble_and_choose(
    g: Graph,
    col: EdgeColouring,
    system: SwitchSystem,
    d: int,
    *,
    seed: int = 0,
    counter: StepCounter | None = None,
) -> Cycle:
    """Assemble both cycles and return one that is d-unbalanced.

    Checks the all-first-bases cycle before the all-second-bases cycle, over
    all colours. One of the two must qualify: their star-colour counts differ
    by at least d*r, and a cycle failing for every colour pins all counts
    into a band too narrow to allow that difference.
    """
    counter = counter if counter is not None else StepCounter()
    asm = _assemble(g, col, system, d, seed, counter)
    for cyc in (asm.high, asm.low):
        if is_t_unbalanced(cyc, col, d):
            return cyc
    raise BiasGuaranteeError(
        "neither assembled cycle is d-unbalanced; the degree hypothesis "
        "cannot have held",
        cycles=(asm.high, asm.low),
    )


def spectrum_cycles(
    g: Graph,
    col: EdgeColouring,
    system: SwitchSystem,
    d: int,
    *,
    seed: int = 0,
    counter: StepCounter | None = None,
) -> list[Cycle]:
    """All d*r + 1 hybrid insertions over one shared pivot-free cycle.

    Element k inserts the first k pivots at their first bases and the rest at
    their second bases, so the star-colour count is strictly increasing in k;
    the extremes are exactly the two cycles `assemble_and_choose` weighs.
    """
    counter = counter if counter is not None else StepCounter()
    asm = _assemble(g, col, system, d, seed, counter)
    star = system.star_colour
    out: list[Cycle] = []
    last = None
    for k in range(len(system.chosen) + 1):
        cyc = _hybrid(g, asm.base_order, system.chosen, k)
        count = colour_histogram(cyc, col)[star]
        if last is not None and count <= last:
            raise InternalInvariantError(
                f"spectrum not strictly increasing at step {k}: {count} <= {last}"
            )
        last = count
        out.append(cyc)
    return out


@dataclass(frozen=True)
class SolveOutcome:
    """Result of a solve run, cycle plus diagnostics."""

    cycle: Cycle
    counts: tuple[int, ...]
    witness_colour: int
    bias: int  # max count minus ceil(n/r)
    d: int
    mode: str
    early_exit: bool  # initial cycle already qualified, no switching needed
    star_colour: int | None
    switch_gap: int | None
    steps: int


def _outcome(
    cycle: Cycle,
    col: EdgeColouring,
    d: int,
    mode: str,
    early: bool,
    star: int | None,
    gap: int | None,
    counter: StepCounter,
) -> SolveOutcome:
    counts = colour_histogram(cycle, col)
    best = max(counts)
    witness = counts.index(best)
    ceil_avg = -(-len(cycle) // col.r)
    return SolveOutcome(
        cycle=cycle,
        counts=counts,
        witness_colour=witness,
        bias=best - ceil_avg,
        d=d,
        mode=mode,
        early_exit=early,
        star_colour=star,
        switch_gap=gap,
        steps=counter.total,
    )


def solve_unbalanced(
    g: Graph,
    col: EdgeColouring,
    d: int,
    mode: str = "strict",
    *,
    seed: int = 0,
) -> SolveOutcome:
    """Find a Hamilton cycle with at least n/r + d edges in one colour.

    Strict mode verifies the degree hypothesis up front and then guarantees
    success. Permissive mode runs the same pipeline on any graph meeting the
    plain half-degree bound, converting downstream dead ends into
    BestEffortFailedError carrying the most unbalanced cycle seen.
    """
    if mode not in ("strict", "permissive"):
        raise ValueError(f"unknown mode {mode!r}")
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    strict = mode == "strict"
    if strict:
        _check_hypothesis(g, col.r, d)
    counter = StepCounter()
    start = dirac_hamilton(g, seed=seed, counter=counter)
    if is_t_unbalanced(start, col, d):
        return _outcome(start, col, d, mode, True, None, None, counter)

    seen = [start]
    try:
        system = collect_switch_system(
            g, start, col, d, strict=strict, counter=counter
        )
        asm = _assemble(g, col, system, d, seed, counter)
        seen.extend([asm.high, asm.low])
        for cyc in (asm.high, asm.low):
            if is_t_unbalanced(cyc, col, d):
                return _outcome(
                    cyc, col, d, mode, False, system.star_colour, asm.gap, counter
                )
        raise BiasGuaranteeError(
            "neither assembled cycle is d-unbalanced; the degree hypothesis "
            "cannot have held",
            cycles=(asm.high, asm.low),
        )
    except (InfeasibilityError, DegreeHypothesisError, BiasGuaranteeError) as exc:
        if strict:
            raise
        best = max(seen, key=lambda c: max(colour_histogram(c, col)))
        raise BestEffortFailedError(
            f"no d-unbalanced Hamilton cycle found: {exc}",
            best_cycle=best,
            counts=colour_histogram(best, col),
        ) from exc


def find_unbalanced_hamilton(
    g: Graph,
    col: EdgeColouring,
    d: int,
    mode: str = "strict",
    *,
    seed: int = 0,
) -> Cycle:
    """Convenience wrapper around solve_unbalanced returning just the cycle."""
    return solve_unbalanced(g, col, d, mode=mode, seed=seed).cycle
