"""Insertion-gain calculus, switch candidates, and the full bias pipeline."""
from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hambias import (
    BestEffortFailedError,
    Cycle,
    DegreeHypothesisError,
    EdgeColouring,
    Graph,
    InfeasibilityError,
    InternalInvariantError,
    NonEdgeError,
    StepCounter,
    assemble_and_choose,
    bias_landscape,
    chord_triangles,
    collect_switch_system,
    colour_histogram,
    derive_switch_candidate,
    dirac_hamilton,
    find_unbalanced_hamilton,
    insert_vertex,
    insertion_gain,
    is_t_unbalanced,
    min_degree,
    partner_base,
    random_colouring,
    random_complete,
    random_min_degree,
    required_min_degree,
    solve_unbalanced,
    spectrum_cycles,
    verify_solution,
)

from helpers import complete_with_colours, crafted_balanced, cycle_graph, mono_colouring


# -- insertion_gain ---------------------------------------------------------

def test_gain_monochromatic_triangle():
    _, col = complete_with_colours(4, 2, {})
    assert insertion_gain(col, 0, 0, (1, 2)) == 1  # 1 + 1 - 1
    assert insertion_gain(col, 1, 0, (1, 2)) == 0  # 0 + 0 - 0


def test_gain_extremes():
    _, col = complete_with_colours(4, 2, {(1, 2): 1})
    assert insertion_gain(col, 0, 0, (1, 2)) == 2  # both legs gained, none lost
    assert insertion_gain(col, 1, 0, (1, 2)) == -1  # base lost, no leg gained


def test_gain_rejects_colour_out_of_range():
    _, col = complete_with_colours(4, 2, {})
    with pytest.raises(ValueError, match="outside"):
        insertion_gain(col, 2, 0, (1, 2))


def test_gain_requires_triangle_edges():
    edges = [e for e in Graph.complete(4).edges() if e != (0, 2)]
    g = Graph.from_edges(4, edges)
    col = mono_colouring(g, 2)
    with pytest.raises(NonEdgeError):
        insertion_gain(col, 0, 0, (2, 3))


@given(data=st.data(), r=st.integers(2, 4))
def test_gain_range_and_sum(data, r):
    g = Graph.complete(5)
    m = {e: data.draw(st.integers(0, r - 1)) for e in g.edges()}
    col = EdgeColouring.from_map(g, r, m)
    gains = [insertion_gain(col, c, 0, (1, 2)) for c in range(r)]
    assert all(-1 <= x <= 2 for x in gains)
    assert sum(gains) == 1  # two legs in, one base out


@given(data=st.data(), r=st.integers(2, 3))
def test_gain_equals_insertion_histogram_delta(data, r):
    g = Graph.complete(6)
    m = {e: data.draw(st.integers(0, r - 1)) for e in g.edges()}
    col = EdgeColouring.from_map(g, r, m)
    h = Cycle(g, (0, 1, 2, 3, 4))
    base = data.draw(st.sampled_from(list(h.edges())))
    before = colour_histogram(h, col)
    after = colour_histogram(insert_vertex(h, 5, base), col)
    for c in range(r):
        assert after[c] - before[c] == insertion_gain(col, c, 5, base)


# -- chord_triangles --------------------------------------------------------

def test_chords_on_complete_graph():
    g = Graph.complete(5)
    h = Cycle(g, (0, 1, 2, 3, 4))
    assert chord_triangles(g, h, 0) == [(1, 2), (2, 3), (3, 4)]


def test_chords_follow_cyclic_order_from_vertex_zero():
    g = Graph.complete(5)
    rotated = Cycle(g, (3, 4, 0, 1, 2))
    assert chord_triangles(g, rotated, 0) == [(1, 2), (2, 3), (3, 4)]


def test_chords_need_adjacency_to_both_endpoints():
    g = cycle_graph(6)
    h = Cycle(g, tuple(range(6)))
    for v in range(6):
        assert chord_triangles(g, h, v) == []


def test_chords_reject_vertex_off_cycle():
    g = Graph.complete(6)
    h = Cycle(g, (0, 1, 2, 3, 4))
    for v in (5, 9):
        with pytest.raises(ValueError, match="not on the cycle"):
            chord_triangles(g, h, v)


def test_chords_of_a_universal_vertex():
    g = Graph.complete(6)
    h = Cycle(g, tuple(range(6)))
    assert chord_triangles(g, h, 3) == [(0, 1), (1, 2), (4, 5), (0, 5)]


@pytest.mark.parametrize("seed", range(3))
def test_chord_count_lower_bound_at_high_degree(seed):
    g, _ = random_min_degree(60, 52, 2, seed)
    h = dirac_hamilton(g)
    bound = 2 * min_degree(g) - g.n
    for v in range(g.n):
        assert len(chord_triangles(g, h, v)) >= bound


# -- partner_base -----------------------------------------------------------

def _k60():
    g, col = random_complete(60, 2, 1)
    return g, col, dirac_hamilton(g)


def test_partner_postconditions():
    g, col, h = _k60()
    first = chord_triangles(g, h, 0)[0]
    zw, c1, c2 = partner_base(g, h, col, 0, first)
    assert h.has_cycle_edge(*zw)
    assert 0 not in zw
    assert not set(zw) & set(first)
    assert c1 == col.colour_of(*first)
    assert c2 == col.colour_of(*zw)
    assert c1 != c2
    assert g.has_edge(0, zw[0]) and g.has_edge(0, zw[1])


def test_partner_respects_exclusions():
    g, col, h = _k60()
    first = chord_triangles(g, h, 0)[0]
    zw, _, _ = partner_base(g, h, col, 0, first)
    rerun, _, _ = partner_base(g, h, col, 0, first, frozenset(zw))
    assert not set(rerun) & set(zw)


def test_partner_infeasible_on_monochromatic_colouring():
    g = Graph.complete(6)
    col = mono_colouring(g, 2)
    h = Cycle(g, tuple(range(6)))
    with pytest.raises(InfeasibilityError):
        partner_base(g, h, col, 0, (1, 2))


def test_partner_rejects_oversized_exclusion_set():
    g, col, h = _k60()
    first = chord_triangles(g, h, 0)[0]
    with pytest.raises(ValueError, match="excl"):
        partner_base(g, h, col, 0, first, frozenset(range(10, 31)), 1)


# -- derive_switch_candidate -------------------------------------------------

H8 = tuple(range(8))
H6 = tuple(range(6))


def _derive(n, r, overrides, v=0):
    g, col = complete_with_colours(n, r, overrides)
    h = Cycle(g, tuple(range(n)))
    return derive_switch_candidate(g, h, col, v, frozenset(), 1)


def test_derive_differing_gains_picks_larger_first():
    cand = _derive(8, 2, {(3, 4): 1})
    assert (cand.pivot, cand.first_base, cand.second_base, cand.colour) == (
        0, (3, 4), (1, 2), 0,
    )


def test_derive_differing_gains_keeps_scan_order_when_larger():
    cand = _derive(8, 2, {(3, 4): 1, (0, 3): 1, (0, 4): 1})
    assert (cand.pivot, cand.first_base, cand.second_base, cand.colour) == (
        0, (1, 2), (3, 4), 0,
    )


def test_derive_skips_colours_with_equal_gains():
    overrides = {(1, 2): 1, (3, 4): 2, (0, 1): 2, (0, 2): 2, (0, 3): 2, (0, 4): 2}
    cand = _derive(8, 3, overrides)
    assert (cand.pivot, cand.first_base, cand.second_base, cand.colour) == (
        0, (3, 4), (1, 2), 1,
    )


def test_derive_equal_gains_forces_pivot_shift():
    # all per-colour gains agree at both bases, so the pivot moves to a base
    # endpoint and a fresh partner is scanned for it
    overrides = {(1, 2): 0, (0, 1): 0, (3, 4): 1, (0, 4): 1, (0, 2): 2, (0, 3): 2}
    g, col = complete_with_colours(6, 3, overrides)
    h = Cycle(g, H6)
    cand = derive_switch_candidate(g, h, col, 0, frozenset(), 1)
    assert (cand.pivot, cand.first_base, cand.second_base, cand.colour) == (
        1, (3, 4), (0, 2), 2,
    )


def test_derive_equal_gains_mirrors_when_colours_clash():
    overrides = {
        (1, 2): 0, (0, 1): 0, (3, 4): 1, (0, 4): 1,
        (0, 2): 0, (0, 3): 0, (5, 6): 2,
    }
    g, col = complete_with_colours(8, 3, overrides)
    h = Cycle(g, H8)
    cand = derive_switch_candidate(g, h, col, 0, frozenset(), 1)
    assert (cand.pivot, cand.first_base, cand.second_base, cand.colour) == (
        4, (5, 6), (0, 3), 0,
    )


def test_derive_rejects_excluded_scan_vertex():
    g, col = complete_with_colours(8, 2, {(3, 4): 1})
    h = Cycle(g, H8)
    with pytest.raises(ValueError, match="excluded"):
        derive_switch_candidate(g, h, col, 0, frozenset({0}), 1)


def test_derive_infeasible_when_exclusions_blanket_the_chords():
    g, col = complete_with_colours(6, 2, {})
    h = Cycle(g, H6)
    with pytest.raises(InfeasibilityError):
        derive_switch_candidate(g, h, col, 0, frozenset({2, 3, 4}), 1)


def test_derive_strict_mode_enforces_chord_bound():
    g, col = complete_with_colours(6, 2, {(3, 4): 1})
    h = Cycle(g, H6)
    with pytest.raises(InternalInvariantError):
        derive_switch_candidate(g, h, col, 0, frozenset(), 1, strict=True)


@pytest.mark.parametrize("r", [2, 3])
def test_derive_postconditions_under_growing_exclusions(r):
    g, col, h = crafted_balanced(120, r, 5)
    used: set[int] = set()
    for _ in range(4):
        v = min(set(range(120)) - used)
        cand = derive_switch_candidate(g, h, col, v, frozenset(used), 1)
        vs = cand.vertices()
        assert len(vs) == 5
        assert not vs & used
        for x in set(cand.first_base) | set(cand.second_base):
            assert g.has_edge(cand.pivot, x)
        g1 = insertion_gain(col, cand.colour, cand.pivot, cand.first_base)
        g2 = insertion_gain(col, cand.colour, cand.pivot, cand.second_base)
        assert g1 > g2
        used |= vs


# -- collect_switch_system ---------------------------------------------------

def test_collect_on_balanced_complete_graph():
    g, col, h = crafted_balanced(120, 2, 1)
    counter = StepCounter()
    system = collect_switch_system(g, h, col, 1, counter=counter)
    assert len(system.candidates) == 4  # d * r^2
    assert len(system.used_vertices) <= 20  # 5 d r^2
    assert len(system.chosen) == 2  # d * r
    assert counter.scans > 0
    seen: set[int] = set()
    for cand in system.candidates:
        assert not cand.vertices() & seen
        seen |= cand.vertices()
    assert seen == system.used_vertices
    per_colour = [
        sum(1 for c in system.candidates if c.colour == i) for i in range(2)
    ]
    best = max(per_colour)
    assert per_colour[system.star_colour] == best
    assert all(per_colour[c] < best for c in range(system.star_colour))
    assert [c.colour for c in system.chosen] == [system.star_colour] * 2
    expected = [c for c in system.candidates if c.colour == system.star_colour][:2]
    assert list(system.chosen) == expected


def test_collect_when_every_candidate_shares_a_colour():
    g, col, h = crafted_balanced(120, 2, 0)
    system = collect_switch_system(g, h, col, 1)
    assert {c.colour for c in system.candidates} == {0}
    assert system.star_colour == 0
    assert list(system.chosen) == list(system.candidates)[:2]


def test_collect_three_colours_higher_d():
    g, col, h = crafted_balanced(500, 3, 11)
    assert colour_histogram(h, col) == (167, 167, 166)
    system = collect_switch_system(g, h, col, 2)
    assert len(system.candidates) == 18  # d * r^2
    assert len(system.used_vertices) <= 90  # 5 d r^2
    assert len(system.chosen) == 6  # d * r


def test_collect_rejects_unbalanced_start():
    g = Graph.complete(6)
    col = mono_colouring(g, 2)
    h = dirac_hamilton(g)
    with pytest.raises(ValueError, match="already"):
        collect_switch_system(g, h, col, 1)


def test_collect_rejects_non_spanning_cycle():
    g, col = complete_with_colours(6, 2, {(0, 2): 1})
    h = Cycle(g, (0, 1, 2))
    with pytest.raises(ValueError, match="span"):
        collect_switch_system(g, h, col, 1)


def test_collect_rejects_d_zero():
    g, col, h = crafted_balanced(120, 2, 1)
    with pytest.raises(ValueError, match="at least 1"):
        collect_switch_system(g, h, col, 0)


def test_collect_strict_checks_degree_hypothesis():
    g, _ = random_min_degree(40, 22, 2, 0)
    h = dirac_hamilton(g)
    m = {}
    for i, e in enumerate(h.edges()):
        m[e] = i % 2
    for e in g.edges():
        if e not in m:
            m[e] = 0
    col = EdgeColouring.from_map(g, 2, m)
    assert not is_t_unbalanced(h, col, 1)
    with pytest.raises(DegreeHypothesisError):
        collect_switch_system(g, h, col, 1)


def test_collect_permissive_runs_out_of_vertices():
    g, col, h = crafted_balanced(12, 2, 0)
    with pytest.raises(InfeasibilityError):
        collect_switch_system(g, h, col, 1, strict=False)


# -- assembly and the hybrid spectrum -----------------------------------------

def test_assembled_cycle_is_verified_unbalanced():
    g, col, h = crafted_balanced(120, 2, 3)
    system = collect_switch_system(g, h, col, 1)
    cyc = assemble_and_choose(g, col, system, 1)
    assert verify_solution(g, col, cyc, 1)


def test_assemble_rejects_mismatched_d():
    g, col, h = crafted_balanced(120, 2, 3)
    system = collect_switch_system(g, h, col, 1)
    with pytest.raises(ValueError, match="chosen"):
        assemble_and_choose(g, col, system, 2)


def test_spectrum_structure():
    g, col, h = crafted_balanced(120, 2, 3)
    system = collect_switch_system(g, h, col, 1)
    ladder = spectrum_cycles(g, col, system, 1)
    assert len(ladder) == 3  # d * r + 1
    star = system.star_colour
    counts = [colour_histogram(c, col)[star] for c in ladder]
    assert counts == sorted(set(counts))  # strictly increasing
    assert counts[-1] - counts[0] >= 2  # d * r
    for k, cyc in enumerate(ladder):
        assert cyc.spans
        at_first = 0
        for cand in system.chosen:
            around = {cyc.predecessor(cand.pivot), cyc.successor(cand.pivot)}
            assert around in (set(cand.first_base), set(cand.second_base))
            at_first += around == set(cand.first_base)
        assert at_first == k


def test_spectrum_is_deterministic():
    g, col, h = crafted_balanced(120, 2, 4)
    system = collect_switch_system(g, h, col, 1)
    a = [c.order for c in spectrum_cycles(g, col, system, 1)]
    b = [c.order for c in spectrum_cycles(g, col, system, 1)]
    assert a == b


# -- solve_unbalanced ---------------------------------------------------------

def test_required_min_degree_values():
    assert required_min_degree(120, 2, 1) == 114
    assert required_min_degree(180, 3, 1) == 174
    assert required_min_degree(8, 2, 1) == 30  # ceil((24 + 96) / 4)
    assert required_min_degree(120, 2, 2) > required_min_degree(120, 2, 1)


def test_solve_early_exit_on_lopsided_random_colouring():
    g = Graph.complete(120)
    col = random_colouring(g, 2, 0)
    out = solve_unbalanced(g, col, 1)
    assert out.early_exit
    assert out.counts == (62, 58)
    assert out.star_colour is None and out.switch_gap is None
    assert out.witness_colour == 0
    assert out.bias == 2
    assert verify_solution(g, col, out.cycle, 1)


def test_solve_engages_pipeline_on_balanced_start():
    g, col, _ = crafted_balanced(120, 2, 1)
    out = solve_unbalanced(g, col, 1)
    assert not out.early_exit
    assert out.star_colour is not None
    assert out.switch_gap >= 2
    assert out.bias >= 1
    assert out.mode == "strict" and out.d == 1
    assert out.steps > 0
    assert verify_solution(g, col, out.cycle, 1)
    assert max(out.counts) == out.counts[out.witness_colour]


def test_solve_witness_colour_may_differ_from_star():
    g, col, _ = crafted_balanced(120, 2, 7)
    out = solve_unbalanced(g, col, 1)
    assert not out.early_exit
    assert out.counts == (58, 62)
    assert out.star_colour == 0
    assert out.witness_colour == 1


def test_find_unbalanced_hamilton_returns_the_same_cycle():
    g, col, _ = crafted_balanced(120, 2, 1)
    assert (
        find_unbalanced_hamilton(g, col, 1).order
        == solve_unbalanced(g, col, 1).cycle.order
    )


def test_solve_is_deterministic():
    g, col, _ = crafted_balanced(120, 2, 9)
    a = solve_unbalanced(g, col, 1, seed=4)
    b = solve_unbalanced(g, col, 1, seed=4)
    assert a.cycle.order == b.cycle.order and a.counts == b.counts


def test_solve_strict_rejects_low_degree():
    from hambias import build_layered

    g, col = build_layered(2, 120)
    with pytest.raises(DegreeHypothesisError) as exc:
        solve_unbalanced(g, col, 1)
    assert exc.value.degree == 90
    assert "114" in exc.value.required


def test_solve_strict_requirement_scales_with_d():
    g, col = random_complete(120, 2, 3)
    with pytest.raises(DegreeHypothesisError):
        solve_unbalanced(g, col, 2)


def test_solve_permissive_can_exceed_the_strict_envelope():
    g = Graph.complete(120)
    col = random_colouring(g, 2, 0)  # initial cycle already counts (62, 58)
    out = solve_unbalanced(g, col, 2, "permissive")
    assert out.early_exit and out.bias >= 2


def test_solve_permissive_reports_best_effort_failure():
    from hambias import build_layered

    g, col = build_layered(2, 8)
    with pytest.raises(BestEffortFailedError) as exc:
        solve_unbalanced(g, col, 1, "permissive")
    assert exc.value.counts == (4, 4)
    assert exc.value.best_cycle is not None
    assert verify_solution(g, col, exc.value.best_cycle, 0)


def test_solve_rejects_bad_arguments():
    g, col = random_complete(12, 2, 0)
    with pytest.raises(ValueError, match="mode"):
        solve_unbalanced(g, col, 1, "fast")
    with pytest.raises(ValueError, match="at least 1"):
        solve_unbalanced(g, col, 0)


@pytest.mark.parametrize("n,seed", [(8, 0), (8, 1), (10, 2), (12, 3)])
def test_solver_never_beats_the_exhaustive_oracle(n, seed):
    g, col = random_complete(n, 2, seed)
    land = bias_landscape(g, col)
    try:
        out = solve_unbalanced(g, col, 1, "permissive")
    except BestEffortFailedError as exc:
        assert max(exc.value.counts) <= land.max_count
    else:
        assert max(out.counts) <= land.max_count
        assert verify_solution(g, col, out.cycle, 1)
