"""Extremal constructions and their exhaustively checked bias ceilings."""
from __future__ import annotations

import pytest

from hambias import bias_landscape, build_layered, build_turan3, min_degree


# -- layered hub construction -----------------------------------------------

@pytest.mark.parametrize(
    "r,n,delta", [(2, 8, 6), (2, 12, 9), (3, 12, 8), (4, 16, 10)]
)
def test_layered_minimum_degree(r, n, delta):
    g, _ = build_layered(r, n)
    assert g.n == n
    assert min_degree(g) == delta == (r + 1) * n // (2 * r)


def test_layered_edge_counts():
    assert build_layered(2, 8)[0].edge_count == 27
    assert build_layered(3, 12)[0].edge_count == 60


@pytest.mark.parametrize("r,n", [(2, 8), (3, 12), (4, 16)])
def test_layered_structure(r, n):
    g, col = build_layered(r, n)
    delta = (r + 1) * n // (2 * r)
    small = [v for v in range(n) if g.degree(v) == delta]
    hub = [v for v in range(n) if g.degree(v) == n - 1]
    assert len(small) == (r - 1) * n // (2 * r)
    assert len(hub) == (r + 1) * n // (2 * r)
    assert sorted(small + hub) == list(range(n))
    # the non-hub layers are independent and monochromatic towards the hub
    for u in small:
        for v in small:
            assert not g.has_edge(u, v)
    seen = {}
    for u in small:
        colours = {col.colour_of(u, w) for w in g.neighbours(u)}
        assert len(colours) == 1
        seen[u] = colours.pop()
    assert set(seen.values()) == set(range(r - 1))
    for u in hub:
        for v in hub:
            if u < v:
                assert col.colour_of(u, v) == r - 1


@pytest.mark.parametrize(
    "r,n,vector",
    [(2, 8, (4, 4)), (2, 12, (6, 6)), (3, 12, (4, 4, 4))],
)
def test_layered_every_hamilton_cycle_is_balanced(r, n, vector):
    g, col = build_layered(r, n)
    land = bias_landscape(g, col, limit=n)
    assert land.hamiltonian
    assert land.vectors == (vector,)
    assert land.max_count == n // r


@pytest.mark.parametrize("r,n", [(2, 6), (2, 0), (3, 12 + 1), (1, 4)])
def test_layered_rejects_bad_parameters(r, n):
    with pytest.raises(ValueError):
        build_layered(r, n)


# -- three-coloured tripartite construction ----------------------------------

@pytest.mark.parametrize("n", [6, 9, 12])
def test_turan3_shape(n):
    g, col = build_turan3(n)
    assert g.n == n
    assert g.edge_count == n * n // 3
    assert min_degree(g) == 2 * n // 3
    assert col.r == 3
    for v in range(n):
        colours = {col.colour_of(v, w) for w in g.neighbours(v)}
        assert len(colours) == 2


def test_turan3_parts_are_independent():
    g, _ = build_turan3(9)
    part = [v for v in range(9) if not g.has_edge(0, v) and v != 0] + [0]
    assert len(part) == 3
    for u in part:
        for v in part:
            if u != v:
                assert not g.has_edge(u, v)


@pytest.mark.parametrize(
    "n,vector", [(6, (2, 2, 2)), (9, (3, 3, 3)), (12, (4, 4, 4))]
)
def test_turan3_every_hamilton_cycle_is_balanced(n, vector):
    g, col = build_turan3(n)
    land = bias_landscape(g, col, limit=n)
    assert land.hamiltonian
    assert land.vectors == (vector,)
    assert land.max_count == n // 3


@pytest.mark.parametrize("n", [0, 5, 7])
def test_turan3_rejects_bad_parameters(n):
    with pytest.raises(ValueError):
        build_turan3(n)
