from __future__ import annotations

import pytest

from oddcolour.catalog import catalog_graph
from oddcolour.configurations import (
    ConfigMatch,
    claim1_matches,
    claim2_matches,
    find_claim1_config,
    find_claim2_config,
)
from oddcolour.generate import gen_near_triangulation


@pytest.mark.parametrize("name", ["octahedron", "antiprism-4", "glued-octahedra"])
def test_claim1_present(name):
    assert find_claim1_config(catalog_graph(name)) is not None


@pytest.mark.parametrize("name", ["C5", "icosahedron", "K4"])
def test_claim1_absent(name):
    assert find_claim1_config(catalog_graph(name)) is None


def test_claim2_on_fig2_host():
    m = find_claim2_config(catalog_graph("fig2-host"))
    assert m is not None
    assert m.to_dict() == {"kind": "claim2", "v": 0, "x": 1, "y1": 2, "y2": 3, "w": 4, "z1": 5, "z2": 6, "z3": 7}
    assert m.removed() == (0,)


@pytest.mark.parametrize("name", ["octahedron", "glued-octahedra", "C5"])
def test_claim2_absent(name):
    assert find_claim2_config(catalog_graph(name)) is None


def _check_claim1(g, m):
    assert g.degree(m.u) == g.degree(m.v) == 4 and g.has_edge(m.u, m.v)
    assert g.has_edge(m.u, m.w) and g.has_edge(m.v, m.w)


def _check_claim2(g, m):
    assert g.degree(m.v) == 4 and g.degree(m.x) == 6 and g.has_edge(m.v, m.x)
    for y in m.y:
        assert g.has_edge(y, m.v) and g.has_edge(y, m.x)
    assert set(g.neighbours(m.v)) == {m.x, *m.y, m.w}
    assert set(g.neighbours(m.x)) == {m.v, *m.y, *m.z}


@pytest.mark.parametrize("seed", range(30))
def test_match_invariants(seed):
    g, _ = gen_near_triangulation(15 + seed, seed, removals=seed % 9)
    for m in claim1_matches(g):
        _check_claim1(g, m)
    for m in claim2_matches(g):
        _check_claim2(g, m)


def test_claim1_matches_brute_force():
    g = catalog_graph("antiprism-6")
    found = {(m.u, m.v) for m in claim1_matches(g)}
    expected = {
        (u, v) for u, v in g.edges()
        if g.degree(u) == g.degree(v) == 4 and g.neighbours(u) & g.neighbours(v)
    }
    assert found == expected


def test_match_arity_is_checked():
    with pytest.raises(ValueError):
        ConfigMatch("claim1", (0, 1))
    with pytest.raises(AttributeError):
        ConfigMatch("claim2", tuple(range(8))).u
