from __future__ import annotations

import networkx as nx
import pytest

from oddcolour.catalog import (
    EVEN_DEGREE_4_NAMES,
    catalog,
    catalog_graph,
    catalog_names,
    planar_catalog,
)
from oddcolour.embedding import validate_embedding
from oddcolour.errors import MalformedInputError
from oddcolour.generate import face_sizes, gen_near_triangulation, gen_random_planar
from oracles import to_nx


@pytest.mark.parametrize(
    "name,order,size",
    [("K1", 1, 0), ("K4", 4, 6), ("K3,3", 6, 9), ("C5", 5, 5), ("P3", 3, 2), ("Q3", 8, 12),
     ("petersen", 10, 15), ("icosahedron", 12, 30), ("dodecahedron", 20, 30),
     ("glued-octahedra", 11, 24), ("antiprism-5", 10, 20), ("wheel-6", 7, 12), ("K2,5", 7, 10)],
)
def test_orders_and_sizes(name, order, size):
    g = catalog_graph(name)
    assert (g.order, g.size) == (order, size)


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(to_nx(catalog_graph("petersen")), nx.petersen_graph())
    assert nx.is_isomorphic(to_nx(catalog_graph("Q3")), nx.hypercube_graph(3))
    assert nx.is_isomorphic(to_nx(catalog_graph("octahedron")), nx.octahedral_graph())
    assert nx.is_isomorphic(to_nx(catalog_graph("theta")), nx.complete_bipartite_graph(2, 3))


def test_planarity_split():
    planar = {name for name, _, _ in planar_catalog()}
    assert {"K5", "K3,3", "petersen"}.isdisjoint(planar)
    assert set(EVEN_DEGREE_4_NAMES) <= planar
    assert catalog("K5").format == "graph6"


def test_unknown_name_lists_choices():
    with pytest.raises(MalformedInputError) as exc:
        catalog_graph("nonesuch")
    assert "octahedron" in str(exc.value) and "antiprism-<n>" in str(exc.value)


def test_family_parameter_checked():
    with pytest.raises(MalformedInputError):
        catalog_graph("C2")


def test_names_are_unique():
    names = catalog_names()
    assert len(names) == len(set(names))


def test_smallest_random_planar_is_triangle():
    g, rot = gen_random_planar(3, 0)
    assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert face_sizes(g, rot) == [3, 3]


def test_random_planar_is_deterministic():
    a = gen_random_planar(20, 7)
    b = gen_random_planar(20, 7)
    assert a[0] == b[0] and dict(a[1].items()) == dict(b[1].items())


@pytest.mark.parametrize("n,seed", [(4, 0), (10, 1), (20, 7), (57, 3)])
def test_random_planar_is_a_triangulation(n, seed):
    g, rot = gen_random_planar(n, seed)
    assert g.size == 3 * n - 6
    assert validate_embedding(g, rot).planar
    assert set(face_sizes(g, rot)) == {3}
    assert nx.check_planarity(to_nx(g))[0]


def test_random_planar_rejects_small_order():
    with pytest.raises(MalformedInputError):
        gen_random_planar(2, 0)


@pytest.mark.parametrize("seed", range(10))
def test_near_triangulation_stays_connected_and_planar(seed):
    g, rot = gen_near_triangulation(15, seed, removals=6)
    assert g.is_connected() and validate_embedding(g, rot).planar
    assert g.size >= 3 * 15 - 6 - 6
