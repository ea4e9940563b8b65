"""Named test graphs.

Planar entries come back as embedding documents; the rest as graph6.
Parametrized families accept any size: ``C<n>``, ``P<n>``, ``K<n>``,
``K<a>,<b>``, ``antiprism-<n>`` and ``wheel-<n>``.
"""

from __future__ import annotations

import re
from typing import Callable

import networkx as nx

from .embedding import RotationSystem, embed_planar
from .errors import MalformedInputError
from .formats import GraphDocument, dump_embedding, to_graph6
from .graph import Edge, Graph


def _cycle(n: int) -> list[Edge]:
    return [(i, (i + 1) % n) for i in range(n)]


def _complete(n: int) -> list[Edge]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _bipartite(a: int, b: int) -> list[Edge]:
    return [(i, a + j) for i in range(a) for j in range(b)]


def _antiprism(n: int) -> list[Edge]:
    out = []
    for i in range(n):
        j = (i + 1) % n
        out += [(i, j), (n + i, n + j), (i, n + i), (i, n + j)]
    return out


def _wheel(n: int) -> list[Edge]:
    return [(0, i) for i in range(1, n + 1)] + [(1 + i, 1 + (i + 1) % n) for i in range(n)]


_OCTAHEDRON = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1),
               (5, 1), (5, 2), (5, 3), (5, 4)]


def _glued_octahedra() -> list[Edge]:
    # two octahedra sharing vertex 0, which ends up with degree 8
    second = {0: 0, 1: 6, 2: 7, 3: 8, 4: 9, 5: 10}
    return _OCTAHEDRON + [(second[u], second[v]) for u, v in _OCTAHEDRON]


def _nx_edges(h: nx.Graph) -> list[Edge]:
    return [(int(u), int(v)) for u, v in h.edges()]


# Two adjacent 4-vertices u=0, v=1 with common neighbour w=2; every
# neighbour of u and v is present.
_FIG1 = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 5), (1, 6),
         (2, 3), (3, 4), (4, 6), (6, 5), (5, 2)]

# 4-vertex v=0 and 6-vertex x=1 with common neighbours y1=2, y2=3; v's fourth
# neighbour is w=4 and x's others are z1..z3 = 5, 6, 7.  Leaves 8..15 make the
# neighbourhood colour classes of y1, y2, w and the z's controllable.
_FIG2 = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (1, 6), (1, 7),
         (2, 8), (2, 9), (3, 10), (3, 11), (4, 12), (5, 13), (6, 14), (7, 15)]

_FIXED: dict[str, tuple[int, Callable[[], list[Edge]]]] = {
    "K1": (1, lambda: []),
    "K2": (2, lambda: [(0, 1)]),
    "K3": (3, lambda: _complete(3)),
    "K4": (4, lambda: _complete(4)),
    "K5": (5, lambda: _complete(5)),
    "K3,3": (6, lambda: _bipartite(3, 3)),
    "K1,3": (4, lambda: _bipartite(1, 3)),
    "K1,4": (5, lambda: _bipartite(1, 4)),
    "P3": (3, lambda: [(0, 1), (1, 2)]),
    "C4": (4, lambda: _cycle(4)),
    "C5": (5, lambda: _cycle(5)),
    "C7": (7, lambda: _cycle(7)),
    "theta": (5, lambda: _bipartite(2, 3)),
    "Q3": (8, lambda: [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)]),
    "prism": (6, lambda: [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
    "octahedron": (6, lambda: list(_OCTAHEDRON)),
    "icosahedron": (12, lambda: _nx_edges(nx.icosahedral_graph())),
    "dodecahedron": (20, lambda: _nx_edges(nx.dodecahedral_graph())),
    "petersen": (10, lambda: _nx_edges(nx.petersen_graph())),
    "glued-octahedra": (11, _glued_octahedra),
    "fig1-host": (7, lambda: list(_FIG1)),
    "fig2-host": (16, lambda: list(_FIG2)),
}

_FAMILIES: list[tuple[re.Pattern[str], int, Callable[..., tuple[int, list[Edge]]]]] = [
    (re.compile(r"C(\d+)"), 3, lambda n: (n, _cycle(n))),
    (re.compile(r"P(\d+)"), 1, lambda n: (n, [(i, i + 1) for i in range(n - 1)])),
    (re.compile(r"K(\d+)"), 1, lambda n: (n, _complete(n))),
    (re.compile(r"K(\d+),(\d+)"), 1, lambda a, b: (a + b, _bipartite(a, b))),
    (re.compile(r"antiprism-(\d+)"), 3, lambda n: (2 * n, _antiprism(n))),
    (re.compile(r"wheel-(\d+)"), 3, lambda n: (n + 1, _wheel(n))),
]

# Instances of the parametrized families listed alongside the fixed names.
FAMILY_INSTANCES = [f"antiprism-{n}" for n in range(3, 9)] + [f"wheel-{n}" for n in range(3, 9)]

# Connected plane graphs with every degree even and at least 4.
EVEN_DEGREE_4_NAMES = ["octahedron", *(f"antiprism-{n}" for n in range(3, 9)), "glued-octahedra"]


def catalog_names() -> list[str]:
    return list(_FIXED) + FAMILY_INSTANCES


def catalog_graph(name: str) -> Graph:
    if name in _FIXED:
        n, edges = _FIXED[name]
        return Graph.from_edges(n, edges())
    for pattern, least, build in _FAMILIES:
        m = pattern.fullmatch(name)
        if m:
            args = [int(x) for x in m.groups()]
            if min(args) < least:
                raise MalformedInputError(f"{name}: parameter must be at least {least}")
            n, edges = build(*args)
            return Graph.from_edges(n, edges)
    raise MalformedInputError(
        f"unknown catalog graph {name!r}; available: {', '.join(catalog_names())}"
        " (families: C<n>, P<n>, K<n>, K<a>,<b>, antiprism-<n>, wheel-<n>)"
    )


def catalog_entry(name: str) -> tuple[Graph, RotationSystem | None]:
    g = catalog_graph(name)
    return g, embed_planar(g)


def catalog(name: str) -> GraphDocument:
    """Document for ``name``: an embedding document if planar, otherwise graph6."""
    g, rot = catalog_entry(name)
    if rot is None:
        return GraphDocument("graph6", to_graph6(g), name)
    return GraphDocument("embedding-doc", dump_embedding(g, rot, name), name)


def planar_catalog() -> list[tuple[str, Graph, RotationSystem]]:
    out = []
    for name in catalog_names():
        g, rot = catalog_entry(name)
        if rot is not None:
            out.append((name, g, rot))
    return out
