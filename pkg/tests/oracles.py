"""Independent reference implementations used only by the tests.

None of these share code with the package beyond the ``Graph`` container.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from pathlib import Path

import networkx as nx
import numpy as np

from oddcolour.graph import Graph

DATA = Path(__file__).parent / "data"


def load_corpus() -> list[str]:
    return (DATA / "connected_le6.g6").read_text().split()


def decode_graph6_bits(s: str) -> tuple[int, set[tuple[int, int]]]:
    """Second graph6 decoder via a bit string; small orders only."""
    n = ord(s[0]) - 63
    bits = "".join(format(ord(ch) - 63, "06b") for ch in s[1:])
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.add((i, j))
            k += 1
    return n, edges


def odd_assignments(g: Graph, k: int) -> np.ndarray:
    """Boolean mask over all ``k**n`` assignments (row-major) marking odd colourings."""
    ids = g.vertices()
    n = len(ids)
    pos = {v: i for i, v in enumerate(ids)}
    cols = np.array(list(product(range(k), repeat=n)), dtype=np.int8).reshape(-1, n)
    ok = np.ones(len(cols), dtype=bool)
    for u, v in g.edges():
        ok &= cols[:, pos[u]] != cols[:, pos[v]]
    palette = np.arange(k, dtype=np.int8)
    for x in ids:
        nb = [pos[w] for w in g.neighbours(x)]
        if not nb:
            continue
        counts = sum((cols[:, i][:, None] == palette).astype(np.int8) for i in nb)
        ok &= (counts % 2).any(axis=1)
    return ok


def brute_force_solvable(g: Graph, k: int) -> bool:
    if g.order == 0:
        return True
    return bool(odd_assignments(g, k).any())


def brute_force_chi(g: Graph) -> int:
    k = 1
    while not brute_force_solvable(g, k):
        k += 1
    return k


def brute_force_is_odd(g: Graph, colours: dict[int, int]) -> bool:
    for u, v in g.edges():
        if colours[u] == colours[v]:
            return False
    for x in g.vertices():
        nb = list(g.neighbours(x))
        if nb and all(sum(1 for w in nb if colours[w] == c) % 2 == 0 for c in {colours[w] for w in nb}):
            return False
    return True


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def nx_embedding(rot) -> nx.PlanarEmbedding:
    """networkx embedding from a counter-clockwise rotation system."""
    emb = nx.PlanarEmbedding()
    # networkx stores clockwise order
    emb.set_data({v: list(reversed(nbrs)) for v, nbrs in rot.items()})
    return emb


def nx_face_sizes(rot) -> list[int]:
    """Face lengths traced by networkx over the same embedding."""
    emb = nx_embedding(rot)
    seen: set[tuple[int, int]] = set()
    sizes = []
    for u, v in sorted(emb.edges()):
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        sizes.append(len(face))
    return sorted(sizes)


def reference_discharge(g: Graph, rot) -> tuple[dict[int, Fraction], list[Fraction], Fraction]:
    """Discharging with exact fractions, written from the rule text.

    Faces are traced by following ``(u, v) -> (v, w)`` where ``w`` follows
    ``u`` in the counter-clockwise order at ``v``.
    """
    deg = {v: g.degree(v) for v in g.vertices()}
    charge = {v: Fraction(d - 6) for v, d in deg.items()}
    darts = sorted((u, v) for u in g.vertices() for v in g.neighbours(u))
    seen = set()
    faces = []
    for d in darts:
        if d in seen:
            continue
        walk = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            walk.append(cur[0])
            u, v = cur
            r = list(rot[v])
            cur = (v, r[(r.index(u) + 1) % len(r)])
        faces.append(walk)
    faces += [[] for v in g.vertices() if deg[v] == 0]
    fcharge = [Fraction(2 * len(w) - 6) for w in faces]
    half, three_q = Fraction(1, 2), Fraction(3, 4)
    for u in g.vertices():
        if deg[u] < 8:
            continue
        r = list(rot[u])
        for i, v in enumerate(r):
            if deg[v] == 4 and deg[r[(i + 1) % len(r)]] >= 6:
                charge[u] -= half
                charge[v] += half
    for i, walk in enumerate(faces):
        size = len(walk)
        if size < 4:
            continue
        ds = [deg[v] for v in walk]
        n4 = ds.count(4)
        for j, v in enumerate(walk):
            if ds[j] != 4:
                continue
            if size == 4 and n4 == 4:
                amt = half
            elif size == 4 and n4 == 3 and max(ds) >= 6:
                big = next(t for t in range(4) if ds[t] != 4)
                amt = three_q if (j - big) % 4 in (1, 3) else half
            elif size == 5 and n4 == 5:
                amt = three_q
            else:
                amt = Fraction(1)
            fcharge[i] -= amt
            charge[v] += amt
    return charge, fcharge, sum(charge.values()) + sum(fcharge)
