"""Seeded random plane triangulations and near-triangulations.

Randomness comes from :class:`random.Random` integer draws only
(``randrange``), which are reproducible across platforms for a fixed seed.
"""

from __future__ import annotations

import random

from .embedding import RotationSystem, trace_faces
from .errors import MalformedInputError
from .graph import Graph


def _insert_after(lst: list[int], anchor: int, item: int) -> None:
    lst.insert(lst.index(anchor) + 1, item)


def _faces(rot: dict[int, list[int]]) -> list[tuple[int, int, int]]:
    """Triangular faces as dart-ordered triples ``(a, b, c)``."""
    seen: set[tuple[int, int]] = set()
    out = []
    for u in sorted(rot):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                walk.append(dart[0])
                a, b = dart
                r = rot[b]
                dart = (b, r[(r.index(a) + 1) % len(r)])
            out.append(tuple(walk))
    return out  # type: ignore[return-value]


def _flip(rot: dict[int, list[int]], a: int, b: int) -> bool:
    """Flip edge ``ab`` of a triangulation if the result stays simple."""
    c = rot[b][(rot[b].index(a) + 1) % len(rot[b])]
    d = rot[a][(rot[a].index(b) + 1) % len(rot[a])]
    if c == d or d in rot[c] or len(rot[a]) <= 3 or len(rot[b]) <= 3:
        return False
    rot[a].remove(b)
    rot[b].remove(a)
    _insert_after(rot[c], b, d)
    _insert_after(rot[d], a, c)
    return True


def gen_random_planar(n: int, seed: int, flips: int | None = None) -> tuple[Graph, RotationSystem]:
    """Maximal plane graph on ``n`` vertices.

    Starts from a triangle, splits a uniformly chosen face with each new
    vertex, then applies ``flips`` random edge flips (default ``n``) so the
    output is not restricted to stacked triangulations.
    """
    if n < 3:
        raise MalformedInputError(f"need n >= 3, got {n}")
    rng = random.Random(seed)
    rot: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    faces = _faces(rot)
    for x in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        _insert_after(rot[b], a, x)
        _insert_after(rot[c], b, x)
        _insert_after(rot[a], c, x)
        rot[x] = [b, a, c]
        faces.extend([(a, b, x), (b, c, x), (c, a, x)])
    if n > 4:
        for _ in range(n if flips is None else flips):
            a = rng.randrange(n)
            b = rot[a][rng.randrange(len(rot[a]))]
            _flip(rot, a, b)
    rs = RotationSystem(rot)
    return rs.to_graph(), rs


def remove_edges_planar(
    g: Graph, rot: RotationSystem, count: int, seed: int
) -> tuple[Graph, RotationSystem]:
    """Delete up to ``count`` random edges while keeping the graph connected.

    Deleting an edge from a rotation system keeps it a plane embedding, so
    the result is a near-triangulation with some larger faces.
    """
    rng = random.Random(seed)
    lists = {v: list(r) for v, r in rot.items()}
    removed = 0
    attempts = 0
    while removed < count and attempts < 20 * count + 20:
        attempts += 1
        edges = sorted((u, v) for u, r in lists.items() for v in r if u < v)
        u, v = edges[rng.randrange(len(edges))]
        trial = {w: list(r) for w, r in lists.items()}
        trial[u].remove(v)
        trial[v].remove(u)
        if RotationSystem(trial).to_graph().is_connected():
            lists = trial
            removed += 1
    rs = RotationSystem(lists)
    return rs.to_graph(), rs


def gen_near_triangulation(n: int, seed: int, removals: int) -> tuple[Graph, RotationSystem]:
    g, rot = gen_random_planar(n, seed)
    return remove_edges_planar(g, rot, removals, seed + 1)


def face_sizes(g: Graph, rot: RotationSystem) -> list[int]:
    return [f.size for f in trace_faces(g, rot)]
