"""Combinatorial plane embeddings given as rotation systems.

Orientation convention, used everywhere in the package: each vertex stores its
neighbours in counter-clockwise order, and the face-tracing successor of the
dart ``(u, v)`` is ``(v, w)`` where ``w`` is the neighbour that follows ``u``
in the rotation at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .errors import EmbeddingError, GuaranteeViolated
from .graph import Graph

Dart = tuple[int, int]


class RotationSystem:
    """Counter-clockwise cyclic neighbour order around every vertex."""

    __slots__ = ("_rot", "_pos")

    def __init__(self, rotation: Mapping[int, Sequence[int]]) -> None:
        self._rot: dict[int, tuple[int, ...]] = {v: tuple(r) for v, r in sorted(rotation.items())}
        self._pos: dict[int, dict[int, int]] = {
            v: {w: i for i, w in enumerate(r)} for v, r in self._rot.items()
        }

    def vertices(self) -> list[int]:
        return list(self._rot)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self._rot[v]

    def __contains__(self, v: object) -> bool:
        return v in self._rot

    def items(self):
        return self._rot.items()

    def next_ccw(self, v: int, u: int) -> int:
        """Neighbour of ``v`` following ``u`` counter-clockwise."""
        r = self._rot[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def prev_ccw(self, v: int, u: int) -> int:
        r = self._rot[v]
        return r[(self._pos[v][u] - 1) % len(r)]

    def mirrored(self) -> RotationSystem:
        return RotationSystem({v: tuple(reversed(r)) for v, r in self._rot.items()})

    def check(self, g: Graph) -> None:
        """Raise :class:`EmbeddingError` unless every cycle permutes ``adj(v)``."""
        live = set(g.vertices())
        for v in self._rot:
            if v not in live:
                raise EmbeddingError(f"rotation lists unknown vertex {v}", vertex=v)
        for v in sorted(live):
            if v not in self._rot:
                raise EmbeddingError(f"vertex {v} has no rotation", vertex=v)
            r = self._rot[v]
            if len(set(r)) != len(r) or set(r) != g.neighbours(v):
                raise EmbeddingError(
                    f"rotation at vertex {v} is {list(r)}, not a permutation of its "
                    f"neighbours {sorted(g.neighbours(v))}",
                    vertex=v,
                )

    def to_graph(self) -> Graph:
        """Graph whose adjacency is read off the rotation lists (must be symmetric)."""
        cap = max(self._rot, default=-1) + 1
        adj: list[frozenset[int] | None] = [None] * cap
        for v, r in self._rot.items():
            if v < 0:
                raise EmbeddingError(f"negative vertex id {v}", vertex=v)
            if len(set(r)) != len(r):
                raise EmbeddingError(f"vertex {v} lists a neighbour twice", vertex=v)
            if v in r:
                raise EmbeddingError(f"vertex {v} lists itself", vertex=v)
            adj[v] = frozenset(r)
        for v, r in self._rot.items():
            for w in r:
                if w not in self._rot or v not in self._rot[w]:
                    raise EmbeddingError(
                        f"vertex {v} lists {w} but {w} does not list {v}", vertex=v
                    )
        return Graph(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self._rot == other._rot

    def __repr__(self) -> str:
        return f"RotationSystem({self._rot!r})"


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of one face.

    ``darts`` is the orbit of the successor rule, started at its smallest
    dart.  An isolated vertex bounds a single face with no darts; ``anchor``
    names that vertex.
    """

    darts: tuple[Dart, ...]
    anchor: int | None = None

    @property
    def size(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Boundary vertices in walk order, repeated vertices included."""
        return tuple(u for u, _ in self.darts)

    def is_degenerate(self) -> bool:
        vs = self.vertices
        return len(set(vs)) != len(vs)


def trace_faces(g: Graph, rot: RotationSystem) -> list[FaceWalk]:
    """All face boundary walks of the embedding, in deterministic order."""
    rot.check(g)
    faces: list[FaceWalk] = []
    seen: set[Dart] = set()
    for v in g.vertices():
        if g.degree(v) == 0:
            faces.append(FaceWalk((), anchor=v))
    for start in sorted((u, v) for u in g.vertices() for v in g.neighbours(u)):
        if start in seen:
            continue
        walk: list[Dart] = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            walk.append(dart)
            u, v = dart
            dart = (v, rot.next_ccw(v, u))
        if dart != start:
            raise GuaranteeViolated(f"face orbit from {start} did not close")
        faces.append(FaceWalk(tuple(walk)))
    return faces


@dataclass(frozen=True)
class ComponentEuler:
    vertices: int
    edges: int
    faces: int

    @property
    def characteristic(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def genus(self) -> int:
        return (2 - self.characteristic) // 2


@dataclass(frozen=True)
class EmbeddingReport:
    vertices: int
    edges: int
    faces: int
    components: tuple[ComponentEuler, ...] = field(default_factory=tuple)

    @property
    def characteristic(self) -> int:
        """V - E + F with faces counted per component."""
        return self.vertices - self.edges + self.faces

    @property
    def planar(self) -> bool:
        return all(c.characteristic == 2 for c in self.components)

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1


def validate_embedding(g: Graph, rot: RotationSystem) -> EmbeddingReport:
    """Euler check per connected component; non-planar rotations are reported."""
    faces = trace_faces(g, rot)
    comp_of: dict[int, int] = {}
    comps = g.components()
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    nfaces = [0] * len(comps)
    for f in faces:
        v = f.anchor if f.anchor is not None else f.darts[0][0]
        nfaces[comp_of[v]] += 1
    per = []
    for i, comp in enumerate(comps):
        e = sum(g.degree(v) for v in comp) // 2
        per.append(ComponentEuler(len(comp), e, nfaces[i]))
    return EmbeddingReport(g.order, g.size, len(faces), tuple(per))


def embed_planar(g: Graph) -> RotationSystem | None:
    """A plane rotation system for ``g``, or ``None`` if ``g`` is not planar."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    planar, emb = nx.check_planarity(h)
    if not planar:
        return None
    # networkx yields clockwise order; reverse for the package convention
    rot = RotationSystem({v: tuple(reversed(list(emb.neighbors_cw_order(v)))) for v in g.vertices()})
    if not validate_embedding(g, rot).planar:
        raise GuaranteeViolated("planarity test returned an embedding that fails the Euler check")
    return rot


def rotation_from_lists(lists: Iterable[Sequence[int]]) -> RotationSystem:
    return RotationSystem({v: tuple(r) for v, r in enumerate(lists)})
