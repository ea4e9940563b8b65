"""Scanners for the two reducible configurations.

* ``claim1``: adjacent 4-vertices ``u, v`` with a common neighbour ``w``.
* ``claim2``: a 4-vertex ``v`` adjacent to a 6-vertex ``x`` sharing at least
  two neighbours ``y1, y2``; ``w`` is the fourth neighbour of ``v`` and
  ``z1, z2, z3`` the remaining neighbours of ``x``.

Scan order is by lowest vertex id throughout, so the first match is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .graph import Graph


@dataclass(frozen=True)
class ConfigMatch:
    kind: Literal["claim1", "claim2"]
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = 3 if self.kind == "claim1" else 8
        if len(self.vertices) != expected:
            raise ValueError(f"{self.kind} match needs {expected} vertices, got {len(self.vertices)}")

    # claim1: (u, v, w); claim2: (v, x, y1, y2, w, z1, z2, z3)
    @property
    def u(self) -> int:
        if self.kind != "claim1":
            raise AttributeError("u is defined for claim1 matches only")
        return self.vertices[0]

    @property
    def v(self) -> int:
        return self.vertices[1] if self.kind == "claim1" else self.vertices[0]

    @property
    def w(self) -> int:
        return self.vertices[2] if self.kind == "claim1" else self.vertices[4]

    @property
    def x(self) -> int:
        return self.vertices[1]

    @property
    def y(self) -> tuple[int, int]:
        return self.vertices[2], self.vertices[3]

    @property
    def z(self) -> tuple[int, int, int]:
        return self.vertices[5], self.vertices[6], self.vertices[7]

    def removed(self) -> tuple[int, ...]:
        """Vertices deleted by the reduction."""
        return (self.u, self.v) if self.kind == "claim1" else (self.v,)

    def to_dict(self) -> dict:
        if self.kind == "claim1":
            names = ("u", "v", "w")
        else:
            names = ("v", "x", "y1", "y2", "w", "z1", "z2", "z3")
        return {"kind": self.kind, **dict(zip(names, self.vertices))}


def claim1_matches(g: Graph) -> Iterator[ConfigMatch]:
    for u in g.vertices():
        if g.degree(u) != 4:
            continue
        nu = g.neighbours(u)
        for v in sorted(nu):
            if v < u or g.degree(v) != 4:
                continue
            common = nu & g.neighbours(v)
            if common:
                yield ConfigMatch("claim1", (u, v, min(common)))


def claim2_matches(g: Graph) -> Iterator[ConfigMatch]:
    for v in g.vertices():
        if g.degree(v) != 4:
            continue
        nv = g.neighbours(v)
        for x in sorted(nv):
            if g.degree(x) != 6:
                continue
            common = sorted(nv & g.neighbours(x))
            if len(common) < 2:
                continue
            y1, y2 = common[0], common[1]
            (w,) = nv - {x, y1, y2}
            z = sorted(g.neighbours(x) - {v, y1, y2})
            yield ConfigMatch("claim2", (v, x, y1, y2, w, *z))


def find_claim1_config(g: Graph) -> ConfigMatch | None:
    return next(claim1_matches(g), None)


def find_claim2_config(g: Graph) -> ConfigMatch | None:
    return next(claim2_matches(g), None)
