"""Simple undirected graphs with stable vertex identities.

Vertex ids are integers in ``range(capacity)``.  Deleting a vertex leaves a
tombstone in its slot, so ids recorded before a deletion keep pointing at the
same vertex afterwards.  Every mutating method returns a new :class:`Graph`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Sequence

from .errors import MalformedInputError

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph over ``range(capacity)`` with tombstoned slots."""

    __slots__ = ("_adj", "_order", "_size")

    def __init__(self, adjacency: Sequence[frozenset[int] | None]) -> None:
        self._adj: tuple[frozenset[int] | None, ...] = tuple(adjacency)
        self._order = sum(1 for a in self._adj if a is not None)
        self._size = sum(len(a) for a in self._adj if a is not None) // 2

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge]) -> Graph:
        if order < 0:
            raise MalformedInputError(f"negative order {order}")
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise MalformedInputError(f"edge ({u}, {v}) references a vertex outside range({order})")
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            if v in adj[u]:
                raise MalformedInputError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls([frozenset(a) for a in adj])

    # queries ------------------------------------------------------------

    @property
    def capacity(self) -> int:
        """Number of id slots, live or tombstoned."""
        return len(self._adj)

    @property
    def order(self) -> int:
        return self._order

    @property
    def size(self) -> int:
        return self._size

    def vertices(self) -> list[int]:
        return [v for v, a in enumerate(self._adj) if a is not None]

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < len(self._adj) and self._adj[v] is not None

    def _require(self, v: int) -> frozenset[int]:
        if not (isinstance(v, int) and 0 <= v < len(self._adj)):
            raise MalformedInputError(f"vertex {v!r} does not exist")
        a = self._adj[v]
        if a is None:
            raise MalformedInputError(f"vertex {v} has been deleted")
        return a

    def neighbours(self, v: int) -> frozenset[int]:
        return self._require(v)

    def degree(self, v: int) -> int:
        return len(self._require(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._require(u)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u, a in enumerate(self._adj) if a is not None for v in a if u < v)

    def degrees(self) -> dict[int, int]:
        return {v: len(a) for v, a in enumerate(self._adj) if a is not None}

    def is_compact(self) -> bool:
        return all(a is not None for a in self._adj)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen: set[int] = set()
        out: list[list[int]] = []
        for s in self.vertices():
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:  # type: ignore[union-attr]
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # derived graphs -----------------------------------------------------

    def subgraph(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on ``keep``; ids are preserved, the rest tombstoned."""
        keep_set = set(keep)
        for v in keep_set:
            self._require(v)
        return Graph([
            frozenset(a & keep_set) if (a is not None and v in keep_set) else None
            for v, a in enumerate(self._adj)
        ])

    def remove_vertex(self, v: int) -> Graph:
        return self.remove_vertices([v])

    def remove_vertices(self, vs: Iterable[int]) -> Graph:
        gone = set(vs)
        for v in gone:
            self._require(v)
        return Graph([
            None if (a is None or v in gone) else frozenset(a - gone)
            for v, a in enumerate(self._adj)
        ])

    def add_edge(self, u: int, v: int) -> Graph:
        return self.add_edges([(u, v)])

    def add_edges(self, edges: Iterable[Edge]) -> Graph:
        adj = [None if a is None else set(a) for a in self._adj]
        for u, v in edges:
            self._require(u)
            self._require(v)
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            if v in adj[u]:  # type: ignore[operator]
                raise MalformedInputError(f"edge ({u}, {v}) already present")
            adj[u].add(v)  # type: ignore[union-attr]
            adj[v].add(u)  # type: ignore[union-attr]
        return Graph([None if a is None else frozenset(a) for a in adj])

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise MalformedInputError(f"edge ({u}, {v}) not present")
        adj = list(self._adj)
        adj[u] = adj[u] - {v}  # type: ignore[operator]
        adj[v] = adj[v] - {u}  # type: ignore[operator]
        return Graph(adj)

    def attach_leaf(self, v: int, leaf: int | None = None) -> tuple[Graph, int]:
        """Add a new vertex adjacent only to ``v``.

        ``leaf`` picks the new id; it must be a free slot (tombstoned or at or
        beyond ``capacity``).  Defaults to ``capacity``.
        """
        self._require(v)
        if leaf is None:
            leaf = len(self._adj)
        if leaf in self or leaf < 0:
            raise MalformedInputError(f"id {leaf} is not free")
        adj = list(self._adj)
        if leaf >= len(adj):
            adj.extend([None] * (leaf + 1 - len(adj)))
        adj[leaf] = frozenset({v})
        adj[v] = adj[v] | {leaf}  # type: ignore[operator]
        return Graph(adj), leaf

    def restore_vertex(self, v: int, neighbours: Iterable[int]) -> Graph:
        """Re-insert ``v`` (which must be free) joined to ``neighbours``."""
        nbrs = frozenset(neighbours)
        if v in self or v < 0:
            raise MalformedInputError(f"id {v} is not free")
        for w in nbrs:
            self._require(w)
        adj = list(self._adj)
        if v >= len(adj):
            adj.extend([None] * (v + 1 - len(adj)))
        adj[v] = nbrs
        for w in nbrs:
            adj[w] = adj[w] | {v}  # type: ignore[operator]
        return Graph(adj)

    def compact(self) -> tuple[Graph, list[int]]:
        """Renumber live vertices to ``0..order-1``; returns graph and old ids."""
        old = self.vertices()
        index = {v: i for i, v in enumerate(old)}
        return Graph([frozenset(index[w] for w in self._adj[v]) for v in old]), old  # type: ignore[union-attr]

    def csr(self) -> tuple[list[int], list[int], list[int]]:
        """Compressed adjacency over compacted ids: ``(indptr, indices, ids)``.

        Neighbour lists are sorted so that downstream searches are
        deterministic.
        """
        ids = self.vertices()
        index = {v: i for i, v in enumerate(ids)}
        indptr = [0]
        indices: list[int] = []
        for v in ids:
            indices.extend(sorted(index[w] for w in self._adj[v]))  # type: ignore[union-attr]
            indptr.append(len(indices))
        return indptr, indices, ids

    # dunder -------------------------------------------------------------

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())

    def __len__(self) -> int:
        return self._order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._live() == other._live()

    def _live(self) -> dict[int, frozenset[int]]:
        return {v: a for v, a in enumerate(self._adj) if a is not None}

    def __hash__(self) -> int:
        return hash(frozenset(self._live().items()))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def build_graph(order: int, edges: Iterable[Edge]) -> Graph:
    """Graph on ``range(order)`` with exactly ``edges``; loops and repeats rejected."""
    return Graph.from_edges(order, edges)


@dataclass(frozen=True)
class Mutation:
    graph: Graph
    applied: bool
    vertex: int | None = None


MutationKind = Literal["remove-vertex", "add-edge", "attach-leaf", "remove-edge"]


def mutate(g: Graph, op: MutationKind, *args: int) -> Mutation:
    """Apply one named edit.

    ``add-edge`` on an already adjacent pair is a flagged no-op
    (``applied=False``) instead of an error.  ``attach-leaf`` reports the new
    id in ``vertex``.
    """
    if op == "remove-vertex":
        (v,) = args
        return Mutation(g.remove_vertex(v), True, v)
    if op == "add-edge":
        u, v = args
        if u == v:
            raise MalformedInputError(f"loop at vertex {u}")
        if g.has_edge(u, v):
            return Mutation(g, False)
        return Mutation(g.add_edge(u, v), True)
    if op == "remove-edge":
        u, v = args
        return Mutation(g.remove_edge(u, v), True)
    if op == "attach-leaf":
        g2, leaf = g.attach_leaf(*args)
        return Mutation(g2, True, leaf)
    raise MalformedInputError(f"unknown mutation {op!r}")
