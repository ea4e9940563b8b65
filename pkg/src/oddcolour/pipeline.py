"""Constructive odd 8-colouring of planar graphs.

The recursion mirrors the structure of the 8-colour argument:

1. each connected component is coloured on its own, with the same palette;
2. at most 8 vertices: exact solver;
3. even order: split into at most four induced odd forests and give forest
   ``i`` the colours ``2i`` and ``2i + 1``;
4. a vertex of odd degree: hang a leaf on it (the order becomes even),
   colour, drop the leaf;
5. a vertex of degree 2: delete it, join its neighbours, recurse, and give it
   a colour outside its forbidden set;
6. adjacent 4-vertices with a common neighbour: delete both, recurse, extend;
7. a 4-vertex and a 6-vertex sharing two neighbours: delete the 4-vertex,
   join its fourth neighbour to the 6-vertex, recurse, extend (the 6-vertex
   may be recoloured).

Extensions in 6 and 7 try every pair of colours for the two affected
vertices and keep the first pair that passes a local check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Union

from . import kernels
from .colouring import (
    Colouring,
    bipartition_odd_colouring,
    forbidden_set,
    is_odd_at,
    is_odd_colouring,
    is_odd_forest,
    solve_odd_k,
)
from .configurations import ConfigMatch, find_claim1_config, find_claim2_config
from .embedding import embed_planar
from .errors import BudgetExhausted, GuaranteeViolated, MalformedInputError, NotEmbeddableError
from .graph import Graph

PALETTE = 8
BASE_CASE_ORDER = 8
PARTITION_BUDGET = 10_000_000
SOLVER_BUDGET = 10_000_000


# --------------------------------------------------------------------------
# reduction trace


@dataclass(frozen=True)
class AttachLeaf:
    v: int
    leaf: int


@dataclass(frozen=True)
class ContractDeg2:
    v: int
    neighbours: tuple[int, int]
    edge_added: bool


@dataclass(frozen=True)
class RemoveClaim1:
    u: int
    v: int
    w: int
    neighbours_u: tuple[int, ...]
    neighbours_v: tuple[int, ...]


@dataclass(frozen=True)
class RemoveClaim2:
    v: int
    x: int
    neighbours_v: tuple[int, ...]
    added_edge: tuple[int, int] | None


Step = Union[AttachLeaf, ContractDeg2, RemoveClaim1, RemoveClaim2]


@dataclass
class ReductionTrace:
    """Reductions in the order they were performed, over one global id space."""

    steps: list[Step] = field(default_factory=list)

    def append(self, step: Step) -> None:
        self.steps.append(step)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @staticmethod
    def forward(g: Graph, step: Step) -> Graph:
        if isinstance(step, AttachLeaf):
            return g.attach_leaf(step.v, step.leaf)[0]
        if isinstance(step, ContractDeg2):
            h = g.remove_vertex(step.v)
            return h.add_edge(*step.neighbours) if step.edge_added else h
        if isinstance(step, RemoveClaim1):
            return g.remove_vertices((step.u, step.v))
        if isinstance(step, RemoveClaim2):
            h = g.remove_vertex(step.v)
            return h.add_edge(*step.added_edge) if step.added_edge else h
        raise TypeError(step)

    @staticmethod
    def backward(g: Graph, step: Step) -> Graph:
        if isinstance(step, AttachLeaf):
            return g.remove_vertex(step.leaf)
        if isinstance(step, ContractDeg2):
            h = g.remove_edge(*step.neighbours) if step.edge_added else g
            return h.restore_vertex(step.v, step.neighbours)
        if isinstance(step, RemoveClaim1):
            h = g.restore_vertex(step.u, [a for a in step.neighbours_u if a != step.v])
            return h.restore_vertex(step.v, step.neighbours_v)
        if isinstance(step, RemoveClaim2):
            h = g.remove_edge(*step.added_edge) if step.added_edge else g
            return h.restore_vertex(step.v, step.neighbours_v)
        raise TypeError(step)

    def reduce(self, g: Graph, upto: int | None = None) -> Graph:
        """Apply the first ``upto`` steps (all by default) to ``g``."""
        for step in self.steps[:upto]:
            g = self.forward(g, step)
        return g

    def unwind(self, reduced: Graph, upto: int | None = None) -> Graph:
        """Undo the first ``upto`` steps, last first, starting from ``reduced``."""
        g = reduced
        for step in reversed(self.steps[:upto]):
            g = self.backward(g, step)
        return g


# --------------------------------------------------------------------------
# even order: odd-forest partition


def four_forest_partition(g: Graph, budget: int = PARTITION_BUDGET) -> list[list[int]]:
    """Split ``V(g)`` into at most four sets, each inducing an odd forest."""
    if g.order % 2:
        raise MalformedInputError(f"odd-forest partition needs even order, got {g.order}")
    if not g.is_connected():
        raise MalformedInputError("odd-forest partition needs a connected graph")
    if g.order == 0:
        return []
    indptr, indices, ids = g.csr()
    status, parts, nodes = kernels.odd_forest_search(indptr, indices, 4, budget)
    if status == kernels.OVER_BUDGET:
        raise BudgetExhausted(f"odd-forest partition search exceeded {budget} nodes", nodes)
    if status == kernels.EXHAUSTED:
        raise GuaranteeViolated(
            "no partition into four odd forests exists; the input cannot be planar"
        )
    out: list[list[int]] = [[] for _ in range(4)]
    for i, p in enumerate(parts):
        out[p].append(ids[i])
    out = [sorted(p) for p in out if p]
    for p in out:
        if not is_odd_forest(g, p):
            raise GuaranteeViolated(f"partition search returned a part that is not an odd forest: {p}")
    return out


def colour_even_order(g: Graph, budget: int = PARTITION_BUDGET) -> Colouring:
    """Odd colouring of a connected planar graph of even order from forest pairs."""
    colours: dict[int, int] = {}
    for i, part in enumerate(four_forest_partition(g, budget)):
        colours.update(bipartition_odd_colouring(g, part, (2 * i, 2 * i + 1)).colours)
    return Colouring(PALETTE, colours)


# --------------------------------------------------------------------------
# extension searches


def claim1_successful_pairs(g: Graph, partial: Colouring, match: ConfigMatch) -> list[tuple[int, int]]:
    """All ``(colour of v, colour of u)`` pairs completing ``partial`` to an odd colouring."""
    u, v = match.u, match.v
    out = []
    for cv, cu in itertools.product(range(PALETTE), repeat=2):
        if cv == cu:
            continue
        trial = Colouring(PALETTE, {**partial.colours, u: cu, v: cv})
        if is_odd_at(g, trial, (u, v)):
            out.append((cv, cu))
    return out


def extend_after_claim1(g: Graph, partial: Colouring, match: ConfigMatch) -> Colouring:
    _require_partial(g, partial, match.removed())
    u, v = match.u, match.v
    for cv, cu in itertools.product(range(PALETTE), repeat=2):
        if cv == cu:
            continue
        trial = Colouring(PALETTE, {**partial.colours, u: cu, v: cv})
        if is_odd_at(g, trial, (u, v)):
            return trial
    raise GuaranteeViolated(f"no colour pair extends the colouring over {u}, {v} ({match.to_dict()})")


def claim2_reduced_graph(g: Graph, match: ConfigMatch) -> tuple[Graph, tuple[int, int] | None]:
    """``g`` minus ``v``, plus the edge ``wx`` unless it is already present."""
    h = g.remove_vertex(match.v)
    if h.has_edge(match.w, match.x):
        return h, None
    edge = (min(match.w, match.x), max(match.w, match.x))
    return h.add_edge(*edge), edge


def _claim2_x_colours(partial: Colouring, x: int) -> list[int]:
    cx = partial[x]
    return [cx] + [c for c in range(PALETTE) if c != cx]


def claim2_successful_pairs(g: Graph, partial: Colouring, match: ConfigMatch) -> list[tuple[int, int]]:
    """All ``(colour of x, colour of v)`` pairs giving an odd colouring of ``g``."""
    v, x = match.v, match.x
    out = []
    for cx in _claim2_x_colours(partial, x):
        for cv in range(PALETTE):
            if cv == cx:
                continue
            trial = Colouring(PALETTE, {**partial.colours, x: cx, v: cv})
            if is_odd_at(g, trial, (v, x)):
                out.append((cx, cv))
    return out


def extend_after_claim2(g: Graph, partial: Colouring, match: ConfigMatch) -> Colouring:
    """Colour ``v`` and possibly recolour ``x``; everything else keeps ``partial``."""
    _require_partial(g, partial, (match.v,))
    v, x = match.v, match.x
    for cx in _claim2_x_colours(partial, x):
        for cv in range(PALETTE):
            if cv == cx:
                continue
            trial = Colouring(PALETTE, {**partial.colours, x: cx, v: cv})
            if is_odd_at(g, trial, (v, x)):
                return trial
    raise GuaranteeViolated(f"no colour pair for (x, v) extends the colouring ({match.to_dict()})")


def _require_partial(g: Graph, partial: Colouring, uncoloured: tuple[int, ...]) -> None:
    rest = g.remove_vertices(uncoloured)
    if any(v in partial for v in uncoloured):
        raise MalformedInputError(f"vertices {uncoloured} must be uncoloured")
    if not partial.is_total(rest):
        raise MalformedInputError("partial colouring must cover every remaining vertex")
    if len(partial.used()) > PALETTE or partial.k > PALETTE:
        raise MalformedInputError(f"partial colouring must use at most {PALETTE} colours")


# --------------------------------------------------------------------------
# recursion


class _Pipeline:
    def __init__(self, trace: ReductionTrace | None, next_id: int, debug: bool) -> None:
        self.trace = trace if trace is not None else ReductionTrace()
        self.next_id = next_id
        self.debug = debug

    def record(self, step: Step) -> None:
        self.trace.append(step)

    def check_planar(self, g: Graph) -> None:
        if self.debug and embed_planar(g) is None:
            raise GuaranteeViolated("an intermediate graph is not planar")

    def colour(self, g: Graph) -> Colouring:
        comps = g.components()
        if len(comps) > 1:
            out: dict[int, int] = {}
            for comp in comps:
                out.update(self.colour_connected(g.subgraph(comp)).colours)
            return Colouring(PALETTE, out)
        return self.colour_connected(g)

    def colour_connected(self, g: Graph) -> Colouring:
        if g.order <= BASE_CASE_ORDER:
            c = solve_odd_k(g, PALETTE, SOLVER_BUDGET)
            if c is None:
                raise GuaranteeViolated("exact solver found no odd 8-colouring of a graph on at most 8 vertices")
            return c
        if g.order % 2 == 0:
            return colour_even_order(g)
        degs = g.degrees()
        odd = [v for v in sorted(degs) if degs[v] % 2]
        if odd:
            return self.odd_degree(g, odd[0])
        two = [v for v in sorted(degs) if degs[v] == 2]
        if two:
            return self.deg2(g, two[0])
        m1 = find_claim1_config(g)
        if m1 is not None:
            return self.claim1(g, m1)
        m2 = find_claim2_config(g)
        if m2 is not None:
            return self.claim2(g, m2)
        raise GuaranteeViolated(
            "connected graph of odd order with all degrees even and at least 4 contains "
            "neither reducible configuration; the input is not planar"
        )

    def odd_degree(self, g: Graph, v: int) -> Colouring:
        leaf = self.next_id
        self.next_id += 1
        h, _ = g.attach_leaf(v, leaf)
        self.record(AttachLeaf(v, leaf))
        c = colour_even_order(h)
        return c.without([leaf])

    def deg2(self, g: Graph, v: int) -> Colouring:
        a, b = sorted(g.neighbours(v))
        h = g.remove_vertex(v)
        added = not h.has_edge(a, b)
        if added:
            h = h.add_edge(a, b)
        self.record(ContractDeg2(v, (a, b), added))
        self.check_planar(h)
        c = self.colour(h)
        free = [col for col in range(PALETTE) if col not in forbidden_set(g, c, v)]
        if not free:
            raise GuaranteeViolated(f"all {PALETTE} colours are forbidden at degree-2 vertex {v}")
        return c.assigned(v, free[0])

    def claim1(self, g: Graph, m: ConfigMatch) -> Colouring:
        self.record(RemoveClaim1(m.u, m.v, m.w, tuple(sorted(g.neighbours(m.u))), tuple(sorted(g.neighbours(m.v)))))
        c = self.colour(g.remove_vertices((m.u, m.v)))
        return extend_after_claim1(g, c, m)

    def claim2(self, g: Graph, m: ConfigMatch) -> Colouring:
        h, edge = claim2_reduced_graph(g, m)
        self.record(RemoveClaim2(m.v, m.x, tuple(sorted(g.neighbours(m.v))), edge))
        self.check_planar(h)
        c = self.colour(h)
        return extend_after_claim2(g, c, m)


def _finish(g: Graph, c: Colouring) -> Colouring:
    c = c.restrict(g.vertices())
    if not is_odd_colouring(g, c) or len(c.used()) > PALETTE:
        raise GuaranteeViolated("pipeline output failed re-verification")
    return c


def odd_colour_planar_8(
    g: Graph,
    trace: ReductionTrace | None = None,
    *,
    check_planar: bool = False,
    debug: bool = False,
) -> Colouring:
    """Odd colouring of a planar graph with at most 8 colours.

    Steps taken are appended to ``trace`` when one is given.  With
    ``check_planar`` the input is tested first; with ``debug`` every
    intermediate graph is.
    """
    if check_planar and embed_planar(g) is None:
        raise NotEmbeddableError("input graph is not planar")
    p = _Pipeline(trace, g.capacity, debug)
    return _finish(g, p.colour(g))


def reduce_and_extend_odd_degree(g: Graph, v: int, trace: ReductionTrace | None = None) -> Colouring:
    if g.degree(v) % 2 == 0:
        raise MalformedInputError(f"vertex {v} has even degree")
    if not g.is_connected() or g.order % 2 == 0:
        raise MalformedInputError("expects a connected graph of odd order")
    p = _Pipeline(trace, g.capacity, False)
    return _finish(g, p.odd_degree(g, v))


def reduce_and_extend_deg2(g: Graph, v: int, trace: ReductionTrace | None = None) -> Colouring:
    if g.degree(v) != 2:
        raise MalformedInputError(f"vertex {v} has degree {g.degree(v)}, not 2")
    if not g.is_connected() or g.order % 2 == 0:
        raise MalformedInputError("expects a connected graph of odd order")
    p = _Pipeline(trace, g.capacity, False)
    return _finish(g, p.deg2(g, v))
