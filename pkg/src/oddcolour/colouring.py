"""Odd colourings: verification, forbidden colours, exact solving, odd forests."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import kernels
from .errors import BudgetExhausted, MalformedInputError
from .graph import Graph

UNCOLOURED = None
DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class Colouring:
    """Assignment of colours ``0..k-1`` to some vertices; absent means uncoloured."""

    k: int
    colours: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.k < 0:
            raise MalformedInputError(f"palette size must be non-negative, got {self.k}")
        for v, c in self.colours.items():
            if not (isinstance(c, int) and 0 <= c < self.k):
                raise MalformedInputError(f"vertex {v} has colour {c!r} outside palette of size {self.k}")
        object.__setattr__(self, "colours", dict(self.colours))

    @classmethod
    def from_list(cls, k: int, colours: Iterable[int | None]) -> Colouring:
        return cls(k, {v: c for v, c in enumerate(colours) if c is not None})

    def get(self, v: int) -> int | None:
        return self.colours.get(v)

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def __contains__(self, v: object) -> bool:
        return v in self.colours

    def is_total(self, g: Graph) -> bool:
        return all(v in self.colours for v in g.vertices())

    def assigned(self, v: int, c: int) -> Colouring:
        return Colouring(self.k, {**self.colours, v: c})

    def without(self, vs: Iterable[int]) -> Colouring:
        gone = set(vs)
        return Colouring(self.k, {v: c for v, c in self.colours.items() if v not in gone})

    def restrict(self, vs: Iterable[int]) -> Colouring:
        keep = set(vs)
        return Colouring(self.k, {v: c for v, c in self.colours.items() if v in keep})

    def merged(self, other: Colouring) -> Colouring:
        return Colouring(max(self.k, other.k), {**self.colours, **other.colours})

    def used(self) -> set[int]:
        return set(self.colours.values())

    def as_list(self, g: Graph) -> list[int | None]:
        return [self.colours.get(v) for v in range(g.capacity)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Colouring):
            return NotImplemented
        return self.k == other.k and self.colours == other.colours

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self.colours.items())))


@dataclass(frozen=True)
class OddDefect:
    vertex: int
    histogram: dict[int, int]


def _check_matches(g: Graph, c: Colouring) -> None:
    for v in c.colours:
        if v not in g:
            raise MalformedInputError(f"colouring assigns vertex {v}, which is not in the graph")


def _require_total(g: Graph, c: Colouring) -> None:
    _check_matches(g, c)
    missing = [v for v in g.vertices() if v not in c.colours]
    if missing:
        raise MalformedInputError(f"colouring is partial; uncoloured vertices {missing[:10]}")


def is_proper(g: Graph, c: Colouring) -> bool:
    _check_matches(g, c)
    col = c.colours
    for u, v in g.edges():
        cu = col.get(u)
        if cu is not None and cu == col.get(v):
            return False
    return True


def neighbourhood_histogram(g: Graph, c: Colouring, x: int, exclude: Iterable[int] = ()) -> Counter[int]:
    skip = set(exclude)
    return Counter(c.colours[w] for w in g.neighbours(x) if w not in skip)


def has_odd_colour(hist: Mapping[int, int]) -> bool:
    return any(n % 2 for n in hist.values())


def odd_defects(g: Graph, c: Colouring) -> list[OddDefect]:
    """Non-isolated vertices whose neighbourhood shows every colour an even number of times."""
    _require_total(g, c)
    out = []
    for x in g.vertices():
        if g.degree(x) == 0:
            continue
        hist = neighbourhood_histogram(g, c, x)
        if not has_odd_colour(hist):
            out.append(OddDefect(x, dict(sorted(hist.items()))))
    return out


def is_odd_colouring(g: Graph, c: Colouring) -> bool:
    return is_proper(g, c) and not odd_defects(g, c)


def is_odd_at(g: Graph, c: Colouring, vertices: Iterable[int]) -> bool:
    """Local version of :func:`is_odd_colouring`.

    Checks properness of every edge at ``vertices`` and the oddness condition
    at ``vertices`` and all their neighbours.  All of these closed
    neighbourhoods must be coloured.
    """
    col = c.colours
    touched: set[int] = set()
    for v in vertices:
        cv = col[v]
        touched.add(v)
        for w in g.neighbours(v):
            if col[w] == cv:
                return False
            touched.add(w)
    for x in touched:
        nb = g.neighbours(x)
        if nb and not has_odd_colour(Counter(col[w] for w in nb)):
            return False
    return True


def odd_forbidden_colour(g: Graph, c: Colouring, w: int, excluding: int) -> int | None:
    """The single colour of odd multiplicity on ``N(w) - {excluding}``, if unique.

    Giving that colour to ``excluding`` would leave ``w`` with no colour of odd
    multiplicity.  Returns ``None`` when zero or several colours are odd.
    """
    nb = g.neighbours(w)
    if excluding not in nb:
        raise MalformedInputError(f"{excluding} is not a neighbour of {w}")
    missing = [u for u in nb if u != excluding and u not in c.colours]
    if missing:
        raise MalformedInputError(f"neighbours {sorted(missing)} of {w} are uncoloured")
    odd = [col for col, n in neighbourhood_histogram(g, c, w, (excluding,)).items() if n % 2]
    return odd[0] if len(odd) == 1 else None


def forbidden_set(g: Graph, c: Colouring, v: int) -> set[int]:
    """Colours that ``v`` cannot take without breaking properness or a neighbour's oddness."""
    if v in c.colours:
        raise MalformedInputError(f"vertex {v} is already coloured")
    out: set[int] = set()
    for w in g.neighbours(v):
        if w not in c.colours:
            raise MalformedInputError(f"neighbour {w} of {v} is uncoloured")
        out.add(c.colours[w])
        b = odd_forbidden_colour(g, c, w, v)
        if b is not None:
            out.add(b)
    return out


def search_order(g: Graph) -> list[int]:
    """Static vertex order for the exact solver.

    Starts from a vertex of maximum degree and then repeatedly takes the
    vertex with the most already-ordered neighbours (ties: higher degree,
    then lower id), so neighbourhoods close early.
    """
    remaining = set(g.vertices())
    placed: Counter[int] = Counter()
    order: list[int] = []
    while remaining:
        x = min(remaining, key=lambda v: (-placed[v], -g.degree(v), v))
        remaining.discard(x)
        order.append(x)
        for w in g.neighbours(x):
            placed[w] += 1
    return order


def solve_odd_k(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> Colouring | None:
    """An odd colouring with at most ``k`` colours, or ``None`` if none exists.

    Raises :class:`BudgetExhausted` when the search visits more than
    ``budget`` nodes without a verdict.
    """
    if k < 1:
        raise MalformedInputError(f"k must be at least 1, got {k}")
    if g.order == 0:
        return Colouring(k)
    indptr, indices, ids = g.csr()
    index = {v: i for i, v in enumerate(ids)}
    order = [index[v] for v in search_order(g)]
    # the compiled kernel keeps colour parities in a 64-bit word
    search = kernels.odd_colouring_search if k <= 64 else kernels.python_backend.odd_colouring_search
    status, colours, nodes = search(indptr, indices, order, k, budget)
    if status == kernels.OVER_BUDGET:
        raise BudgetExhausted(f"odd {k}-colouring search exceeded {budget} nodes", nodes)
    if status == kernels.EXHAUSTED:
        return None
    return Colouring(k, {ids[i]: col for i, col in enumerate(colours)})


def chi_odd_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Odd chromatic number: least ``k`` for which :func:`solve_odd_k` succeeds."""
    if g.order == 0:
        return 0
    # giving every vertex its own colour is always an odd colouring
    for k in range(1, g.order + 1):
        if solve_odd_k(g, k, budget) is not None:
            return k
    raise AssertionError("unreachable: the all-distinct colouring is odd")


def is_odd_forest(g: Graph, part: Iterable[int]) -> bool:
    """Induced subgraph on ``part`` is acyclic and every vertex has odd induced degree."""
    vs = set(part)
    for v in vs:
        if v not in g:
            raise MalformedInputError(f"vertex {v} is not in the graph")
    h = g.subgraph(vs)
    if any(h.degree(v) % 2 == 0 for v in vs):
        return False
    # acyclic iff |E| = |V| - #components
    return h.size == h.order - len(h.components())


def bipartition_odd_colouring(g: Graph, part: Iterable[int], pair: tuple[int, int], k: int | None = None) -> Colouring:
    """2-colour each tree of an odd forest by depth parity.

    Roots are the smallest vertex of each tree and receive ``pair[0]``.
    """
    vs = sorted(set(part))
    a, b = pair
    if a == b:
        raise MalformedInputError("colour pair must hold two distinct colours")
    if not is_odd_forest(g, vs):
        raise MalformedInputError("part does not induce an odd forest")
    h = g.subgraph(vs)
    out: dict[int, int] = {}
    for root in vs:
        if root in out:
            continue
        out[root] = a
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(h.neighbours(x)):
                if y not in out:
                    out[y] = b if out[x] == a else a
                    queue.append(y)
    return Colouring(k if k is not None else max(a, b) + 1, out)
