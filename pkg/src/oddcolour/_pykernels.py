"""Pure-Python search kernels.

Reference implementation of the routines in ``_kernels.pyx``; both must agree
node-for-node.  Graphs arrive as CSR arrays over compact ids ``0..n-1``.

Status codes: ``FOUND``, ``EXHAUSTED`` (proved no solution), ``OVER_BUDGET``.
"""

from __future__ import annotations

import sys
from typing import Sequence

FOUND = 0
EXHAUSTED = 1
OVER_BUDGET = 2

BACKEND = "python"


class _OverBudget(Exception):
    pass


def odd_colouring_search(
    indptr: Sequence[int],
    indices: Sequence[int],
    order: Sequence[int],
    k: int,
    budget: int,
) -> tuple[int, list[int], int]:
    """Backtracking search for an odd colouring with colours ``0..k-1``.

    Vertices are coloured in the given static ``order``.  Colour parities of
    each neighbourhood are kept as a bitmask, so a vertex whose neighbourhood
    is complete is odd-satisfied iff its mask is non-zero.  Colours are
    tried ascending and a vertex may open at most one new colour
    (value-symmetry breaking).
    """
    n = len(indptr) - 1
    nbrs = [indices[indptr[v]:indptr[v + 1]] for v in range(n)]
    colour = [-1] * n
    mask = [0] * n
    left = [len(a) for a in nbrs]
    nodes = 0

    def rec(i: int, used: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        x = order[i]
        nx_ = nbrs[x]
        top = min(k, used + 1)
        for c in range(top):
            nodes += 1
            if nodes > budget:
                raise _OverBudget
            clash = False
            for j in nx_:
                if colour[j] == c:
                    clash = True
                    break
            if clash:
                continue
            bit = 1 << c
            colour[x] = c
            bad = False
            for j in nx_:
                mask[j] ^= bit
                left[j] -= 1
                if left[j] == 0 and mask[j] == 0:
                    bad = True
            if left[x] == 0 and nx_ and mask[x] == 0:
                bad = True
            if not bad and rec(i + 1, used + 1 if c == used else used):
                return True
            for j in nx_:
                mask[j] ^= bit
                left[j] += 1
            colour[x] = -1
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 100))
    try:
        found = rec(0, 0)
    except _OverBudget:
        return OVER_BUDGET, [], nodes
    finally:
        sys.setrecursionlimit(limit)
    if found:
        return FOUND, colour, nodes
    return EXHAUSTED, [], nodes


_MASK64 = (1 << 64) - 1
_LCG_MUL = 6364136223846793005
_LCG_INC = 1442695040888963407

DEFAULT_SEED = 12345
DEFAULT_RESTART_UNIT = 200


def _lcg(state: int) -> int:
    return (state * _LCG_MUL + _LCG_INC) & _MASK64


def luby(i: int) -> int:
    """``i``-th term (1-based) of the Luby restart sequence 1 1 2 1 1 2 4 ..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while i != (1 << k) - 1:
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1
    return 1 << (k - 1)


def odd_forest_search(
    indptr: Sequence[int],
    indices: Sequence[int],
    max_parts: int,
    budget: int,
    seed: int = DEFAULT_SEED,
    restart_unit: int = DEFAULT_RESTART_UNIT,
) -> tuple[int, list[int], int]:
    """Partition vertices into at most ``max_parts`` induced odd forests.

    Each attempt is a complete backtracking search with dynamic variable
    ordering: the unassigned vertex with the fewest admissible parts goes
    next (ties: fewer unassigned neighbours, then a pseudo-random key).  A
    part is admissible for ``x`` if joining it closes no cycle (union-find
    per part) and leaves every neighbour whose last open slot is ``x`` with
    odd induced degree.  Parts are tried by descending number of neighbours
    already inside, ties broken pseudo-randomly.

    Attempt ``i`` is cut off after ``restart_unit * luby(i)`` nodes.  An
    attempt that finishes without a cut-off is exhaustive, so ``EXHAUSTED``
    is a proof.  ``budget`` caps the nodes summed over all attempts.
    """
    n = len(indptr) - 1
    nbrs = [list(indices[indptr[v]:indptr[v + 1]]) for v in range(n)]
    part = [-1] * n
    same = [0] * n
    left = [len(a) for a in nbrs]
    parent = list(range(n))
    size = [1] * n
    nodes = 0
    cutoff = 0
    state = seed & _MASK64

    def rnd() -> int:
        nonlocal state
        state = _lcg(state)
        return state >> 33

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def admissible(x: int, used: int) -> list[tuple[int, int]]:
        out = []
        top = min(max_parts, used + 1)
        for p in range(top):
            ok = True
            cnt = 0
            roots = []
            for j in nbrs[x]:
                pj = part[j]
                if pj < 0:
                    continue
                if pj == p:
                    r = find(j)
                    if r in roots or (left[j] == 1 and same[j] % 2 == 1):
                        ok = False
                        break
                    roots.append(r)
                    cnt += 1
                elif left[j] == 1 and same[j] % 2 == 0:
                    ok = False
                    break
            if ok and left[x] == 0 and cnt % 2 == 0:
                ok = False
            if ok:
                out.append((p, cnt))
        return out

    def rec(assigned: int, used: int) -> bool:
        nonlocal nodes
        if assigned == n:
            return True
        best = -1
        best_opts: list[tuple[int, int]] = []
        best_key = (0, 0, 0)
        for x in range(n):
            if part[x] >= 0:
                continue
            opts = admissible(x, used)
            if not opts:
                return False
            key = (len(opts), left[x], rnd() & 1023)
            if best < 0 or key < best_key:
                best, best_opts, best_key = x, opts, key
        x = best
        keyed = [(-cnt, rnd(), p) for p, cnt in best_opts]
        keyed.sort()
        for _, _, p in keyed:
            nodes += 1
            if nodes > cutoff:
                raise _OverBudget
            part[x] = p
            merged = []
            for j in nbrs[x]:
                left[j] -= 1
                if part[j] == p:
                    same[j] += 1
                    same[x] += 1
                    a, b = find(x), find(j)
                    if size[a] < size[b]:
                        a, b = b, a
                    parent[b] = a
                    size[a] += size[b]
                    merged.append((a, b))
            if rec(assigned + 1, used + 1 if p == used else used):
                return True
            for a, b in reversed(merged):
                parent[b] = b
                size[a] -= size[b]
            for j in nbrs[x]:
                left[j] += 1
                if part[j] == p:
                    same[j] -= 1
            same[x] = 0
            part[x] = -1
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 100))
    try:
        i = 0
        while True:
            i += 1
            cutoff = min(budget, nodes + restart_unit * luby(i))
            part[:] = [-1] * n
            same[:] = [0] * n
            left[:] = [len(a) for a in nbrs]
            parent[:] = list(range(n))
            size[:] = [1] * n
            try:
                found = rec(0, 0)
            except _OverBudget:
                nodes = cutoff
                if nodes >= budget:
                    return OVER_BUDGET, [], nodes
                continue
            if found:
                return FOUND, part, nodes
            return EXHAUSTED, [], nodes
    finally:
        sys.setrecursionlimit(limit)
