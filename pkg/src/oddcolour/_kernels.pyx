# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; mirror ``_pykernels`` node-for-node."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

cdef enum:
    MAXP = 8

BACKEND = "cython"

cdef int FOUND = 0
cdef int EXHAUSTED = 1
cdef int OVER_BUDGET = 2

cdef uint64_t LCG_MUL = 6364136223846793005ULL
cdef uint64_t LCG_INC = 1442695040888963407ULL


cdef int* _int_array(object seq, Py_ssize_t n) except NULL:
    cdef int* out = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return out


# ---------------------------------------------------------------------------
# odd colouring


cdef struct ColourState:
    int n
    int k
    int* indptr
    int* indices
    int* order
    int* colour
    unsigned long long* mask
    int* left
    long long nodes
    long long budget


cdef int _colour_rec(ColourState* s, int i, int used) nogil:
    # 1 found, 0 exhausted, -1 over budget
    cdef int x, c, j, t, top, clash, bad, r
    cdef unsigned long long bit
    if i == s.n:
        return 1
    x = s.order[i]
    top = s.k if s.k < used + 1 else used + 1
    for c in range(top):
        s.nodes += 1
        if s.nodes > s.budget:
            return -1
        clash = 0
        for t in range(s.indptr[x], s.indptr[x + 1]):
            if s.colour[s.indices[t]] == c:
                clash = 1
                break
        if clash:
            continue
        bit = (<unsigned long long> 1) << c
        s.colour[x] = c
        bad = 0
        for t in range(s.indptr[x], s.indptr[x + 1]):
            j = s.indices[t]
            s.mask[j] ^= bit
            s.left[j] -= 1
            if s.left[j] == 0 and s.mask[j] == 0:
                bad = 1
        if s.left[x] == 0 and s.indptr[x + 1] > s.indptr[x] and s.mask[x] == 0:
            bad = 1
        if not bad:
            r = _colour_rec(s, i + 1, used + 1 if c == used else used)
            if r != 0:
                return r
        for t in range(s.indptr[x], s.indptr[x + 1]):
            j = s.indices[t]
            s.mask[j] ^= bit
            s.left[j] += 1
        s.colour[x] = -1
    return 0


def odd_colouring_search(indptr, indices, order, int k, long long budget):
    """See ``_pykernels.odd_colouring_search``."""
    cdef int n = len(indptr) - 1
    cdef ColourState s
    cdef int v, r
    if k > 64:
        raise ValueError("at most 64 colours are supported")
    s.n = n
    s.k = k
    s.budget = budget
    s.nodes = 0
    s.indptr = _int_array(indptr, n + 1)
    s.indices = _int_array(indices, len(indices))
    s.order = _int_array(order, n)
    s.colour = <int*> malloc((n + 1) * sizeof(int))
    s.left = <int*> malloc((n + 1) * sizeof(int))
    s.mask = <unsigned long long*> malloc((n + 1) * sizeof(unsigned long long))
    try:
        for v in range(n):
            s.colour[v] = -1
            s.mask[v] = 0
            s.left[v] = s.indptr[v + 1] - s.indptr[v]
        with nogil:
            r = _colour_rec(&s, 0, 0)
        if r == 1:
            return FOUND, [s.colour[v] for v in range(n)], s.nodes
        if r == -1:
            return OVER_BUDGET, [], s.nodes
        return EXHAUSTED, [], s.nodes
    finally:
        free(s.indptr)
        free(s.indices)
        free(s.order)
        free(s.colour)
        free(s.left)
        free(s.mask)


# ---------------------------------------------------------------------------
# odd forest partition


cdef struct ForestState:
    int n
    int max_parts
    int* indptr
    int* indices
    int* part
    int* same
    int* left
    int* parent
    int* size
    int* merged      # stack of (a, b) pairs, 2 ints each
    int* roots       # scratch, one slot per neighbour
    int merged_top
    long long nodes
    long long cutoff
    uint64_t state


cdef inline uint64_t _rnd(ForestState* s) nogil:
    s.state = s.state * LCG_MUL + LCG_INC
    return s.state >> 33


cdef inline int _find(ForestState* s, int x) nogil:
    while s.parent[x] != x:
        x = s.parent[x]
    return x


cdef int _admissible(ForestState* s, int x, int used, int* opts, int* cnts) nogil:
    cdef int p, t, j, pj, ok, cnt, r, nroots, q, dup, nopt = 0
    cdef int top = s.max_parts if s.max_parts < used + 1 else used + 1
    cdef int* roots = s.roots
    for p in range(top):
        ok = 1
        cnt = 0
        nroots = 0
        for t in range(s.indptr[x], s.indptr[x + 1]):
            j = s.indices[t]
            pj = s.part[j]
            if pj < 0:
                continue
            if pj == p:
                r = _find(s, j)
                dup = 0
                for q in range(nroots):
                    if roots[q] == r:
                        dup = 1
                        break
                if dup or (s.left[j] == 1 and s.same[j] % 2 == 1):
                    ok = 0
                    break
                roots[nroots] = r
                nroots += 1
                cnt += 1
            elif s.left[j] == 1 and s.same[j] % 2 == 0:
                ok = 0
                break
        if ok and s.left[x] == 0 and cnt % 2 == 0:
            ok = 0
        if ok:
            opts[nopt] = p
            cnts[nopt] = cnt
            nopt += 1
    return nopt


cdef inline bint _forest_less(int* cnts, uint64_t* keys, int* opts, int i, int j) nogil:
    if cnts[i] != cnts[j]:
        return cnts[i] > cnts[j]
    if keys[i] != keys[j]:
        return keys[i] < keys[j]
    return opts[i] < opts[j]


cdef int _forest_rec(ForestState* s, int assigned, int used) nogil:
    # 1 found, 0 exhausted, -1 cut off
    cdef int x, best = -1, nopt, i, j, t, p, a, b, tmp, r, mark
    cdef int opts[MAXP]
    cdef int cnts[MAXP]
    cdef int best_opts[MAXP]
    cdef int best_cnts[MAXP]
    cdef int best_n = 0, best_left = 0, best_r = 0, kr
    cdef uint64_t keys[MAXP]
    cdef int order[MAXP]
    if assigned == s.n:
        return 1
    for x in range(s.n):
        if s.part[x] >= 0:
            continue
        nopt = _admissible(s, x, used, opts, cnts)
        if nopt == 0:
            return 0
        kr = <int> (_rnd(s) & 1023)
        if (best < 0 or nopt < best_n
                or (nopt == best_n and (s.left[x] < best_left
                    or (s.left[x] == best_left and kr < best_r)))):
            best = x
            best_n = nopt
            best_left = s.left[x]
            best_r = kr
            for i in range(nopt):
                best_opts[i] = opts[i]
                best_cnts[i] = cnts[i]
    x = best
    for i in range(best_n):
        keys[i] = _rnd(s)
        order[i] = i
    # insertion sort by (-cnt, key, part)
    for i in range(1, best_n):
        j = i
        while j > 0 and _forest_less(best_cnts, keys, best_opts, order[j], order[j - 1]):
            tmp = order[j]
            order[j] = order[j - 1]
            order[j - 1] = tmp
            j -= 1
    for i in range(best_n):
        p = best_opts[order[i]]
        s.nodes += 1
        if s.nodes > s.cutoff:
            return -1
        s.part[x] = p
        mark = s.merged_top
        for t in range(s.indptr[x], s.indptr[x + 1]):
            j = s.indices[t]
            s.left[j] -= 1
            if s.part[j] == p:
                s.same[j] += 1
                s.same[x] += 1
                a = _find(s, x)
                b = _find(s, j)
                if s.size[a] < s.size[b]:
                    tmp = a
                    a = b
                    b = tmp
                s.parent[b] = a
                s.size[a] += s.size[b]
                s.merged[2 * s.merged_top] = a
                s.merged[2 * s.merged_top + 1] = b
                s.merged_top += 1
        r = _forest_rec(s, assigned + 1, used + 1 if p == used else used)
        if r != 0:
            return r
        while s.merged_top > mark:
            s.merged_top -= 1
            a = s.merged[2 * s.merged_top]
            b = s.merged[2 * s.merged_top + 1]
            s.parent[b] = b
            s.size[a] -= s.size[b]
        for t in range(s.indptr[x], s.indptr[x + 1]):
            j = s.indices[t]
            s.left[j] += 1
            if s.part[j] == p:
                s.same[j] -= 1
        s.same[x] = 0
        s.part[x] = -1
    return 0


cdef long long _luby(long long i):
    cdef long long k = 1
    while ((<long long> 1) << k) - 1 < i:
        k += 1
    while i != ((<long long> 1) << k) - 1:
        i -= ((<long long> 1) << (k - 1)) - 1
        k = 1
        while ((<long long> 1) << k) - 1 < i:
            k += 1
    return (<long long> 1) << (k - 1)


def odd_forest_search(indptr, indices, int max_parts, long long budget,
                      seed=12345, long long restart_unit=200):
    """See ``_pykernels.odd_forest_search``."""
    cdef int n = len(indptr) - 1
    cdef ForestState s
    cdef int v, r
    cdef long long i = 0, cut
    if max_parts > MAXP:
        raise ValueError(f"at most {MAXP} parts are supported")
    s.n = n
    s.max_parts = max_parts
    s.nodes = 0
    s.state = <uint64_t> (seed & 0xFFFFFFFFFFFFFFFF)
    s.indptr = _int_array(indptr, n + 1)
    s.indices = _int_array(indices, len(indices))
    s.part = <int*> malloc((n + 1) * sizeof(int))
    s.same = <int*> malloc((n + 1) * sizeof(int))
    s.left = <int*> malloc((n + 1) * sizeof(int))
    s.parent = <int*> malloc((n + 1) * sizeof(int))
    s.size = <int*> malloc((n + 1) * sizeof(int))
    s.merged = <int*> malloc((2 * len(indices) + 2) * sizeof(int))
    s.roots = <int*> malloc((len(indices) + 1) * sizeof(int))
    try:
        while True:
            i += 1
            cut = s.nodes + restart_unit * _luby(i)
            s.cutoff = budget if budget < cut else cut
            s.merged_top = 0
            for v in range(n):
                s.part[v] = -1
                s.same[v] = 0
                s.left[v] = s.indptr[v + 1] - s.indptr[v]
                s.parent[v] = v
                s.size[v] = 1
            with nogil:
                r = _forest_rec(&s, 0, 0)
            if r == -1:
                s.nodes = s.cutoff
                if s.nodes >= budget:
                    return OVER_BUDGET, [], s.nodes
                continue
            if r == 1:
                return FOUND, [s.part[v] for v in range(n)], s.nodes
            return EXHAUSTED, [], s.nodes
    finally:
        free(s.indptr)
        free(s.indices)
        free(s.part)
        free(s.same)
        free(s.left)
        free(s.parent)
        free(s.size)
        free(s.merged)
        free(s.roots)
