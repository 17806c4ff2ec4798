# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython kernels: blossom maximum matching and exact edge coloring.

Semantics must match srgec._kernels.reference bit for bit (same greedy
seeding, same search order, same symmetry breaking); the equivalence is
asserted by tests/test_kernels_equiv.py. The exact colorer here packs
color sets into a 64-bit word, so it handles at most 64 colors; the
dispatcher in __init__ falls back to the reference kernel beyond that.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef int _lca(int* mate, int* p, int* base, int* stamp, int tick,
              int a, int b) nogil:
    a = base[a]
    while True:
        stamp[a] = tick
        if mate[a] == -1:
            break
        a = base[p[mate[a]]]
    b = base[b]
    while stamp[b] != tick:
        b = base[p[mate[b]]]
    return b


cdef void _mark_path(int* mate, int* p, int* base, char* blossom,
                     int v, int cur, int child) nogil:
    while base[v] != cur:
        blossom[base[v]] = 1
        blossom[base[mate[v]]] = 1
        p[v] = child
        child = mate[v]
        v = p[mate[v]]


cdef int _alternating_search(int n, int* indptr, int* indices, int* mate,
                             int root, int* p, int* base, char* used,
                             int* q, char* blossom, int* stamp,
                             int* tick_ref) nogil:
    cdef int i, v, to, ei, cur, qi, qlen
    for i in range(n):
        p[i] = -1
        base[i] = i
        used[i] = 0
    used[root] = 1
    q[0] = root
    qlen = 1
    qi = 0
    while qi < qlen:
        v = q[qi]
        qi += 1
        for ei in range(indptr[v], indptr[v + 1]):
            to = indices[ei]
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and p[mate[to]] != -1):
                tick_ref[0] += 1
                cur = _lca(mate, p, base, stamp, tick_ref[0], v, to)
                memset(blossom, 0, n)
                _mark_path(mate, p, base, blossom, v, cur, to)
                _mark_path(mate, p, base, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = 1
                            q[qlen] = i
                            qlen += 1
            elif p[to] == -1:
                p[to] = v
                if mate[to] == -1:
                    return to
                used[mate[to]] = 1
                q[qlen] = mate[to]
                qlen += 1
    return -1


def max_matching(int n, indptr_obj, indices_obj):
    """Maximum matching; returns ``mate`` list with -1 for unmatched."""
    cdef int[:] indptr_mv = indptr_obj
    cdef int[:] indices_mv = indices_obj
    cdef int* indptr = &indptr_mv[0] if n > 0 else NULL
    cdef int* indices = &indices_mv[0] if indices_mv.shape[0] > 0 else NULL
    cdef int* mate = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* p = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* base = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* q = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* stamp = <int*> calloc(n if n else 1, sizeof(int))
    cdef char* used = <char*> calloc(n if n else 1, 1)
    cdef char* blossom = <char*> calloc(n if n else 1, 1)
    cdef int tick = 0
    cdef int v, to, ei, root, end, pv, ppv
    try:
        for v in range(n):
            mate[v] = -1
        for v in range(n):
            if mate[v] == -1:
                for ei in range(indptr[v], indptr[v + 1]):
                    to = indices[ei]
                    if mate[to] == -1 and to != v:
                        mate[v] = to
                        mate[to] = v
                        break
        for root in range(n):
            if mate[root] != -1:
                continue
            end = _alternating_search(n, indptr, indices, mate, root,
                                      p, base, used, q, blossom, stamp, &tick)
            if end != -1:
                v = end
                while v != -1:
                    pv = p[v]
                    ppv = mate[pv]
                    mate[v] = pv
                    mate[pv] = v
                    v = ppv
        return [mate[v] for v in range(n)]
    finally:
        free(mate); free(p); free(base); free(q)
        free(stamp); free(used); free(blossom)


STATUS_COLORABLE = 0
STATUS_NOT_COLORABLE = 1
STATUS_BUDGET = 2


def exact_edge_coloring(int n, eu_obj, ev_obj, int num_colors,
                        long long node_budget):
    """64-bit-mask twin of reference.exact_edge_coloring (<= 64 colors)."""
    if num_colors > 64:
        raise ValueError("compiled kernel supports at most 64 colors")
    cdef int[:] eu_mv = eu_obj
    cdef int[:] ev_mv = ev_obj
    cdef int m = eu_mv.shape[0]
    if m == 0:
        return STATUS_COLORABLE, [], 0
    cdef int* eu = &eu_mv[0]
    cdef int* ev = &ev_mv[0]
    cdef unsigned long long full = ((<unsigned long long>1) << num_colors) - 1 \
        if num_colors < 64 else <unsigned long long>0xFFFFFFFFFFFFFFFF
    cdef unsigned long long* vmask = <unsigned long long*> calloc(n, 8)
    cdef unsigned long long* tried = <unsigned long long*> calloc(m, 8)
    cdef int* color = <int*> calloc(m, sizeof(int))
    cdef int* sel = <int*> calloc(m, sizeof(int))
    cdef char* intro = <char*> calloc(m, 1)
    cdef int cap = 0, depth = 0, e, a, b, c, best, best_cnt, cnt, e2, i
    cdef long long nodes = 0
    cdef bint entering = True
    cdef unsigned long long capmask, avail, bit
    cdef int status = -1
    try:
        for i in range(m):
            color[i] = -1
        while True:
            if entering:
                if depth == m:
                    return STATUS_COLORABLE, [color[i] for i in range(m)], nodes
                capmask = (((<unsigned long long>1) <<
                            (cap + 1 if cap < num_colors else num_colors)) - 1) \
                    if (cap + 1 if cap < num_colors else num_colors) < 64 \
                    else <unsigned long long>0xFFFFFFFFFFFFFFFF
                best = -1
                best_cnt = num_colors + 1
                for e in range(m):
                    if color[e] != -1:
                        continue
                    avail = capmask & full & ~(vmask[eu[e]] | vmask[ev[e]])
                    cnt = __builtin_popcountll(avail)
                    if cnt < best_cnt:
                        best_cnt = cnt
                        best = e
                        if cnt == 0:
                            break
                sel[depth] = best
                tried[depth] = 0
            e = sel[depth]
            a = eu[e]
            b = ev[e]
            capmask = (((<unsigned long long>1) <<
                        (cap + 1 if cap < num_colors else num_colors)) - 1) \
                if (cap + 1 if cap < num_colors else num_colors) < 64 \
                else <unsigned long long>0xFFFFFFFFFFFFFFFF
            avail = capmask & full & ~(vmask[a] | vmask[b]) & ~tried[depth]
            if avail == 0:
                if depth == 0:
                    return STATUS_NOT_COLORABLE, None, nodes
                depth -= 1
                e2 = sel[depth]
                bit = (<unsigned long long>1) << color[e2]
                vmask[eu[e2]] ^= bit
                vmask[ev[e2]] ^= bit
                color[e2] = -1
                if intro[depth]:
                    cap -= 1
                entering = False
                continue
            c = __builtin_ctzll(avail)
            tried[depth] |= (<unsigned long long>1) << c
            nodes += 1
            if nodes > node_budget:
                return STATUS_BUDGET, None, nodes
            bit = (<unsigned long long>1) << c
            color[e] = c
            vmask[a] |= bit
            vmask[b] |= bit
            intro[depth] = 1 if c == cap else 0
            if c == cap:
                cap += 1
            depth += 1
            entering = True
    finally:
        free(vmask); free(tried); free(color); free(sel); free(intro)
