"""Pure-Python kernels: blossom maximum matching and exact edge coloring.

These are the hot loops of the whole package. A Cython translation with
identical semantics lives in ``_compiled.pyx``; both backends must produce
bit-identical results for any input (tested), so any change here must be
mirrored there.

Graphs enter as CSR adjacency (``indptr``/``indices``); the *order* of the
indices arrays is significant, it is how callers inject randomness.
"""

from __future__ import annotations


# ---------------------------------------------------------------------------
# maximum matching (blossom shrinking, O(V * E) per augmentation)
# ---------------------------------------------------------------------------

def max_matching(n, indptr, indices):
    """Maximum matching; returns ``mate`` with mate[v] = partner or -1.

    Deterministic given the adjacency order: greedy seeding scans vertices
    0..n-1 and takes the first free neighbor; augmenting searches run from
    free vertices in increasing order with FIFO growth.
    """
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for ei in range(indptr[v], indptr[v + 1]):
                to = indices[ei]
                if mate[to] == -1 and to != v:
                    mate[v] = to
                    mate[to] = v
                    break
    p = [-1] * n
    base = list(range(n))
    for root in range(n):
        if mate[root] != -1:
            continue
        end, _used = _alternating_search(n, indptr, indices, mate, root, p, base)
        if end != -1:
            v = end
            while v != -1:
                pv = p[v]
                ppv = mate[pv]
                mate[v] = pv
                mate[pv] = v
                v = ppv
    return mate


def _alternating_search(n, indptr, indices, mate, root, p, base):
    """Grow an alternating tree from ``root``, shrinking blossoms.

    Returns (free endpoint of an augmenting path or -1, outer-vertex flags).
    ``p`` holds the tree parent of the inner endpoint of each matched pair.
    """
    used = [False] * n
    for i in range(n):
        p[i] = -1
        base[i] = i
    used[root] = True
    q = [root]
    qi = 0
    while qi < len(q):
        v = q[qi]
        qi += 1
        for ei in range(indptr[v], indptr[v + 1]):
            to = indices[ei]
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and p[mate[to]] != -1):
                # both endpoints outer: odd cycle, shrink it
                cur = _lca(n, mate, p, base, v, to)
                blossom = [False] * n
                _mark_path(mate, p, base, blossom, v, cur, to)
                _mark_path(mate, p, base, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] == -1:
                p[to] = v
                if mate[to] == -1:
                    return to, used
                used[mate[to]] = True
                q.append(mate[to])
    return -1, used


def _lca(n, mate, p, base, a, b):
    seen = [False] * n
    a = base[a]
    while True:
        seen[a] = True
        if mate[a] == -1:
            break
        a = base[p[mate[a]]]
    b = base[b]
    while not seen[b]:
        b = base[p[mate[b]]]
    return b


def _mark_path(mate, p, base, blossom, v, cur, child):
    while base[v] != cur:
        blossom[base[v]] = True
        blossom[base[mate[v]]] = True
        p[v] = child
        child = mate[v]
        v = p[mate[v]]


def outer_reachable(n, indptr, indices, mate):
    """Vertices reachable from free vertices by even alternating paths.

    ``mate`` must be a maximum matching. The result is the set D of the
    Gallai-Edmonds decomposition; its neighborhood outside D is the
    deficiency witness. Not performance-critical, so only implemented here.
    """
    outer = [False] * n
    p = [-1] * n
    base = list(range(n))
    for root in range(n):
        if mate[root] != -1:
            continue
        end, used = _alternating_search(n, indptr, indices, mate, root, p, base)
        if end != -1:
            raise AssertionError("matching passed to outer_reachable is not maximum")
        for i in range(n):
            if used[i]:
                outer[i] = True
    return outer


# ---------------------------------------------------------------------------
# exact edge coloring (complete backtracking, symmetry-broken)
# ---------------------------------------------------------------------------

STATUS_COLORABLE = 0
STATUS_NOT_COLORABLE = 1
STATUS_BUDGET = 2


def exact_edge_coloring(n, eu, ev, num_colors, node_budget):
    """Decide whether the edges can be properly colored with ``num_colors``.

    Returns ``(status, coloring or None, nodes)`` where status is one of the
    STATUS_* constants and ``coloring[e]`` is the color of edge e on success.

    Search: at every node pick the uncolored edge with the fewest feasible
    colors (ties to the lowest edge index), try colors in increasing order,
    and allow a color index only if every smaller index already appears
    somewhere (breaks the color-relabeling symmetry; forces edge 0 to
    color 0 at the root). Exhausting the root proves no proper coloring
    with ``num_colors`` exists.
    """
    m = len(eu)
    if m == 0:
        return STATUS_COLORABLE, [], 0
    full = (1 << num_colors) - 1
    vmask = [0] * n
    color = [-1] * m
    sel = [-1] * m
    tried = [0] * m
    intro = [False] * m
    cap = 0  # colors in use; index `cap` is the next fresh color
    depth = 0
    nodes = 0
    entering = True
    while True:
        if entering:
            if depth == m:
                return STATUS_COLORABLE, color[:], nodes
            capmask = (1 << (cap + 1 if cap < num_colors else num_colors)) - 1
            best = -1
            best_cnt = num_colors + 1
            for e in range(m):
                if color[e] != -1:
                    continue
                avail = capmask & full & ~(vmask[eu[e]] | vmask[ev[e]])
                cnt = avail.bit_count()
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
        capmask = (1 << (cap + 1 if cap < num_colors else num_colors)) - 1
        avail = capmask & full & ~(vmask[a] | vmask[b]) & ~tried[depth]
        if avail == 0:
            if depth == 0:
                return STATUS_NOT_COLORABLE, None, nodes
            depth -= 1
            e2 = sel[depth]
            bit = 1 << color[e2]
            vmask[eu[e2]] ^= bit
            vmask[ev[e2]] ^= bit
            color[e2] = -1
            if intro[depth]:
                cap -= 1
            entering = False
            continue
        c = (avail & -avail).bit_length() - 1
        tried[depth] |= 1 << c
        nodes += 1
        if nodes > node_budget:
            return STATUS_BUDGET, None, nodes
        bit = 1 << c
        color[e] = c
        vmask[a] |= bit
        vmask[b] |= bit
        intro[depth] = c == cap
        if c == cap:
            cap += 1
        depth += 1
        entering = True
