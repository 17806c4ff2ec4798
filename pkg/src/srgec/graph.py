"""Immutable simple graphs, graph6 I/O, and strongly-regular recognition."""

from __future__ import annotations

from typing import NamedTuple, Optional

from .errors import (
    InvalidEdgeError,
    InvalidVertexError,
    LoopRejectedError,
    ParseError,
    UnsupportedError,
)

# graph6 length cap (three-byte size field)
G6_MAX_N = 258047


class SrgParams(NamedTuple):
    """Strongly-regular parameter tuple (n, k, lam, mu)."""

    n: int
    k: int
    lam: int
    mu: int


class Graph:
    """Undirected simple graph on vertices 0..n-1, immutable by convention.

    Adjacency is stored twice: per-vertex neighbor bitmasks (constant-time
    adjacency tests and word-parallel common-neighbor counts) and a
    lexicographically sorted edge tuple (stable, certificate-grade output).
    """

    __slots__ = ("n", "edges", "_masks")

    def __init__(self, n: int, edges: tuple, masks: Optional[tuple] = None):
        # `edges` must already be normalized; external callers use build_graph
        self.n = n
        self.edges = edges
        if masks is None:
            acc = [0] * n
            for a, b in edges:
                acc[a] |= 1 << b
                acc[b] |= 1 << a
            masks = tuple(acc)
        self._masks = masks

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def neighbors(self, v: int) -> list:
        out = []
        m = self._masks[v]
        while m:
            b = m & -m
            out.append(b.bit_length() - 1)
            m ^= b
        return out

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edge_list) -> Graph:
    """Normalize and validate an edge list into a Graph.

    Endpoints must lie in 0..n-1; loops are rejected; duplicates and
    orientation are normalized away.
    """
    seen = set()
    for a, b in edge_list:
        if a == b:
            raise LoopRejectedError(f"loop at vertex {a}")
        if not (0 <= a < n) or not (0 <= b < n):
            raise InvalidEdgeError(f"edge ({a}, {b}) out of range for n={n}")
        seen.add((a, b) if a < b else (b, a))
    return Graph(n, tuple(sorted(seen)))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    masks = tuple((full & ~g.mask(v)) & ~(1 << v) for v in range(g.n))
    edges = []
    for v in range(g.n):
        m = masks[v] >> (v + 1)
        w = v + 1
        while m:
            if m & 1:
                edges.append((v, w))
            m >>= 1
            w += 1
    return Graph(g.n, tuple(edges), masks)


def is_regular(g: Graph) -> Optional[int]:
    """Common degree if the graph is regular, else None. Needs n >= 1."""
    if g.n == 0:
        raise InvalidVertexError("degree of the empty graph is undefined")
    k = g.degree(0)
    for v in range(1, g.n):
        if g.degree(v) != k:
            return None
    return k


def recognize_srg(g: Graph) -> Optional[SrgParams]:
    """Exhaustive pair scan for strong regularity.

    Returns (n, k, lam, mu) iff the graph is k-regular with 0 < k < n-1
    and every adjacent (resp. non-adjacent) pair has the same number of
    common neighbors. Complete and empty graphs are excluded by
    definition.
    """
    n = g.n
    if n < 2:
        return None
    k = is_regular(g)
    if k is None or k <= 0 or k >= n - 1:
        return None
    lam = -1
    mu = -1
    for u in range(n):
        mu_u = g.mask(u)
        for v in range(u + 1, n):
            common = (mu_u & g.mask(v)).bit_count()
            if (mu_u >> v) & 1:
                if lam < 0:
                    lam = common
                elif common != lam:
                    return None
            else:
                if mu < 0:
                    mu = common
                elif common != mu:
                    return None
    # 0 < k < n-1 guarantees both an edge and a non-edge exist
    return SrgParams(n, k, lam, mu)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= g.mask(b.bit_length() - 1)
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def bipartition_of(g: Graph):
    """2-coloring by BFS: (side0, side1) vertex tuples, or None if odd cycle.

    Isolated vertices land on side 0.
    """
    colors = [-1] * g.n
    for start in range(g.n):
        if colors[start] != -1:
            continue
        colors[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if colors[w] == -1:
                    colors[w] = 1 - colors[v]
                    stack.append(w)
                elif colors[w] == colors[v]:
                    return None
    side0 = tuple(v for v in range(g.n) if colors[v] == 0)
    side1 = tuple(v for v in range(g.n) if colors[v] == 1)
    return side0, side1


def subgraph_on(g: Graph, vertices):
    """Induced subgraph on ``vertices`` plus the new->old label map.

    Vertices are relabeled 0..|S|-1 in increasing original order.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise InvalidVertexError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(vs)}
    edges = []
    for i, v in enumerate(vs):
        for w in vs[i + 1 :]:
            if g.adjacent(v, w):
                edges.append((index[v], index[w]))
    return Graph(len(vs), tuple(sorted(edges))), tuple(vs)


def remove_edges(g: Graph, drop) -> Graph:
    """Graph minus the given edges (normalized pairs)."""
    gone = {(a, b) if a < b else (b, a) for a, b in drop}
    return Graph(g.n, tuple(e for e in g.edges if e not in gone))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ParseError("non-ASCII byte in graph6 input", offset=exc.start) from None
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte} out of graph6 range", offset=i)
    if not data:
        raise ParseError("empty graph6 input", offset=0)
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ParseError("truncated 3-byte size field", offset=len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise ParseError("truncated 6-byte size field", offset=len(data))
        n = 0
        for i in range(2, 8):
            n = (n << 6) | (data[i] - 63)
        pos = 8
    if n > G6_MAX_N:
        raise UnsupportedError(f"graph6 order {n} over the {G6_MAX_N} cap")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos > nbytes:
        raise ParseError("trailing data after graph6 body", offset=pos + nbytes)
    if len(data) - pos < nbytes:
        raise ParseError("graph6 body too short", offset=len(data))
    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + t // 6] - 63
            if (byte >> (5 - t % 6)) & 1:
                edges.append((i, j))
            t += 1
    # canonical encodings zero-pad the final byte
    if nbits % 6:
        last = data[pos + nbytes - 1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise ParseError("nonzero padding bits", offset=pos + nbytes - 1)
    return build_graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Canonical headerless graph6 encoding."""
    n = g.n
    if n > G6_MAX_N:
        raise UnsupportedError(f"graph order {n} over the {G6_MAX_N} cap")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    nbits = n * (n - 1) // 2
    body = []
    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.adjacent(i, j) else 0)
            filled += 1
            if filled == 6:
                body.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        body.append(chr((acc << (6 - filled)) + 63))
    assert len(body) == (nbits + 5) // 6
    return head + "".join(body)
