"""Maximum matching, perfect-matching tests, and seeded random extraction.

The blossom search itself lives in ``srgec._kernels``; this module owns
the graph <-> CSR plumbing, the randomization (which is entirely in the
adjacency order handed to the kernel), and the Matching value type.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .graph import Graph, remove_edges, subgraph_on
from .rng import RngState


@dataclass(frozen=True)
class Matching:
    """Disjoint edge set, normalized: (a, b) with a < b, sorted."""

    edges: tuple

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> set:
        return {v for e in self.edges for v in e}

    def is_perfect_for(self, g: Graph) -> bool:
        return 2 * len(self.edges) == g.n and matching_is_valid(g, self)


def matching_is_valid(g: Graph, m: Matching) -> bool:
    seen = set()
    for a, b in m.edges:
        if not (0 <= a < b < g.n) or not g.adjacent(a, b):
            return False
        if a in seen or b in seen:
            return False
        seen.add(a)
        seen.add(b)
    return True


def _csr(g: Graph):
    indptr = array("i", [0] * (g.n + 1))
    indices = array("i")
    for v in range(g.n):
        nbrs = g.neighbors(v)
        indices.extend(nbrs)
        indptr[v + 1] = indptr[v] + len(nbrs)
    return indptr, indices


def _mate_to_matching(mate) -> Matching:
    edges = sorted((v, w) for v, w in enumerate(mate) if w > v)
    return Matching(tuple(edges))


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching (deterministic, natural vertex order)."""
    indptr, indices = _csr(g)
    mate = _kernels.max_matching(g.n, indptr, indices)
    return _mate_to_matching(mate)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and maximum_matching(g).size * 2 == g.n


def tutte_berge_witness(g: Graph):
    """(maximum matching, witness set U) with
    odd_components(g - U) - |U| = n - 2*|matching|.

    U is the neighborhood of the even-alternating-reachable set, i.e. the
    middle class of the Gallai-Edmonds decomposition.
    """
    indptr, indices = _csr(g)
    mate = _kernels.max_matching(g.n, indptr, indices)
    outer = _kernels.outer_reachable(g.n, indptr, indices, mate)
    witness = tuple(
        v
        for v in range(g.n)
        if not outer[v] and any(outer[w] for w in g.neighbors(v))
    )
    return _mate_to_matching(mate), witness


def odd_components_without(g: Graph, exclude) -> int:
    """Number of odd-order components of g minus the given vertex set."""
    banned = set(exclude)
    seen = set(banned)
    odd = 0
    for start in range(g.n):
        if start in seen:
            continue
        size = 0
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            size += 1
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        odd += size % 2
    return odd


def random_perfect_matching(g: Graph, rng: RngState) -> Optional[Matching]:
    """One perfect matching found under a random relabeling, or None.

    The graph is relabeled by a uniformly shuffled permutation and every
    adjacency list is shuffled; the deterministic blossom search then runs
    on the reordered input. Any particular perfect matching has positive
    probability (orderings exist that make the greedy phase pick exactly
    its edges), and the result is a pure function of (graph, rng stream).
    """
    n = g.n
    if n % 2:
        return None
    perm = list(range(n))  # perm[new] = old
    rng.shuffle(perm)
    inv = [0] * n
    for new, old in enumerate(perm):
        inv[old] = new
    indptr = array("i", [0] * (n + 1))
    indices = array("i")
    for new in range(n):
        nbrs = [inv[w] for w in g.neighbors(perm[new])]
        rng.shuffle(nbrs)
        indices.extend(nbrs)
        indptr[new + 1] = indptr[new] + len(nbrs)
    mate = _kernels.max_matching(n, indptr, indices)
    if any(m == -1 for m in mate):
        return None
    edges = []
    for new, m in enumerate(mate):
        if m > new:
            a, b = perm[new], perm[m]
            edges.append((a, b) if a < b else (b, a))
    return Matching(tuple(sorted(edges)))


def disjoint_pm_greedy(g: Graph, rng: RngState) -> list:
    """Extract random perfect matchings until none remains; one heuristic
    pass. Returns the list of matchings in extraction order."""
    out = []
    current = g
    while True:
        m = random_perfect_matching(current, rng)
        if m is None:
            return out
        out.append(m)
        current = remove_edges(current, m.edges)


def perfect_matching_on_subset(g: Graph, vertices) -> Optional[Matching]:
    """Deterministic perfect matching of the induced subgraph, in original
    labels; None if the subgraph has none."""
    sub, back = subgraph_on(g, vertices)
    m = maximum_matching(sub)
    if m.size * 2 != sub.n:
        return None
    return Matching(
        tuple(
            sorted(
                (back[a], back[b]) if back[a] < back[b] else (back[b], back[a])
                for a, b in m.edges
            )
        )
    )
