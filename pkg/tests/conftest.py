"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the library's own algorithms: maximum
matching by exhaustive branching, colorability by plain enumeration with
conflict pruning, cocliques by subset recursion. Expected values asserted
in the tests were computed by these.
"""

from __future__ import annotations

import random

import pytest

from srgec import build_graph, complement, triangular
from srgec.graph import Graph


@pytest.fixture
def petersen() -> Graph:
    return complement(triangular(5))


def random_graph(rnd: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < p
    ]
    return build_graph(n, edges)


def brute_max_matching_size(g: Graph) -> int:
    """Branch on the lowest undecided vertex: match it or skip it."""
    n = g.n

    def rec(v: int, used: int) -> int:
        while v < n and (used >> v) & 1:
            v += 1
        if v >= n:
            return 0
        best = rec(v + 1, used | (1 << v))
        for w in g.neighbors(v):
            if w > v and not (used >> w) & 1:
                best = max(best, 1 + rec(v + 1, used | (1 << v) | (1 << w)))
        return best

    return rec(0, 0)


def enumerate_perfect_matchings(g: Graph) -> list:
    """All perfect matchings, each as a sorted edge tuple."""
    n = g.n
    out = []
    if n % 2:
        return out
    full = (1 << n) - 1

    def rec(used: int, acc: list):
        if used == full:
            out.append(tuple(sorted(acc)))
            return
        v = ((~used) & -(~used)).bit_length() - 1
        for w in g.neighbors(v):
            if not (used >> w) & 1:
                acc.append((v, w))
                rec(used | (1 << v) | (1 << w), acc)
                acc.pop()

    rec(0, [])
    return out


def brute_edge_colorable(g: Graph, colors: int) -> bool:
    """Plain enumeration over edges in storage order, no symmetry breaking."""
    edges = g.edges
    m = len(edges)
    vm = [0] * g.n

    def rec(i: int) -> bool:
        if i == m:
            return True
        a, b = edges[i]
        forbidden = vm[a] | vm[b]
        for c in range(colors):
            bit = 1 << c
            if not forbidden & bit:
                vm[a] |= bit
                vm[b] |= bit
                if rec(i + 1):
                    return True
                vm[a] ^= bit
                vm[b] ^= bit
        return False

    return rec(0)


def brute_max_coclique(g: Graph) -> int:
    """Maximum independent set size by subset recursion with bitmasks."""
    n = g.n
    best = 0

    def rec(candidates: int, size: int):
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        v = (candidates & -candidates).bit_length() - 1
        rec(candidates & ~(1 << v) & ~g.mask(v), size + 1)
        rec(candidates & ~(1 << v), size)

    rec((1 << n) - 1, 0)
    return best
