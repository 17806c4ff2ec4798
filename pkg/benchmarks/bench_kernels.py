#!/usr/bin/env python3
"""Benchmark: compiled Cython kernels vs the pure-Python reference.

Workloads mirror the package's hot paths:
  * matching: repeated randomized perfect-matching extraction (the inner
    loop of the 1-factorization heuristic) on dense and sparse hosts;
  * coloring: a full impossibility proof (K9 with 8 colors) and a
    satisfiable instance.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time
from array import array

from srgec import complement, lattice, triangular
from srgec._kernels import reference
from srgec.graph import Graph, complete_graph
from srgec.rng import RngState

try:
    from srgec._kernels import _compiled as compiled
except ImportError:
    compiled = None


def shuffled_csr(g: Graph, rng: RngState):
    perm = list(range(g.n))
    rng.shuffle(perm)
    inv = [0] * g.n
    for new, old in enumerate(perm):
        inv[old] = new
    indptr = array("i", [0] * (g.n + 1))
    indices = array("i")
    for new in range(g.n):
        nbrs = [inv[w] for w in g.neighbors(perm[new])]
        rng.shuffle(nbrs)
        indices.extend(nbrs)
        indptr[new + 1] = indptr[new] + len(nbrs)
    return indptr, indices


def bench_matching(backend, g: Graph, rounds: int) -> float:
    rng = RngState(12345)
    inputs = [shuffled_csr(g, rng) for _ in range(rounds)]
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for indptr, indices in inputs:
            backend.max_matching(g.n, indptr, indices)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_coloring(backend, g: Graph, colors: int) -> float:
    eu = array("i", (a for a, _ in g.edges))
    ev = array("i", (b for _, b in g.edges))
    t0 = time.perf_counter()
    backend.exact_edge_coloring(g.n, eu, ev, colors, 10**9)
    return time.perf_counter() - t0


def fmt(seconds: float) -> str:
    return f"{seconds * 1000:9.1f} ms"


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    rounds = 40 if args.quick else 200
    workloads = [
        ("matching: complement T(13), n=78", lambda b: bench_matching(b, complement(triangular(13)), rounds)),
        ("matching: lattice(10), n=100", lambda b: bench_matching(b, lattice(10), rounds)),
        ("matching: T(12), n=66", lambda b: bench_matching(b, triangular(12), rounds)),
        ("coloring: K7 at 6 colors (proof)", lambda b: bench_coloring(b, complete_graph(7), 6)),
        ("coloring: K9 at 8 colors (proof)", lambda b: bench_coloring(b, complete_graph(9), 8)),
        ("coloring: petersen at 4 colors", lambda b: bench_coloring(b, complement(triangular(5)), 4)),
    ]
    if args.quick:
        workloads = [w for w in workloads if "K9" not in w[0]]

    print(f"{'workload':40s} {'python':>12s} {'compiled':>12s} {'speedup':>9s}")
    for name, run in workloads:
        py = run(reference)
        if compiled is None:
            print(f"{name:40s} {fmt(py)} {'n/a':>12s}")
            continue
        cy = run(compiled)
        print(f"{name:40s} {fmt(py)} {fmt(cy)} {py / cy:8.1f}x")
    if compiled is None:
        print("\ncompiled backend unavailable; build it with "
              "`pip install -e . --no-build-isolation`")


if __name__ == "__main__":
    main()
