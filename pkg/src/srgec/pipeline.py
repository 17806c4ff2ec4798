"""Certification pipeline: route selection, classify, batch processing.

Order of attack for a regular connected graph of even order: constructive
routes when a usable partition is attached (structure first), then the
randomized heuristic, then, on small instances, the exact decider in both
directions. Class 2 is only ever reported with a completed notcolorable
proof at k colors plus a rechecked (k+1)-coloring witness; a heuristic
that merely gave up yields Inconclusive.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .certificates import Certificate, ExactAttestation, write_certificate
from .errors import (
    DisjointCliquesError,
    NotHoffmanError,
    NotSpreadError,
    PreconditionError,
    RefusedError,
    SrgecError,
)
from .factorize import (
    Colorable,
    EdgeColoring,
    Factorization,
    NotColorable,
    SearchConfig,
    bipartite_regular_factorize,
    exact_chromatic_index,
    heuristic_search,
    hoffman_complement_factorize,
    hoffman_factorize,
    round_robin,
    verify_factorization,
)
from .families import VertexPartition
from .graph import (
    Graph,
    bipartition_of,
    complement,
    from_graph6,
    is_connected,
    is_regular,
    to_graph6,
)
from .rng import derive_seed

DEFAULT_EXACT_EDGE_LIMIT = 40


@dataclass(frozen=True)
class Inconclusive:
    """Neither a factorization nor a completed impossibility proof."""

    reason: str
    restarts: int = 0
    best_depth: int = 0


def _partition_is_clique_like(g: Graph, part: VertexPartition) -> bool:
    for cls in part.classes:
        vs = tuple(sorted(cls))
        for i, a in enumerate(vs):
            for b in vs[i + 1 :]:
                if not g.adjacent(a, b):
                    return False
    return True


def _partition_is_coclique_like(g: Graph, part: VertexPartition) -> bool:
    for cls in part.classes:
        vs = tuple(sorted(cls))
        for i, a in enumerate(vs):
            for b in vs[i + 1 :]:
                if g.adjacent(a, b):
                    return False
    return True


def _try_constructive(
    g: Graph, partition: Optional[VertexPartition]
) -> Optional[tuple]:
    """(factorization, method tag) via a structural route, or None."""
    k = is_regular(g)
    # complete graph: circle method
    if k == g.n - 1 and g.n % 2 == 0:
        return round_robin(g.n), "roundrobin"
    if partition is not None:
        try:
            partition.check_cover(g.n)
        except SrgecError:
            partition = None
    if partition is not None:
        classes = partition.classes
        if len(classes) == 2 and partition.kind in ("bipartition", "halves"):
            try:
                return (
                    bipartite_regular_factorize(g, partition),
                    "konig",
                )
            except (PreconditionError, SrgecError):
                pass
        if _partition_is_coclique_like(g, partition):
            try:
                return hoffman_factorize(g, partition), "hoffman"
            except (NotHoffmanError, PreconditionError):
                pass
        if _partition_is_clique_like(g, partition):
            # spread of g = Hoffman coloring of the complement; factorize
            # the complement's complement, i.e. g itself
            try:
                gc = complement(g)
                hpart = VertexPartition(
                    tuple(tuple(sorted(c)) for c in partition.classes),
                    "hoffman-coloring",
                )
                fz = hoffman_complement_factorize(gc, hpart)
                return fz, "hoffman-complement"
            except (NotHoffmanError, DisjointCliquesError, NotSpreadError, PreconditionError):
                pass
    # regular bipartite without attached partition: derive the bipartition
    halves = bipartition_of(g)
    if halves is not None and k and all(halves):
        try:
            return (
                bipartite_regular_factorize(
                    g, VertexPartition(halves, "bipartition")
                ),
                "konig",
            )
        except (PreconditionError, SrgecError):
            pass
    return None


def classify(
    g: Graph,
    cfg: SearchConfig,
    partition: Optional[VertexPartition] = None,
    exact_edge_limit: int = DEFAULT_EXACT_EDGE_LIMIT,
    exact_node_budget: int = 10**8,
) -> Union[Certificate, Inconclusive]:
    """Determine the chromatic index class and emit a certificate.

    Refuses (RefusedError) graphs outside the guaranteed setting: not
    regular, not connected, or of odd order.
    """
    start = time.monotonic()
    k = is_regular(g) if g.n else None
    if k is None:
        raise RefusedError("graph is not regular")
    if g.n % 2:
        raise RefusedError("odd order: no perfect matching can exist")
    if not is_connected(g):
        raise RefusedError("graph is disconnected")

    g6 = to_graph6(g)

    def wall():
        return int((time.monotonic() - start) * 1000)

    constructive = _try_constructive(g, partition)
    if constructive is not None:
        fz, method = constructive
        assert verify_factorization(g, fz)
        return Certificate(
            g6,
            g.n,
            k,
            1,
            method,
            None,
            factors=tuple(f.edges for f in fz.factors),
            wall_ms=wall(),
        )

    result, seed = heuristic_search(g, cfg)
    if isinstance(result, Factorization):
        assert verify_factorization(g, result)
        return Certificate(
            g6,
            g.n,
            k,
            1,
            "heuristic",
            seed,
            factors=tuple(f.edges for f in result.factors),
            wall_ms=wall(),
        )

    if g.edge_count <= exact_edge_limit:
        at_k = exact_chromatic_index(g, k, exact_node_budget)
        if isinstance(at_k, Colorable):
            fz = _coloring_to_factors(at_k.coloring, k)
            return Certificate(
                g6, g.n, k, 1, "exact", None, factors=fz, wall_ms=wall()
            )
        if isinstance(at_k, NotColorable):
            above = exact_chromatic_index(g, k + 1, exact_node_budget)
            if isinstance(above, Colorable):
                witness = _coloring_to_factors(above.coloring, k + 1)
                return Certificate(
                    g6,
                    g.n,
                    k,
                    2,
                    "exact",
                    None,
                    exact_attestation=ExactAttestation(k, at_k.nodes, "notcolorable"),
                    witness=witness,
                    wall_ms=wall(),
                )
            return Inconclusive(
                "proved chi' > k but found no k+1 witness within budget",
                result.restarts,
                result.best_depth,
            )
        return Inconclusive(
            "exact search exceeded its node budget",
            result.restarts,
            result.best_depth,
        )
    return Inconclusive(
        f"heuristic exhausted after {result.restarts} restarts "
        f"(best depth {result.best_depth}/{k})",
        result.restarts,
        result.best_depth,
    )


def _coloring_to_factors(ec: EdgeColoring, num: int) -> tuple:
    classes = [[] for _ in range(num)]
    for edge, c in ec.color.items():
        classes[c].append(edge)
    return tuple(tuple(sorted(cls)) for cls in classes)


# ---------------------------------------------------------------------------
# batch mode
# ---------------------------------------------------------------------------

@dataclass
class BatchEntry:
    path: str
    line: int
    outcome: str  # class1 | class2 | inconclusive | refused | error
    detail: str = ""


@dataclass
class BatchSummary:
    entries: list
    wall_ms: int

    def count(self, outcome: str) -> int:
        return sum(1 for e in self.entries if e.outcome == outcome)

    @property
    def ok(self) -> bool:
        return all(e.outcome in ("class1", "class2") for e in self.entries)

    def lines(self):
        counts = {
            key: self.count(key)
            for key in ("class1", "class2", "inconclusive", "refused", "error")
        }
        out = [
            f"graphs: {len(self.entries)}",
            *(f"{key}: {val}" for key, val in counts.items()),
            f"wall_ms: {self.wall_ms}",
        ]
        return out


def _classify_entry(payload):
    path, line_no, g6_line, cfg_fields, seed, exact_edge_limit = payload
    cfg = SearchConfig(**{**cfg_fields, "seed": seed})
    try:
        g = from_graph6(g6_line)
        outcome = classify(g, cfg, exact_edge_limit=exact_edge_limit)
    except RefusedError as exc:
        return BatchEntry(path, line_no, "refused", exc.reason), None
    except SrgecError as exc:
        return BatchEntry(path, line_no, "error", str(exc)), None
    if isinstance(outcome, Inconclusive):
        return BatchEntry(path, line_no, "inconclusive", outcome.reason), None
    tag = "class1" if outcome.cls == 1 else "class2"
    return BatchEntry(path, line_no, tag, outcome.method), outcome


def batch_run(paths, cfg: SearchConfig, jobs: int = 1) -> BatchSummary:
    """Classify every graph6 line of every file; write certificates next
    to the inputs (suffix .cert, blocks separated by blank lines).

    Entry i (global, in sorted path order, then line order) is seeded with
    derive_seed(cfg.seed, i), so outputs do not depend on the job count.
    """
    start = time.monotonic()
    cfg_fields = dict(
        seed=cfg.seed,
        max_restarts=cfg.max_restarts,
        max_draws_per_pass=cfg.max_draws_per_pass,
        time_budget_ms=cfg.time_budget_ms,
        parallel_width=1,
    )
    payloads = []
    entries = []
    index = 0
    for path in sorted(str(p) for p in paths):
        try:
            text = Path(path).read_text()
        except OSError as exc:
            entries.append(BatchEntry(path, 0, "error", str(exc)))
            continue
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            payloads.append(
                (
                    path,
                    line_no,
                    line.strip(),
                    cfg_fields,
                    derive_seed(cfg.seed, index),
                    DEFAULT_EXACT_EDGE_LIMIT,
                )
            )
            index += 1
    if jobs > 1 and payloads:
        import multiprocessing

        with multiprocessing.get_context().Pool(processes=jobs) as pool:
            results = pool.map(_classify_entry, payloads)
    else:
        results = [_classify_entry(p) for p in payloads]

    certs_by_path = {}
    for (entry, cert) in results:
        entries.append(entry)
        if cert is not None:
            certs_by_path.setdefault(entry.path, []).append(cert)
    for path, certs in certs_by_path.items():
        text = "\n".join(write_certificate(c) for c in certs)
        Path(path + ".cert").write_text(text)
    wall = int((time.monotonic() - start) * 1000)
    return BatchSummary(entries, wall)
