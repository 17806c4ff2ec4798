"""Class-1 / class-2 certificates: a serializable, independently
verifiable record of a chromatic-index determination.

Text layout (ASCII, LF, human-diffable):

    SRGEC 1
    graph6: <canonical headerless encoding>
    n: <n> k: <k>
    class: <1|2>
    method: <heuristic|konig|roundrobin|lemma22|hoffman|hoffman-complement|exact>
    seed: <u64 or ->
    factor 0: a-b a-b ...          (class 1, k lines, edges sorted)
    ...
    exact: colors=<k> outcome=notcolorable nodes=<N>   (class 2)
    witness 0: a-b ...             (class 2, k+1 lines: a (k+1)-coloring)
    ...

wall_ms is an in-memory measurement only: it never enters the text, so
certificates are byte-for-byte reproducible for fixed seeds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import GraphMismatchError, ParseError
from .graph import Graph, to_graph6

MAGIC = "SRGEC 1"

METHODS = (
    "heuristic",
    "konig",
    "roundrobin",
    "lemma22",
    "hoffman",
    "hoffman-complement",
    "exact",
)


@dataclass(frozen=True)
class ExactAttestation:
    colors: int
    nodes: int
    outcome: str  # "notcolorable"


@dataclass(frozen=True)
class Certificate:
    graph6: str
    n: int
    k: int
    cls: int  # 1 or 2
    method: str
    seed: Optional[int]
    factors: Optional[tuple] = None  # class 1: k edge tuples
    exact_attestation: Optional[ExactAttestation] = None  # class 2
    witness: Optional[tuple] = None  # class 2: k+1 color classes
    wall_ms: int = field(default=0, compare=False)


def _fmt_edges(edges) -> str:
    return " ".join(f"{a}-{b}" for a, b in edges)


def _parse_edges(token_str: str, lineno: int):
    edges = []
    for tok in token_str.split():
        parts = tok.split("-")
        if len(parts) != 2:
            raise ParseError(f"bad edge token {tok!r}", line=lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad edge token {tok!r}", line=lineno) from None
        if a >= b:
            raise ParseError(f"edge {tok!r} not in a<b form", line=lineno)
        edges.append((a, b))
    if edges != sorted(edges):
        raise ParseError("edges not in canonical sorted order", line=lineno)
    return tuple(edges)


def write_certificate(cert: Certificate) -> str:
    lines = [
        MAGIC,
        f"graph6: {cert.graph6}",
        f"n: {cert.n} k: {cert.k}",
        f"class: {cert.cls}",
        f"method: {cert.method}",
        f"seed: {cert.seed if cert.seed is not None else '-'}",
    ]
    if cert.cls == 1:
        for i, edges in enumerate(cert.factors):
            lines.append(f"factor {i}: {_fmt_edges(edges)}")
    else:
        att = cert.exact_attestation
        lines.append(
            f"exact: colors={att.colors} outcome={att.outcome} nodes={att.nodes}"
        )
        for i, edges in enumerate(cert.witness):
            lines.append(f"witness {i}: {_fmt_edges(edges)}")
    return "\n".join(lines) + "\n"


def read_certificate(text: str) -> Certificate:
    lines = text.splitlines()

    def need(idx, prefix):
        if idx >= len(lines):
            raise ParseError(f"missing line {idx + 1}", line=len(lines))
        if not lines[idx].startswith(prefix):
            raise ParseError(f"expected {prefix!r}", line=idx + 1)
        return lines[idx][len(prefix):]

    if not lines or lines[0] != MAGIC:
        raise ParseError(f"bad magic, expected {MAGIC!r}", line=1)
    graph6 = need(1, "graph6: ").strip()
    nk = need(2, "n: ")
    try:
        n_str, k_str = nk.split(" k: ")
        n, k = int(n_str), int(k_str)
    except ValueError:
        raise ParseError("bad 'n: <n> k: <k>' line", line=3) from None
    cls_str = need(3, "class: ").strip()
    if cls_str not in ("1", "2"):
        raise ParseError("class must be 1 or 2", line=4)
    cls = int(cls_str)
    method = need(4, "method: ").strip()
    if method not in METHODS:
        raise ParseError(f"unknown method {method!r}", line=5)
    seed_str = need(5, "seed: ").strip()
    if seed_str == "-":
        seed = None
    else:
        try:
            seed = int(seed_str)
        except ValueError:
            raise ParseError("bad seed", line=6) from None
        if not 0 <= seed < 2**64:
            raise ParseError("seed out of 64-bit range", line=6)
    if cls == 1:
        factors = []
        for i in range(k):
            body = need(6 + i, f"factor {i}: ")
            factors.append(_parse_edges(body, 7 + i))
        if len(lines) > 6 + k and any(s.strip() for s in lines[6 + k :]):
            raise ParseError("trailing content", line=7 + k)
        return Certificate(graph6, n, k, 1, method, seed, factors=tuple(factors))
    att_body = need(6, "exact: ")
    try:
        colors_part, outcome_part, nodes_part = att_body.split()
        colors = int(colors_part.removeprefix("colors="))
        outcome = outcome_part.removeprefix("outcome=")
        nodes = int(nodes_part.removeprefix("nodes="))
    except ValueError:
        raise ParseError("bad exact attestation line", line=7) from None
    if outcome != "notcolorable":
        raise ParseError("class-2 attestation must be notcolorable", line=7)
    witness = []
    for i in range(k + 1):
        body = need(7 + i, f"witness {i}: ")
        witness.append(_parse_edges(body, 8 + i))
    if len(lines) > 8 + k and any(s.strip() for s in lines[8 + k :]):
        raise ParseError("trailing content", line=9 + k)
    return Certificate(
        graph6,
        n,
        k,
        2,
        method,
        seed,
        exact_attestation=ExactAttestation(colors, nodes, outcome),
        witness=tuple(witness),
    )


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """Recheck a certificate against the graph it claims to describe.

    Class 1: every factor is a perfect matching, factors are pairwise
    disjoint, their union is the whole edge set, and there are exactly k
    of them. Class 2: the (k+1)-coloring witness is rechecked completely;
    the notcolorable attestation is recorded but not re-run here (the
    exact CLI command re-runs searches).
    """
    if to_graph6(g) != cert.graph6:
        raise GraphMismatchError("certificate belongs to a different graph")
    if g.n != cert.n:
        return False
    degrees = {g.degree(v) for v in range(g.n)} or {0}
    if degrees != {cert.k}:
        return False
    if cert.cls == 1:
        if cert.factors is None or len(cert.factors) != cert.k:
            return False
        seen = set()
        for edges in cert.factors:
            covered = set()
            for a, b in edges:
                if not (0 <= a < b < g.n) or not g.adjacent(a, b):
                    return False
                if a in covered or b in covered or (a, b) in seen:
                    return False
                covered.add(a)
                covered.add(b)
                seen.add((a, b))
            if len(covered) != g.n:
                return False
        return len(seen) == g.edge_count
    if cert.exact_attestation is None or cert.witness is None:
        return False
    if cert.exact_attestation.outcome != "notcolorable":
        return False
    if cert.exact_attestation.colors != cert.k:
        return False
    if len(cert.witness) != cert.k + 1:
        return False
    seen = set()
    for edges in cert.witness:
        covered = set()
        for a, b in edges:
            if not (0 <= a < b < g.n) or not g.adjacent(a, b):
                return False
            if a in covered or b in covered or (a, b) in seen:
                return False
            covered.add(a)
            covered.add(b)
            seen.add((a, b))
    return len(seen) == g.edge_count
