"""Every route to a 1-factorization, plus the exact chromatic-index decider.

Routes: the randomized extract-and-restart heuristic, König's theorem for
regular bipartite graphs, the circle method for complete graphs, the
half-split compositions (including the matching-transfer trick for two odd
cliques), and the Hoffman-coloring constructions for a graph and its
complement. ``verify_factorization`` is the single checker every route's
output is held against.
"""

from __future__ import annotations

import multiprocessing
import time
from array import array
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from . import _kernels
from .errors import (
    DisjointCliquesError,
    NotHoffmanError,
    NotSpreadError,
    PreconditionError,
)
from .families import VertexPartition
from .graph import (
    Graph,
    build_graph,
    complement,
    complete_graph,
    is_regular,
    remove_edges,
    subgraph_on,
)
from .matching import Matching, maximum_matching, random_perfect_matching
from .rng import RngState, derive_seed


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    """Budgets for the randomized search; defaults are generous at desk
    scale. ``max_draws_per_pass`` of None means n*k."""

    seed: int = 0
    max_restarts: int = 100
    max_draws_per_pass: Optional[int] = None
    time_budget_ms: int = 60000
    parallel_width: int = 1

    def __post_init__(self):
        if self.max_restarts <= 0 or self.time_budget_ms <= 0 or self.parallel_width <= 0:
            raise PreconditionError("search budgets must be positive")
        if self.max_draws_per_pass is not None and self.max_draws_per_pass <= 0:
            raise PreconditionError("search budgets must be positive")


@dataclass(frozen=True)
class Exhausted:
    """Heuristic gave up: budget statistics. Never evidence of class 2."""

    restarts: int
    best_depth: int
    wall_ms: int


@dataclass(frozen=True)
class Factorization:
    host: Graph
    factors: tuple  # of Matching

    @property
    def count(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class EdgeColoring:
    host: Graph
    color: dict  # edge -> color index
    num_colors: int


@dataclass(frozen=True)
class Colorable:
    coloring: EdgeColoring
    nodes: int


@dataclass(frozen=True)
class NotColorable:
    nodes: int


@dataclass(frozen=True)
class BudgetExceeded:
    nodes: int


ExactResult = Union[Colorable, NotColorable, BudgetExceeded]


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def factorization_errors(g: Graph, fz: Factorization) -> list:
    """All the ways fz fails to be a 1-factorization of g (empty if valid)."""
    problems = []
    k = is_regular(g) if g.n else 0
    if k is None:
        return ["host graph is not regular"]
    if fz.count != k:
        problems.append(f"{fz.count} factors for degree {k}")
    seen = {}
    for idx, factor in enumerate(fz.factors):
        covered = set()
        for a, b in factor.edges:
            if not (0 <= a < b < g.n) or not g.adjacent(a, b):
                problems.append(f"factor {idx}: ({a},{b}) is not an edge")
                continue
            if a in covered or b in covered:
                problems.append(f"factor {idx}: vertex reused by ({a},{b})")
            covered.add(a)
            covered.add(b)
            if (a, b) in seen:
                problems.append(f"edge ({a},{b}) in factors {seen[(a, b)]} and {idx}")
            seen[(a, b)] = idx
        if len(covered) != g.n:
            problems.append(f"factor {idx} is not perfect ({len(covered)}/{g.n})")
    if len(seen) != g.edge_count:
        problems.append(f"union covers {len(seen)} of {g.edge_count} edges")
    return problems


def verify_factorization(g: Graph, fz: Factorization) -> bool:
    return not factorization_errors(g, fz)


def edge_coloring_is_proper(g: Graph, ec: EdgeColoring) -> bool:
    if set(ec.color) != set(g.edges):
        return False
    if any(not 0 <= c < ec.num_colors for c in ec.color.values()):
        return False
    at_vertex = [set() for _ in range(g.n)]
    for (a, b), c in ec.color.items():
        if c in at_vertex[a] or c in at_vertex[b]:
            return False
        at_vertex[a].add(c)
        at_vertex[b].add(c)
    return True


# ---------------------------------------------------------------------------
# randomized heuristic
# ---------------------------------------------------------------------------

def heuristic_factorize(g: Graph, cfg: SearchConfig) -> Union[Factorization, Exhausted]:
    """Extract random perfect matchings until stuck; restart from scratch
    until all k factors land or budgets run out.

    Deterministic given (g, seed) when parallel_width is 1. With width
    w > 1, w independently seeded searches race and the first verified
    success wins (losers are terminated); use heuristic_search to learn
    the winning seed.
    """
    return heuristic_search(g, cfg)[0]


def heuristic_search(
    g: Graph, cfg: SearchConfig
) -> Tuple[Union[Factorization, Exhausted], Optional[int]]:
    """heuristic_factorize plus the seed that produced the result."""
    _require_regular_even(g)
    if cfg.parallel_width > 1:
        return _race_heuristic(g, cfg)
    return _heuristic_single(g, cfg, cfg.seed)


def _require_regular_even(g: Graph) -> int:
    if g.n < 2 or g.n % 2:
        raise PreconditionError("need even order n >= 2")
    k = is_regular(g)
    if k is None:
        raise PreconditionError("graph is not regular")
    return k


def _heuristic_single(g: Graph, cfg: SearchConfig, seed: int):
    k = is_regular(g)
    if k == 0:
        return Factorization(g, ()), seed
    rng = RngState(seed)
    max_draws = cfg.max_draws_per_pass if cfg.max_draws_per_pass else max(1, g.n * k)
    start = time.monotonic()
    deadline = start + cfg.time_budget_ms / 1000.0
    best = 0
    restarts = 0
    for restarts in range(1, cfg.max_restarts + 1):
        current = g
        factors = []
        draws = 0
        while draws < max_draws and len(factors) < k:
            m = random_perfect_matching(current, rng)
            draws += 1
            if m is None:
                break
            factors.append(m)
            current = remove_edges(current, m.edges)
        best = max(best, len(factors))
        if len(factors) == k:
            assert current.edge_count == 0
            return Factorization(g, tuple(factors)), seed
        if time.monotonic() > deadline:
            break
    wall = int((time.monotonic() - start) * 1000)
    return Exhausted(restarts, best, wall), seed


def _race_worker(payload):
    n, edges, cfg_fields, seed = payload
    g = Graph(n, edges)
    cfg = SearchConfig(**cfg_fields)
    result, used_seed = _heuristic_single(g, cfg, seed)
    if isinstance(result, Factorization):
        return ("ok", used_seed, tuple(f.edges for f in result.factors))
    return ("exhausted", used_seed, (result.restarts, result.best_depth, result.wall_ms))


def _race_heuristic(g: Graph, cfg: SearchConfig):
    width = cfg.parallel_width
    base_fields = dict(
        seed=cfg.seed,
        max_restarts=cfg.max_restarts,
        max_draws_per_pass=cfg.max_draws_per_pass,
        time_budget_ms=cfg.time_budget_ms,
        parallel_width=1,
    )
    payloads = [
        (g.n, g.edges, base_fields, derive_seed(cfg.seed, i)) for i in range(width)
    ]
    exhausted = []
    # Pool.__exit__ terminates workers, so an early return kills the losers.
    with multiprocessing.get_context().Pool(processes=width) as pool:
        for tag, seed, data in pool.imap_unordered(_race_worker, payloads):
            if tag == "ok":
                fz = Factorization(g, tuple(Matching(edges) for edges in data))
                if verify_factorization(g, fz):
                    return fz, seed
            else:
                exhausted.append(data)
    restarts = max(e[0] for e in exhausted)
    best = max(e[1] for e in exhausted)
    wall = max(e[2] for e in exhausted)
    return Exhausted(restarts, best, wall), None


# ---------------------------------------------------------------------------
# constructive routes
# ---------------------------------------------------------------------------

def bipartite_regular_factorize(g: Graph, halves: VertexPartition) -> Factorization:
    """König: iterated perfect matchings of a regular bipartite graph.

    Every perfect matching of a d-regular bipartite graph leaves a
    (d-1)-regular bipartite graph, so d rounds empty the edge set.
    """
    if len(halves.classes) != 2:
        raise PreconditionError("need exactly two classes")
    halves.check_cover(g.n)
    left = set(halves.classes[0])
    for a, b in g.edges:
        if (a in left) == (b in left):
            raise PreconditionError(f"edge ({a},{b}) does not cross the bipartition")
    d = is_regular(g) if g.n else 0
    if d is None:
        raise PreconditionError("graph is not regular")
    if g.n and d < 1:
        raise PreconditionError("positive degree required")
    factors = []
    current = g
    for _ in range(d):
        m = maximum_matching(current)
        assert m.size * 2 == g.n, "regular bipartite graph lost its perfect matching"
        factors.append(m)
        current = remove_edges(current, m.edges)
    assert current.edge_count == 0
    return Factorization(g, tuple(factors))


def round_robin(v: int) -> Factorization:
    """Circle-method 1-factorization of the complete graph on v vertices.

    Vertex v-1 sits in the hub; round i pairs (i, v-1) and
    (i+j, i-j) mod (v-1) for j = 1..v/2-1.
    """
    if v < 2 or v % 2:
        raise PreconditionError("need even v >= 2")
    host = complete_graph(v)
    rounds = []
    nn = v - 1
    for i in range(nn):
        edges = [(i, v - 1)]
        for j in range(1, v // 2):
            a = (i + j) % nn
            b = (i - j) % nn
            edges.append((a, b) if a < b else (b, a))
        rounds.append(Matching(tuple(sorted(edges))))
    return Factorization(host, tuple(rounds))


def _map_matching(m: Matching, back) -> Matching:
    return Matching(
        tuple(
            sorted(
                (back[a], back[b]) if back[a] < back[b] else (back[b], back[a])
                for a, b in m.edges
            )
        )
    )


def compose_half_factorizations(
    g: Graph, halves: VertexPartition, f1: Factorization, f2: Factorization
) -> Factorization:
    """Merge 1-factorizations of the two induced halves, then finish the
    crossing edges with König. Factor i of the result pairs factor i of
    each half."""
    if len(halves.classes) != 2:
        raise PreconditionError("need exactly two classes")
    halves.check_cover(g.n)
    v1, v2 = (tuple(sorted(c)) for c in halves.classes)
    if len(v1) != len(v2):
        raise PreconditionError("halves differ in size")
    k = is_regular(g)
    if k is None:
        raise PreconditionError("graph is not regular")
    sub1, back1 = subgraph_on(g, v1)
    sub2, back2 = subgraph_on(g, v2)
    if f1.host != sub1 or f2.host != sub2:
        raise PreconditionError("factorization hosts do not match the induced halves")
    if not verify_factorization(sub1, f1) or not verify_factorization(sub2, f2):
        raise PreconditionError("invalid factorization of a half")
    if f1.count != f2.count:
        raise PreconditionError("halves have different inner degree")
    factors = [
        Matching(
            tuple(
                sorted(
                    _map_matching(f1.factors[i], back1).edges
                    + _map_matching(f2.factors[i], back2).edges
                )
            )
        )
        for i in range(f1.count)
    ]
    in1 = set(v1)
    cross_edges = [e for e in g.edges if (e[0] in in1) != (e[1] in in1)]
    if cross_edges:
        cross = Graph(g.n, tuple(cross_edges))
        cf = bipartite_regular_factorize(
            cross, VertexPartition((v1, v2), "bipartition")
        )
        factors.extend(cf.factors)
    return Factorization(g, tuple(factors))


def _odd_clique_coloring(h: int):
    """Canonical proper edge coloring of the complete graph on h (odd)
    vertices with h colors: color of {x, y} is (x+y)/2 mod h; the color
    missing at vertex u is u itself."""
    inv2 = (h + 1) // 2
    return lambda x, y: ((x + y) * inv2) % h


def factorize_clique_coclique_split(g: Graph, v1) -> Factorization:
    """Class-1 coloring of a regular graph split into two equal halves that
    are both cliques or both cocliques.

    Coclique case: all edges cross, so König applies directly. Clique case
    with even halves: circle method on each clique plus composition. Clique
    case with odd halves: pull one perfect matching F out of the crossing
    edges, color both cliques with h colors so that the bijection F
    preserves colors, give each F-edge the color missing at both its ends,
    and finish the rest of the crossing edges with König.
    """
    n = g.n
    if n < 2 or n % 2:
        raise PreconditionError("need even order")
    k = is_regular(g)
    if k is None:
        raise PreconditionError("graph is not regular")
    v1 = tuple(sorted(set(v1)))
    h = n // 2
    if len(v1) != h:
        raise PreconditionError("v1 must contain exactly n/2 vertices")
    in1 = set(v1)
    v2 = tuple(v for v in range(n) if v not in in1)

    def all_adjacent(vs):
        return all(g.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :])

    def none_adjacent(vs):
        return not any(g.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :])

    if none_adjacent(v1):
        if not none_adjacent(v2):
            raise PreconditionError("v1 is a coclique but its complement is not")
        return bipartite_regular_factorize(
            g, VertexPartition((v1, v2), "bipartition")
        )
    if not all_adjacent(v1) or not all_adjacent(v2):
        raise PreconditionError("v1 is neither a clique nor a coclique")

    cross_edges = [e for e in g.edges if (e[0] in in1) != (e[1] in in1)]
    cross_deg = k - (h - 1)
    if cross_deg == 0 and h % 2:
        raise PreconditionError("two disconnected odd cliques have no 1-factorization")
    if h % 2 == 0:
        halves = VertexPartition((v1, v2), "halves")
        return compose_half_factorizations(
            g, halves, round_robin(h), round_robin(h)
        )

    # odd cliques: matching transfer
    cross = Graph(n, tuple(cross_edges))
    f_match = maximum_matching(cross)
    assert f_match.size * 2 == n, "regular bipartite crossing graph must have a perfect matching"
    partner = {}
    for a, b in f_match.edges:
        partner[a] = b
        partner[b] = a
    pos1 = {u: i for i, u in enumerate(v1)}
    label2 = {partner[u]: pos1[u] for u in v1}
    color_of = _odd_clique_coloring(h)
    buckets = [[] for _ in range(h)]
    for i, u in enumerate(v1):
        for w in v1[i + 1 :]:
            buckets[color_of(pos1[u], pos1[w])].append((u, w))
    for i, u in enumerate(v2):
        for w in v2[i + 1 :]:
            c = color_of(label2[u], label2[w])
            buckets[c].append((u, w) if u < w else (w, u))
    for u in v1:
        w = partner[u]
        buckets[pos1[u]].append((u, w) if u < w else (w, u))
    factors = [Matching(tuple(sorted(edges))) for edges in buckets]
    in_f = set(f_match.edges)
    rest = [e for e in cross_edges if e not in in_f]
    if rest:
        cf = bipartite_regular_factorize(
            Graph(n, tuple(rest)), VertexPartition((v1, v2), "bipartition")
        )
        factors.extend(cf.factors)
    return Factorization(g, tuple(factors))


# ---------------------------------------------------------------------------
# Hoffman-coloring routes
# ---------------------------------------------------------------------------

def _check_hoffman(g: Graph, classes: VertexPartition):
    """Validate an equal-size coclique partition with constant cross
    valency; returns (k, class count, class size, cross valency, parts).
    Class-count parity is the caller's concern."""
    k = is_regular(g)
    if k is None:
        raise PreconditionError("graph is not regular")
    classes.check_cover(g.n)
    parts = [tuple(sorted(c)) for c in classes.classes]
    count = len(parts)
    if count < 2:
        raise NotHoffmanError(f"need at least two classes, got {count}")
    size = len(parts[0])
    if any(len(c) != size for c in parts):
        raise NotHoffmanError("classes differ in size")
    for c in parts:
        for i, a in enumerate(c):
            for b in c[i + 1 :]:
                if g.adjacent(a, b):
                    raise NotHoffmanError(f"class containing {a} is not a coclique")
    d, rem = divmod(k, count - 1)
    if rem:
        raise NotHoffmanError(f"degree {k} not divisible by {count - 1}")
    member = {}
    for idx, c in enumerate(parts):
        for v in c:
            member[v] = idx
    for v in range(g.n):
        per = [0] * count
        for w in g.neighbors(v):
            per[member[w]] += 1
        for idx in range(count):
            want = 0 if idx == member[v] else d
            if per[idx] != want:
                raise NotHoffmanError(
                    f"vertex {v} has {per[idx]} neighbors in class {idx}, expected {want}"
                )
    return k, count, size, d, parts


def _cross_factorize(g: Graph, a_verts, b_verts) -> list:
    """1-factorization of the regular bipartite graph between two vertex
    sets, returned as matchings in the host labels."""
    a_verts = sorted(a_verts)
    b_verts = sorted(b_verts)
    back = a_verts + b_verts
    amap = {v: i for i, v in enumerate(a_verts)}
    bmap = {v: len(a_verts) + i for i, v in enumerate(b_verts)}
    edges = [
        (amap[x], bmap[y]) for x in a_verts for y in b_verts if g.adjacent(x, y)
    ]
    sub = build_graph(len(back), edges)
    halves = VertexPartition(
        (tuple(range(len(a_verts))), tuple(range(len(a_verts), len(back)))),
        "bipartition",
    )
    fz = bipartite_regular_factorize(sub, halves)
    return [_map_matching(m, back) for m in fz.factors]


def hoffman_factorize(g: Graph, classes: VertexPartition) -> Factorization:
    """1-factorization from a Hoffman coloring with an even number of
    classes: schedule class pairs by the circle method; each round is a
    disjoint union of regular bipartite graphs, factored by König."""
    k, count, _size, d, parts = _check_hoffman(g, classes)
    if count % 2:
        raise NotHoffmanError(f"need an even number of classes, got {count}")
    schedule = round_robin(count)
    factors = []
    for rnd in schedule.factors:
        pieces = [_cross_factorize(g, parts[a], parts[b]) for a, b in rnd.edges]
        for j in range(d):
            merged = []
            for piece in pieces:
                merged.extend(piece[j].edges)
            factors.append(Matching(tuple(sorted(merged))))
    assert len(factors) == k
    return Factorization(g, tuple(factors))


def hoffman_complement_factorize(g: Graph, classes: VertexPartition) -> Factorization:
    """1-factorization of the COMPLEMENT of a Hoffman-colored graph.

    In the complement each class induces a clique and distinct classes are
    joined by regular bipartite graphs of valency (size - d). The first
    scheduled round is merged with the cliques and handled by the
    two-clique split per pair; the other rounds go through König. With
    zero cross valency the complement is a disjoint union of cliques:
    factorable iff the class size is even, else DisjointCliquesError.
    """
    _k, count, size, d, parts = _check_hoffman(g, classes)
    gc = complement(g)
    cd = size - d
    if cd == 0:
        # complement is `count` disjoint complete graphs on `size` vertices
        if size % 2:
            raise DisjointCliquesError(count, size)
        factors = []
        per_class = [
            [_map_matching(m, parts[idx]) for m in round_robin(size).factors]
            for idx in range(count)
        ]
        for j in range(size - 1):
            merged = []
            for idx in range(count):
                merged.extend(per_class[idx][j].edges)
            factors.append(Matching(tuple(sorted(merged))))
        return Factorization(gc, tuple(factors))
    if count % 2:
        raise NotHoffmanError(f"need an even number of classes, got {count}")
    schedule = round_robin(count)
    factors = []
    first = schedule.factors[0]
    piece_factor_lists = []
    for a, b in first.edges:
        union = sorted(parts[a] + parts[b])
        sub, back = subgraph_on(gc, union)
        local_v1 = tuple(i for i, v in enumerate(union) if v in set(parts[a]))
        pf = factorize_clique_coclique_split(sub, local_v1)
        piece_factor_lists.append([_map_matching(m, back) for m in pf.factors])
    per_piece = len(piece_factor_lists[0])
    for j in range(per_piece):
        merged = []
        for plist in piece_factor_lists:
            merged.extend(plist[j].edges)
        factors.append(Matching(tuple(sorted(merged))))
    for rnd in schedule.factors[1:]:
        pieces = [_cross_factorize(gc, parts[a], parts[b]) for a, b in rnd.edges]
        for j in range(cd):
            merged = []
            for piece in pieces:
                merged.extend(piece[j].edges)
            factors.append(Matching(tuple(sorted(merged))))
    assert len(factors) == g.n - 1 - _k
    return Factorization(gc, tuple(factors))


def spread_to_hoffman(g: Graph, spread: VertexPartition):
    """Re-read a clique spread of g as a Hoffman coloring of the
    complement; validates the coclique regularity there."""
    spread.check_cover(g.n)
    for cls in spread.classes:
        vs = tuple(sorted(cls))
        for i, a in enumerate(vs):
            for b in vs[i + 1 :]:
                if not g.adjacent(a, b):
                    raise NotSpreadError(f"class containing {a} is not a clique")
    gc = complement(g)
    part = VertexPartition(tuple(tuple(sorted(c)) for c in spread.classes), "hoffman-coloring")
    _check_hoffman(gc, part)
    return gc, part


# ---------------------------------------------------------------------------
# exact decider
# ---------------------------------------------------------------------------

DEFAULT_NODE_BUDGET = 10**8


def exact_chromatic_index(
    g: Graph, colors: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> ExactResult:
    """Complete backtracking search for a proper edge coloring.

    NotColorable is a proof that chi' > colors; by Vizing's theorem a
    NotColorable outcome at colors = max degree certifies class 2.
    BudgetExceeded is a distinct outcome, never read as a proof.
    """
    delta = max((g.degree(v) for v in range(g.n)), default=0)
    if colors < delta:
        raise PreconditionError(f"colors={colors} below max degree {delta}")
    eu = array("i", (a for a, _ in g.edges))
    ev = array("i", (b for _, b in g.edges))
    status, coloring, nodes = _kernels.exact_edge_coloring(
        g.n, eu, ev, colors, node_budget
    )
    if status == _kernels.STATUS_COLORABLE:
        mapping = {edge: coloring[i] for i, edge in enumerate(g.edges)}
        return Colorable(EdgeColoring(g, mapping, colors), nodes)
    if status == _kernels.STATUS_NOT_COLORABLE:
        return NotColorable(nodes)
    return BudgetExceeded(nodes)
