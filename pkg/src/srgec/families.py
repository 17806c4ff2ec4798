"""Constructors for the graph families under study.

Triangular graphs, lattice and Latin square graphs, Steiner block graphs,
and the imprimitive families, plus their canonical spreads. Orderings are
fixed (documented per constructor) so that certificates reproduce
byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .errors import (
    InvalidInputError,
    NotPrimeError,
    ParameterRangeError,
    ParseError,
)
from .graph import Graph, build_graph, complement


# ---------------------------------------------------------------------------
# structured inputs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatinSquareSet:
    """t mutually orthogonal Latin squares of order m (t may be 0).

    Validated exhaustively on construction: each square Latin, every pair
    of squares orthogonal.
    """

    m: int
    squares: tuple

    def __post_init__(self):
        m = self.m
        if m < 1:
            raise InvalidInputError("Latin square order must be positive")
        want = set(range(m))
        for s in self.squares:
            if len(s) != m or any(len(row) != m for row in s):
                raise InvalidInputError("square has wrong shape")
            for row in s:
                if set(row) != want:
                    raise InvalidInputError("row is not a permutation")
            for j in range(m):
                if {s[i][j] for i in range(m)} != want:
                    raise InvalidInputError("column is not a permutation")
        for a, b in combinations(self.squares, 2):
            pairs = {
                (a[i][j], b[i][j]) for i in range(m) for j in range(m)
            }
            if len(pairs) != m * m:
                raise InvalidInputError("squares are not orthogonal")

    @property
    def t(self) -> int:
        return len(self.squares)


@dataclass(frozen=True)
class Design:
    """Steiner 2-design: every point pair in exactly one block of size ell."""

    m: int
    ell: int
    blocks: tuple

    def __post_init__(self):
        m, ell = self.m, self.ell
        if ell < 2 or m < ell:
            raise InvalidInputError("need 2 <= ell <= m")
        cover = {}
        for blk in self.blocks:
            if len(set(blk)) != ell:
                raise InvalidInputError(f"block {blk} has size != {ell}")
            if any(not 0 <= x < m for x in blk):
                raise InvalidInputError(f"block {blk} has a point out of range")
            for pair in combinations(sorted(blk), 2):
                if pair in cover:
                    raise InvalidInputError(f"pair {pair} covered twice")
                cover[pair] = True
        if len(cover) != m * (m - 1) // 2:
            raise InvalidInputError("not every point pair is covered")
        if len(self.blocks) * ell * (ell - 1) != m * (m - 1):
            raise InvalidInputError("block count off")  # unreachable given cover


PartitionKind = Literal["spread", "hoffman-coloring", "bipartition", "halves"]


@dataclass(frozen=True)
class VertexPartition:
    """Ordered disjoint vertex classes; ``kind`` names the intended use."""

    classes: tuple
    kind: PartitionKind

    def __post_init__(self):
        seen = set()
        for cls in self.classes:
            for v in cls:
                if v in seen:
                    raise InvalidInputError(f"vertex {v} in two classes")
                seen.add(v)

    def check_cover(self, n: int) -> None:
        covered = {v for cls in self.classes for v in cls}
        if covered != set(range(n)):
            raise InvalidInputError("classes do not cover the vertex set")


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def triangular(m: int) -> Graph:
    """Line graph of the complete graph on m points.

    Vertices are the 2-subsets of {0..m-1} in lexicographic order; two are
    adjacent when they intersect. m >= 4 (smaller orders are complete).
    """
    if m < 4:
        raise ParameterRangeError("triangular graph needs m >= 4")
    pairs = list(combinations(range(m), 2))
    edges = [
        (i, j)
        for i in range(len(pairs))
        for j in range(i + 1, len(pairs))
        if set(pairs[i]) & set(pairs[j])
    ]
    return build_graph(len(pairs), edges)


def lattice(m: int) -> Graph:
    """Rook's graph on an m x m grid; cell (r, c) is vertex r*m + c."""
    if m < 2:
        raise ParameterRangeError("lattice graph needs m >= 2")
    return latin_square_graph(LatinSquareSet(m, ()))


def cyclic_latin_square(m: int) -> LatinSquareSet:
    """The single square L[i][j] = (i + j) mod m."""
    if m < 2:
        raise ParameterRangeError("cyclic Latin square needs m >= 2")
    square = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    return LatinSquareSet(m, (square,))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def mols_prime(p: int, t: int) -> LatinSquareSet:
    """t mutually orthogonal squares L_a[i][j] = (a*i + j) mod p, a = 1..t."""
    if not _is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not 1 <= t <= p - 1:
        raise ParameterRangeError(f"need 1 <= t <= {p - 1}")
    squares = tuple(
        tuple(tuple((a * i + j) % p for j in range(p)) for i in range(p))
        for a in range(1, t + 1)
    )
    return LatinSquareSet(p, squares)


# Multiplication-table squares over the field with 4 elements
# (elements 0,1,2,3 with xor addition): L_a[i][j] = a*i + j.
_MOLS4 = (
    ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)),
    ((0, 1, 2, 3), (2, 3, 0, 1), (3, 2, 1, 0), (1, 0, 3, 2)),
    ((0, 1, 2, 3), (3, 2, 1, 0), (1, 0, 3, 2), (2, 3, 0, 1)),
)


def mols4() -> LatinSquareSet:
    """Three pairwise-orthogonal Latin squares of order 4."""
    return LatinSquareSet(4, _MOLS4)


def latin_square_graph(ls: LatinSquareSet) -> Graph:
    """Graph on the m^2 cells; adjacency = same row, column, or symbol.

    Cell (r, c) is vertex r*m + c. With t = 0 this is the lattice graph;
    t = m-1 yields the complete graph (accepted).
    """
    m = ls.m
    n = m * m
    edges = []
    for r1 in range(m):
        for c1 in range(m):
            v = r1 * m + c1
            for r2 in range(r1, m):
                start = c1 + 1 if r2 == r1 else 0
                for c2 in range(start, m):
                    w = r2 * m + c2
                    if (
                        r1 == r2
                        or c1 == c2
                        or any(s[r1][c1] == s[r2][c2] for s in ls.squares)
                    ):
                        edges.append((v, w))
    return build_graph(n, edges)


def row_spread(m: int) -> VertexPartition:
    """Row classes of a Latin square graph: class r = {r*m .. r*m+m-1}.

    Each row induces a clique, so the classes form a spread.
    """
    classes = tuple(tuple(range(r * m, (r + 1) * m)) for r in range(m))
    return VertexPartition(classes, "spread")


def bose_sts(v: int) -> Design:
    """Steiner triple system on v points, v = 3 (mod 6).

    Points are (x, i) with x in Z_s (s = v/3, odd) and i in {0,1,2},
    numbered x + s*i. Blocks: the s triples {(x,0),(x,1),(x,2)} and, for
    x < y, {(x,i),(y,i),(h(x+y),i+1)} where h doubles-halves via
    (s+1)/2 mod s.
    """
    if v < 9 or v % 6 != 3:
        raise ParameterRangeError("Bose construction needs v = 3 (mod 6), v >= 9")
    s = v // 3
    half = (s + 1) // 2

    def pt(x, i):
        return x + s * i

    blocks = [tuple(pt(x, i) for i in range(3)) for x in range(s)]
    for i in range(3):
        for x in range(s):
            for y in range(x + 1, s):
                z = ((x + y) * half) % s
                blocks.append(
                    tuple(sorted((pt(x, i), pt(y, i), pt(z, (i + 1) % 3))))
                )
    return Design(v, 3, tuple(blocks))


def block_graph(d: Design) -> Graph:
    """Blocks as vertices, adjacency = intersection in exactly one point.

    Blocks are sorted lexicographically to fix the labeling.
    """
    blocks = sorted(tuple(sorted(b)) for b in d.blocks)
    sets = [frozenset(b) for b in blocks]
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if len(sets[i] & sets[j]) == 1
    ]
    return build_graph(len(blocks), edges)


def pair_design(m: int) -> Design:
    """The unique 2-(m, 2, 1) design: all 2-subsets as blocks."""
    if m < 2:
        raise ParameterRangeError("need m >= 2")
    return Design(m, 2, tuple(combinations(range(m), 2)))


def disjoint_cliques(ell: int, m: int) -> Graph:
    """ell disjoint copies of the complete graph on m vertices."""
    if ell < 2 or m < 2:
        raise ParameterRangeError("need ell, m >= 2")
    edges = [
        (c * m + i, c * m + j)
        for c in range(ell)
        for i in range(m)
        for j in range(i + 1, m)
    ]
    return build_graph(ell * m, edges)


def complete_multipartite(ell: int, m: int) -> Graph:
    """Complete multipartite graph with ell parts of size m."""
    return complement(disjoint_cliques(ell, m))


def parts_partition(ell: int, m: int, kind: PartitionKind) -> VertexPartition:
    """The ell consecutive blocks of size m as a partition."""
    classes = tuple(tuple(range(c * m, (c + 1) * m)) for c in range(ell))
    return VertexPartition(classes, kind)


# ---------------------------------------------------------------------------
# plain-text formats
# ---------------------------------------------------------------------------

def _int_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield lineno, [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token: {raw!r}", line=lineno) from None


def load_design(text: str) -> Design:
    """Parse 'm ell' header plus one block per line."""
    rows = list(_int_lines(text))
    if not rows or len(rows[0][1]) != 2:
        raise ParseError("expected header line 'm ell'", line=1)
    m, ell = rows[0][1]
    blocks = []
    for lineno, vals in rows[1:]:
        if len(vals) != ell:
            raise ParseError(f"block has {len(vals)} points, expected {ell}", line=lineno)
        blocks.append(tuple(vals))
    return Design(m, ell, tuple(blocks))


def dump_design(d: Design) -> str:
    lines = [f"{d.m} {d.ell}"]
    lines += [" ".join(str(x) for x in blk) for blk in d.blocks]
    return "\n".join(lines) + "\n"


def load_latin_squares(text: str) -> LatinSquareSet:
    """Parse 'm t' header plus t*m rows of m symbols."""
    rows = list(_int_lines(text))
    if not rows or len(rows[0][1]) != 2:
        raise ParseError("expected header line 'm t'", line=1)
    m, t = rows[0][1]
    body = rows[1:]
    if len(body) != m * t:
        raise ParseError(f"expected {m * t} rows, found {len(body)}", line=len(rows))
    squares = []
    for s in range(t):
        square = []
        for r in range(m):
            lineno, vals = body[s * m + r]
            if len(vals) != m:
                raise ParseError(f"row has {len(vals)} entries, expected {m}", line=lineno)
            square.append(tuple(vals))
        squares.append(tuple(square))
    return LatinSquareSet(m, tuple(squares))


def dump_latin_squares(ls: LatinSquareSet) -> str:
    lines = [f"{ls.m} {ls.t}"]
    for square in ls.squares:
        lines += [" ".join(str(x) for x in row) for row in square]
    return "\n".join(lines) + "\n"


def load_partition(text: str) -> VertexPartition:
    """Parse '<kind> <n>' header plus one class per line; checks cover."""
    lines = text.splitlines()
    header = lines[0].split() if lines else []
    if len(header) != 2:
        raise ParseError("expected header line '<kind> <n>'", line=1)
    kind, n_str = header
    if kind not in ("spread", "hoffman-coloring", "bipartition", "halves"):
        raise ParseError(f"unknown partition kind {kind!r}", line=1)
    try:
        n = int(n_str)
    except ValueError:
        raise ParseError("bad vertex count in header", line=1) from None
    classes = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        try:
            classes.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ParseError(f"non-integer token: {raw!r}", line=lineno) from None
    part = VertexPartition(tuple(classes), kind)
    part.check_cover(n)
    return part


def dump_partition(p: VertexPartition, n: int) -> str:
    lines = [f"{p.kind} {n}"]
    lines += [" ".join(str(v) for v in cls) for cls in p.classes]
    return "\n".join(lines) + "\n"
