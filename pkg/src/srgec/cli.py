"""Command-line interface.

Subcommands: gen, info, spectrum, factorize, exact, verify, batch.
Exit codes: 0 success, 1 an inconclusive/refused outcome (or failed
verification), 2 usage or parse errors. SRGEC_SEED sets the default seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import families
from .certificates import read_certificate, write_certificate, verify_certificate
from .errors import GraphMismatchError, RefusedError, SrgecError
from .factorize import (
    Colorable,
    NotColorable,
    SearchConfig,
    exact_chromatic_index,
)
from .graph import (
    from_graph6,
    is_connected,
    is_regular,
    recognize_srg,
    to_graph6,
)
from .graph import SrgParams
from .pipeline import Inconclusive, batch_run, classify
from .spectra import bound_report


def _default_seed() -> int:
    raw = os.environ.get("SRGEC_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"srgec: bad SRGEC_SEED value {raw!r}")


def _read_graphs(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        print(f"srgec: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    graphs = []
    for line in text.splitlines():
        if line.strip():
            graphs.append(from_graph6(line.strip()))
    if not graphs:
        print(f"srgec: no graph6 lines in {path}", file=sys.stderr)
        raise SystemExit(2)
    return graphs


def _gen_graph(args):
    fam = args.family
    params = args.args
    spread = None
    if fam == "triangular":
        (m,) = params
        g = families.triangular(m)
    elif fam == "lattice":
        (m,) = params
        g = families.lattice(m)
        spread = families.row_spread(m)
    elif fam == "latinsq":
        m, t = params
        g = families.latin_square_graph(_latin_squares(m, t))
        spread = families.row_spread(m)
    elif fam == "blockgraph-sts":
        (v,) = params
        g = families.block_graph(families.bose_sts(v))
    elif fam == "cliques":
        ell, m = params
        g = families.disjoint_cliques(ell, m)
        spread = families.parts_partition(ell, m, "spread")
    elif fam == "multipartite":
        ell, m = params
        g = families.complete_multipartite(ell, m)
        spread = families.parts_partition(ell, m, "hoffman-coloring")
    else:
        raise SystemExit(f"srgec: unknown family {fam!r}")
    return g, spread


def _latin_squares(m: int, t: int):
    if t == 0:
        return families.LatinSquareSet(m, ())
    if t == 1:
        return families.cyclic_latin_square(m)
    if m == 4 and t <= 3:
        full = families.mols4()
        return families.LatinSquareSet(4, full.squares[:t])
    return families.mols_prime(m, t)


def cmd_gen(args) -> int:
    g, spread = _gen_graph(args)
    out = Path(args.output)
    out.write_text(to_graph6(g) + "\n")
    print(f"wrote {out} (n={g.n}, m={g.edge_count})")
    if args.with_spread:
        if spread is None:
            print("srgec: no canonical partition for this family", file=sys.stderr)
            return 2
        side = Path(str(out) + ".spread")
        side.write_text(families.dump_partition(spread, g.n))
        print(f"wrote {side} ({len(spread.classes)} classes, kind {spread.kind})")
    return 0


def cmd_info(args) -> int:
    for idx, g in enumerate(_read_graphs(args.file)):
        prefix = f"[{idx}] " if idx else ""
        print(f"{prefix}graph6: {to_graph6(g)}")
        print(f"n: {g.n}")
        print(f"edges: {g.edge_count}")
        k = is_regular(g) if g.n else None
        print(f"regular: {k if k is not None else 'no'}")
        print(f"connected: {'yes' if is_connected(g) else 'no'}")
        params = recognize_srg(g)
        if params:
            print(f"srg: ({params.n},{params.k},{params.lam},{params.mu})")
        else:
            print("srg: no")
    return 0


def cmd_spectrum(args) -> int:
    try:
        n, k, lam, mu = (int(tok) for tok in args.params.split(","))
    except ValueError:
        print("srgec: --params expects n,k,l,m", file=sys.stderr)
        return 2
    for key, value in bound_report(SrgParams(n, k, lam, mu)):
        print(f"{key}: {value}")
    return 0


def _load_partition_for(path: str):
    side = Path(path + ".spread")
    if side.exists():
        return families.load_partition(side.read_text())
    return None


def cmd_factorize(args) -> int:
    graphs = _read_graphs(args.file)
    cfg = SearchConfig(
        seed=args.seed,
        max_restarts=args.max_restarts,
        time_budget_ms=args.budget_ms,
        parallel_width=args.jobs,
    )
    partition = _load_partition_for(args.file)
    certs = []
    status = 0
    for idx, g in enumerate(graphs):
        try:
            if args.method == "heuristic":
                outcome = classify(g, cfg, partition=None, exact_edge_limit=0)
            elif args.method == "constructive":
                from .pipeline import _try_constructive
                from .certificates import Certificate

                found = _try_constructive(g, partition)
                if found is None:
                    print(f"graph {idx}: no constructive route applies")
                    status = 1
                    continue
                fz, method = found
                outcome = Certificate(
                    to_graph6(g),
                    g.n,
                    is_regular(g),
                    1,
                    method,
                    None,
                    factors=tuple(f.edges for f in fz.factors),
                )
            else:
                outcome = classify(g, cfg, partition=partition)
        except RefusedError as exc:
            print(f"graph {idx}: refused: {exc.reason}")
            status = 1
            continue
        if isinstance(outcome, Inconclusive):
            print(f"graph {idx}: inconclusive: {outcome.reason}")
            status = 1
            continue
        certs.append(outcome)
        print(
            f"graph {idx}: class {outcome.cls} via {outcome.method}"
            + (f" (seed {outcome.seed})" if outcome.seed is not None else "")
        )
    if certs:
        out = Path(args.file + ".cert")
        out.write_text("\n".join(write_certificate(c) for c in certs))
        print(f"wrote {out}")
    return status


def cmd_exact(args) -> int:
    graphs = _read_graphs(args.file)
    status = 0
    for idx, g in enumerate(graphs):
        try:
            result = exact_chromatic_index(g, args.colors, args.node_budget)
        except SrgecError as exc:
            print(f"graph {idx}: {exc}", file=sys.stderr)
            return 2
        if isinstance(result, Colorable):
            print(f"graph {idx}: colorable with {args.colors} colors "
                  f"(nodes {result.nodes})")
        elif isinstance(result, NotColorable):
            print(f"graph {idx}: NOT colorable with {args.colors} colors "
                  f"(nodes {result.nodes})")
        else:
            print(f"graph {idx}: budget exceeded (nodes {result.nodes})")
            status = 1
    return status


def cmd_verify(args) -> int:
    graphs = _read_graphs(args.graph)
    try:
        blocks = [
            blk for blk in Path(args.cert).read_text().split("\n\n") if blk.strip()
        ]
    except OSError as exc:
        print(f"srgec: cannot read {args.cert}: {exc}", file=sys.stderr)
        return 2
    if len(blocks) != len(graphs):
        print(
            f"srgec: {len(graphs)} graphs but {len(blocks)} certificates",
            file=sys.stderr,
        )
        return 1
    status = 0
    for idx, (g, blk) in enumerate(zip(graphs, blocks)):
        cert = read_certificate(blk if blk.endswith("\n") else blk + "\n")
        try:
            ok = verify_certificate(g, cert)
        except GraphMismatchError:
            ok = False
        print(f"graph {idx}: {'ok' if ok else 'INVALID'}")
        if not ok:
            status = 1
    return status


def cmd_batch(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"srgec: {args.dir} is not a directory", file=sys.stderr)
        return 2
    paths = sorted(str(p) for p in directory.glob("*.g6"))
    if not paths:
        print(f"srgec: no .g6 files under {args.dir}", file=sys.stderr)
        return 2
    cfg = SearchConfig(seed=args.seed)
    summary = batch_run(paths, cfg, jobs=args.jobs)
    for line in summary.lines():
        print(line)
    for entry in summary.entries:
        if entry.outcome not in ("class1", "class2"):
            print(f"{entry.path}:{entry.line}: {entry.outcome}: {entry.detail}")
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srgec",
        description="strongly regular graphs: spectra, factorizations, "
        "chromatic-index certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph (graph6)")
    p.add_argument("family", choices=[
        "triangular", "lattice", "latinsq", "blockgraph-sts", "cliques", "multipartite",
    ])
    p.add_argument("args", type=int, nargs="+", help="family parameters")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--with-spread", action="store_true",
                   help="also write FILE.spread with the canonical partition")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("info", help="describe a graph6 file")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("spectrum", help="spectrum and bound report for parameters")
    p.add_argument("--params", required=True, metavar="n,k,l,m")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("factorize", help="classify a graph, write FILE.cert")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-restarts", type=int, default=100)
    p.add_argument("--budget-ms", type=int, default=60000)
    p.add_argument("--jobs", type=int, default=1, help="parallel search lanes")
    p.add_argument("--method", choices=["auto", "heuristic", "constructive"],
                   default="auto")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("exact", help="exact edge-colorability decision")
    p.add_argument("file")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--node-budget", type=int, default=10**8)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="verify certificates against a graph file")
    p.add_argument("graph")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="classify every .g6 file in a directory")
    p.add_argument("dir")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "seed") and args.seed is None:
        args.seed = _default_seed()
    try:
        return args.func(args)
    except SrgecError as exc:
        print(f"srgec: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
