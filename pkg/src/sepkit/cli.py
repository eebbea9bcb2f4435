"""Command-line interface.

Subcommands: facets (count/verify one graph), ensemble (MCMC or G(n,p)
ensembles to CSV), scan (bipartition / threshold / cycle-length studies),
plot (CSV -> SVG). Randomized commands take --seed; without one a seed is
drawn, printed, and used, so every figure stays regenerable.

Exit codes: 0 success, 1 input error, 2 computational refusal
(budget/guard/rejection cap), 3 internal assertion (oracle mismatch).
"""

from __future__ import annotations

import argparse
import re
import secrets
import sys
from pathlib import Path

from . import __version__
from .errors import InputError, RefusalError, VerificationError
from .experiments import (
    bipartition_scan,
    cycle_length_scan,
    ensemble_metrics,
    er_threshold_trial,
)
from .facets import enumerate_facet_functions, facet_count
from .graph6 import edge_list_dumps, edge_list_loads, graph6_decode
from .graphs import Graph, complete, cycle, is_connected, path, wedge
from .hull import HULL_SIZE_GUARD, facet_count_hull
from .reporting import write_ensemble_csv, write_scan_csv
from .samplers import (
    ChainConfig,
    RandomSource,
    double_edge_chain,
    sample_gnp_connected,
    single_edge_chain,
)

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


_NAMED = re.compile(r"^([CPK])(\d+)$")


def _named_graph(token: str) -> Graph:
    m = _NAMED.match(token.strip())
    if not m:
        raise InputError(
            f"cannot parse graph name {token!r}; use C<m>, P<m> or K<n>"
        )
    kind, num = m.group(1), int(m.group(2))
    if kind == "C":
        return cycle(num)
    if kind == "P":
        return path(num)
    return complete(num)


def _load_graph(args) -> Graph:
    sources = [
        args.graph6 is not None,
        args.edge_list is not None,
        args.complete is not None,
        args.cycle is not None,
        args.path is not None,
        args.wedge is not None,
    ]
    if sum(sources) != 1:
        raise InputError(
            "give exactly one graph source: a graph6 string, --edge-list, "
            "--complete, --cycle, --path or --wedge"
        )
    if args.graph6 is not None:
        return graph6_decode(args.graph6)
    if args.edge_list is not None:
        try:
            text = Path(args.edge_list).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.edge_list}: {exc}") from exc
        return edge_list_loads(text)
    if args.complete is not None:
        return complete(args.complete)
    if args.cycle is not None:
        return cycle(args.cycle)
    if args.path is not None:
        return path(args.path)
    left, right = args.wedge
    return wedge(_named_graph(left), _named_graph(right))


def _seed_of(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = secrets.randbits(63)
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _parse_degrees(text: str) -> list[int]:
    """Comma/whitespace-separated degrees, or @path to a file of them."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read degree file {text[1:]}: {exc}") from exc
    try:
        degs = [int(tok) for tok in text.replace(",", " ").split() if tok]
    except ValueError as exc:
        raise InputError(f"bad degree list {text!r}") from exc
    if not degs:
        raise InputError("empty degree list")
    return sorted(degs, reverse=True)


def _cmd_facets(args) -> int:
    g = _load_graph(args)
    if not is_connected(g):
        raise InputError("input graph is disconnected; facet counts need connectivity")
    n_facets = facet_count(g)
    print(n_facets)
    if args.list:
        for f in enumerate_facet_functions(g):
            print(",".join(str(x) for x in f))
    if args.verify:
        oracle = facet_count_hull(g, force=args.force_oracle)
        if oracle != n_facets:
            raise VerificationError(
                f"enumerator says {n_facets}, hull oracle says {oracle}"
            )
        print(f"oracle agrees ({oracle})", file=sys.stderr)
    return 0


def _maybe_plot(csv_path: str, x: str, y: str, line: bool = False) -> None:
    from .plotting import PlotSpec, render_plot

    out = str(Path(csv_path).with_suffix(".svg"))
    render_plot(PlotSpec(csv_path=csv_path, x=x, y=y, out_path=out, line=line))
    print(f"figure: {out}", file=sys.stderr)


def _write_large_graphs(graphs, out_csv: str) -> list[str]:
    refs = []
    gdir = Path(out_csv).with_suffix("")
    gdir = gdir.parent / (gdir.name + "_graphs")
    gdir.mkdir(parents=True, exist_ok=True)
    for i, g in enumerate(graphs):
        p = gdir / f"g{i:05d}.txt"
        p.write_text(edge_list_dumps(g), encoding="utf-8")
        refs.append(str(p))
    return refs


def _cmd_ensemble(args) -> int:
    seed = _seed_of(args)
    meta: dict[str, object] = {"kind": args.kind, "seed": seed}
    if args.kind == "gnp":
        if args.p is None:
            raise InputError("gnp ensembles need --p")
        rng = RandomSource(seed)
        graphs = [
            sample_gnp_connected(args.n, args.p, rng, max_rejects=args.max_rejects)
            for _ in range(args.samples)
        ]
        meta.update(n=args.n, p=args.p, samples=args.samples)
    else:
        config = ChainConfig(
            seed=seed,
            burn_in=args.burn_in,
            subsample=args.subsample,
            samples=args.samples,
        )
        if args.kind == "edges":
            if args.m is None:
                raise InputError("fixed-edge ensembles need --m")
            run = single_edge_chain(args.n, args.m, config)
        else:
            if args.d is None:
                raise InputError("degseq ensembles need --d")
            run = double_edge_chain(_parse_degrees(args.d), config)
        graphs = run.graphs
        meta.update(
            burn_in=run.burn_in,
            subsample=run.subsample,
            proposals=run.proposals,
            acceptance_rate=f"{run.acceptance_rate:.6f}",
        )
    records = ensemble_metrics(graphs, seed=seed, chain=args.kind, jobs=args.jobs)
    if graphs and graphs[0].n > 62:
        refs = _write_large_graphs(graphs, args.out)
        records = [
            type(r)(r.index, r.n, r.m, refs[i], r.cws, r.facets, r.seed, r.chain)
            for i, r in enumerate(records)
        ]
    write_ensemble_csv(records, args.out, meta)
    print(f"wrote {len(records)} records to {args.out}", file=sys.stderr)
    if args.plot:
        _maybe_plot(args.out, "cws", "facets")
    return 0


def _cmd_scan_bipartition(args) -> int:
    seed = _seed_of(args)
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    if args.regular is not None:
        config = ChainConfig(
            seed=seed,
            burn_in=args.burn_in if args.burn_in is not None else args.swaps,
            subsample=args.swaps,
            samples=args.graphs,
        )
        run = double_edge_chain(
            [args.regular] * args.n, config, check_every=args.check_window
        )
        graphs = run.graphs
        meta_chain = {
            "burn_in": run.burn_in,
            "subsample": run.subsample,
            "acceptance_rate": f"{run.acceptance_rate:.6f}",
        }
    else:
        graphs = [_load_graph(args)]
        meta_chain = {}
    rng = RandomSource(seed + 1)
    for i, g in enumerate(graphs):
        points = bipartition_scan(g, args.subsets, rng, spanning=args.spanning)
        out = outdir / f"bipartition_{i:02d}.csv"
        meta = {
            "seed": seed,
            "graph_index": i,
            "n": g.n,
            "m": g.m,
            "subsets": args.subsets,
            "spanning": args.spanning,
            **meta_chain,
        }
        write_scan_csv(points, out, meta)
        print(f"wrote {out} (final fraction {float(points[-1].fraction):.4f})",
              file=sys.stderr)
        if args.plot:
            _maybe_plot(str(out), "step", "fraction", line=True)
    return 0


def _cmd_scan_threshold(args) -> int:
    seed = _seed_of(args)
    rows = []
    for i in range(args.graphs):
        rng = RandomSource(seed + i)
        summary = er_threshold_trial(
            args.n, args.p, args.trials, rng, balance_width=args.balance_width
        )
        rows.append(summary)
        if summary.kind == "supercritical":
            print(
                f"graph {i}: connected_fraction="
                f"{float(summary.connected_fraction):.4f} "
                f"({summary.connected}/{summary.trials})"
            )
        else:
            print(
                f"graph {i}: witness_found={summary.witness_found} "
                f"min_degree={summary.witness_degree} "
                f"disconnects={summary.witness_disconnects}"
            )
    if args.p > 0.5:
        total = sum(s.connected for s in rows)
        trials = sum(s.trials for s in rows)
        print(f"overall connected fraction: {total}/{trials} = {total/trials:.4f}")
    else:
        wins = sum(1 for s in rows if s.witness_found and s.witness_disconnects)
        print(f"witness disconnects in {wins}/{len(rows)} trials")
    return 0


def _cmd_scan_cor33(args) -> int:
    degs = _parse_degrees(args.d)
    rows = cycle_length_scan(degs)
    print("m,facets,is_max")
    for row in rows:
        print(f"{row.cycle_length},{row.facets},{int(row.is_max)}")
    if args.out:
        Path(args.out).write_text(
            "m,facets,is_max\n"
            + "".join(
                f"{r.cycle_length},{r.facets},{int(r.is_max)}\n" for r in rows
            ),
            encoding="utf-8",
        )
    return 0


def _cmd_plot(args) -> int:
    from .plotting import PlotSpec, render_plot

    def lim(text):
        if text is None:
            return None
        try:
            a, b = (float(x) for x in text.split(","))
        except ValueError as exc:
            raise InputError(f"bad axis range {text!r}; use 'lo,hi'") from exc
        return (a, b)

    render_plot(
        PlotSpec(
            csv_path=args.csv,
            x=args.x,
            y=args.y,
            out_path=args.out,
            title=args.title,
            radius=args.radius,
            xlim=lim(args.xlim),
            ylim=lim(args.ylim),
            line=args.line,
        )
    )
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph6", nargs="?", default=None, help="graph6 string")
    p.add_argument("--edge-list", help="path to an 'n m / u v' edge-list file")
    p.add_argument("--complete", type=int, help="complete graph K_n")
    p.add_argument("--cycle", type=int, help="cycle with m edges")
    p.add_argument("--path", type=int, help="path with m edges")
    p.add_argument(
        "--wedge", nargs=2, metavar=("G", "H"),
        help="wedge of two named graphs, e.g. --wedge C5 P3",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sepkit", description=__doc__)
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("facets", help="count facets of one graph")
    _add_graph_source(p)
    p.add_argument("--list", action="store_true", help="print the facet labelings")
    p.add_argument(
        "--verify", action="store_true",
        help=f"cross-check against the exact hull oracle (n <= {HULL_SIZE_GUARD})",
    )
    p.add_argument(
        "--force-oracle", action="store_true",
        help="run the hull oracle above its size guard",
    )
    p.set_defaults(func=_cmd_facets)

    p = sub.add_parser("ensemble", help="sample an ensemble and write metrics CSV")
    p.add_argument("kind", choices=["gnp", "edges", "degseq"])
    p.add_argument("--n", type=int, help="vertex count (gnp, edges)")
    p.add_argument("--p", type=float, help="edge probability (gnp)")
    p.add_argument("--m", type=int, help="edge count (edges)")
    p.add_argument("--d", help="comma-separated degree sequence (degseq)")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--burn-in", type=int)
    p.add_argument("--subsample", type=int)
    p.add_argument("--max-rejects", type=int, default=1000)
    p.add_argument("--jobs", type=int, help="parallel facet-count workers")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--plot", action="store_true",
                   help="also render cws-vs-facets SVG next to the CSV")
    p.set_defaults(func=_cmd_ensemble)

    p = sub.add_parser("scan", help="bipartition / threshold / cycle-length scans")
    scan_sub = p.add_subparsers(dest="scan_command", required=True)

    q = scan_sub.add_parser("bipartition", help="random-subset connectivity scan")
    _add_graph_source(q)
    q.add_argument("--regular", type=int, help="sample k-regular graphs instead")
    q.add_argument("--n", type=int, default=5000, help="vertices for --regular")
    q.add_argument("--graphs", type=int, default=1, help="graphs for --regular")
    q.add_argument("--swaps", type=int, default=100001,
                   help="chain proposals between emitted graphs")
    q.add_argument("--burn-in", type=int)
    q.add_argument("--check-window", type=int, default=500,
                   help="proposals between connectivity checks for --regular")
    q.add_argument("--subsets", type=int, default=5000)
    q.add_argument("--spanning", action="store_true",
                   help="count only crossing subgraphs that span every vertex")
    q.add_argument("--seed", type=int)
    q.add_argument("--out-dir", default="bipartition_scan")
    q.add_argument("--plot", action="store_true")
    q.set_defaults(func=_cmd_scan_bipartition)

    q = scan_sub.add_parser("threshold", help="connectivity threshold trials")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=float, required=True)
    q.add_argument("--trials", type=int, default=200)
    q.add_argument("--graphs", type=int, default=1)
    q.add_argument("--balance-width", type=int, default=0)
    q.add_argument("--seed", type=int)
    q.set_defaults(func=_cmd_scan_threshold)

    q = scan_sub.add_parser("cor33", help="facet count per feasible cycle length")
    q.add_argument("--d", required=True, help="comma-separated degree sequence")
    q.add_argument("--out", help="optional CSV output path")
    q.set_defaults(func=_cmd_scan_cor33)

    p = sub.add_parser("plot", help="render a CSV as a standalone SVG")
    p.add_argument("--csv", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--title")
    p.add_argument("--radius", type=float, default=3.0)
    p.add_argument("--xlim")
    p.add_argument("--ylim")
    p.add_argument("--line", action="store_true", help="polyline instead of scatter")
    p.set_defaults(func=_cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
