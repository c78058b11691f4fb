"""Command-line front end.

    mntgraphs classify --in graphs.g6 [--assert mnt]
    mntgraphs construct dkw --base petersen --edge 0,1 --h2 2
    mntgraphs dkw-eligible --named petersen
    mntgraphs lemmas --stdin --exhaustive
    mntgraphs bounds --range 8..13 [--format json]
    mntgraphs search mnt --n 8 [--jobs 2] [--out DIR] [--checkpoint F] [--resume F]
    mntgraphs named petersen complete_4

graph6 is the pipe format on stdin and stdout.  Exit status: 0 success,
1 when an ``--assert`` fails, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bounds, classify, constructions, laws, search
from .graph import Graph, Graph6Error, GraphError, from_graph6, named, named_catalog, read_graph6_lines, to_graph6


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma-separated vertices, got {text!r}") from None
    return a, b


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input (exactly one)")
    src.add_argument("--in", dest="infile", metavar="FILE", help="graph6 file, one graph per line")
    src.add_argument("--stdin", action="store_true", help="read graph6 lines from stdin")
    src.add_argument("--graph6", metavar="STRING", help="a single graph6 string")
    src.add_argument("--named", metavar="NAME", help="a built-in graph, e.g. petersen, cycle_5")


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    given = [x for x in (args.infile, args.graph6, args.named) if x is not None] + ([1] if args.stdin else [])
    if len(given) != 1:
        raise UsageError("give exactly one of --in, --stdin, --graph6, --named")
    if args.named is not None:
        return [named(args.named)]
    if args.graph6 is not None:
        return [from_graph6(args.graph6)]
    if args.stdin:
        return read_graph6_lines(sys.stdin, "<stdin>")
    try:
        with open(args.infile) as fh:
            return read_graph6_lines(fh, args.infile)
    except OSError as exc:
        raise UsageError(f"{args.infile}: {exc.strerror}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _flag(x) -> str:
    return "-" if x is None else str(x).lower()


# -- subcommands ------------------------------------------------------


def _classify_one(g6: str) -> dict:
    g = from_graph6(g6)
    rep = classify.classify(g)
    d = rep.as_dict()
    d.update(graph6=g6, n=g.n, e=g.size())
    del d["target"]
    return d


def cmd_classify(args) -> int:
    graphs = _read_graphs(args)
    keys = [to_graph6(g) for g in graphs]
    if args.jobs > 1 and len(keys) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_classify_one, keys))
    else:
        reports = [_classify_one(k) for k in keys]
    if args.format == "json":
        print(_dump(reports))
    else:
        for r in reports:
            line = (f"{r['graph6']} n={r['n']} e={r['e']} traceable={_flag(r['traceable'])} "
                    f"hamiltonian={_flag(r['hamiltonian'])} mnt={_flag(r['mnt'])} mnh={_flag(r['mnh'])}")
            if r["failing_edge"]:
                line += f" failing_edge={r['failing_edge'][0]},{r['failing_edge'][1]}"
            print(line)
    if args.assert_ and not all(r[args.assert_] for r in reports):
        return 1
    return 0


def _build_spec(args) -> constructions.ConstructionSpec:
    kind = args.family
    if kind == "disjoint-cliques":
        return constructions.ConstructionSpec("disjoint_cliques", args.k, second_order=args.l)
    if kind in ("zelinka1", "zelinka2"):
        return constructions.ConstructionSpec(kind, args.r, tuple(args.sizes))
    try:
        named(args.base)
        base_kw = {"base_name": args.base}
    except GraphError:
        base_kw = {"base_graph6": args.base}
    return constructions.ConstructionSpec("dkw", edge=args.edge, h2_size=args.h2, **base_kw)


def cmd_construct(args) -> int:
    spec = _build_spec(args)
    g = spec.build()
    if args.format == "json":
        print(_dump({"spec": spec.as_dict(), "graph6": to_graph6(g), "n": g.n, "e": g.size()}))
    else:
        print(to_graph6(g))
    return 0


def cmd_dkw_eligible(args) -> int:
    rows = []
    for g in _read_graphs(args):
        rows.append({"graph6": to_graph6(g), "eligible": [list(e) for e in classify.dkw_eligible(g)]})
    if args.format == "json":
        print(_dump(rows))
    else:
        for r in rows:
            edges = " ".join(f"{a},{b}" for a, b in r["eligible"]) or "-"
            print(f"{r['graph6']} eligible={len(r['eligible'])} {edges}")
    if args.assert_ and not all(r["eligible"] for r in rows):
        return 1
    return 0


def cmd_lemmas(args) -> int:
    out = []
    dirty = False
    for g in _read_graphs(args):
        certified = bool(classify.is_mnt(g).mnt)
        report = laws.check_all(g, exhaustive=args.exhaustive, certified_mnt=certified)
        d = report.as_dict()
        d.update(graph6=to_graph6(g), n=g.n, e=g.size())
        out.append(d)
        dirty |= certified and bool(report.violations)
    if args.format == "json":
        print(_dump(out))
    else:
        for d in out:
            print(f"{d['graph6']} n={d['n']} e={d['e']} {d['label']}: {len(d['violations'])} violation(s)")
            for v in d["violations"]:
                print(f"  [{v['law']}] {v['detail']}")
    return 1 if args.assert_clean and dirty else 0


def cmd_bounds(args) -> int:
    try:
        ns = bounds.parse_range(args.range)
    except ValueError as exc:
        raise UsageError(f"--range: {exc}") from None
    if ns.start < 2:
        raise UsageError("--range must start at 2 or more")
    rows = bounds.status_table(ns)
    if args.format == "json":
        print(_dump([r.as_dict() for r in rows]))
    else:
        print(bounds.format_table(rows))
    return 0


def cmd_search(args) -> int:
    max_classes = args.max_classes
    if max_classes is None and os.environ.get("MNT_MAX_CLASSES"):
        try:
            max_classes = int(os.environ["MNT_MAX_CLASSES"])
        except ValueError:
            raise UsageError("MNT_MAX_CLASSES must be an integer") from None
    fn = search.min_mnt_size if args.target == "mnt" else search.min_mnh_size
    try:
        outcome = fn(args.n, max_classes=max_classes, jobs=args.jobs,
                     checkpoint=args.checkpoint, resume=args.resume)
    except (OSError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"checkpoint: {exc}") from None
    result = outcome.as_dict()
    stats = result.pop("stats")
    deterministic = {k: v for k, v in stats.items() if k != "seconds"}
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        if outcome.exact:
            (out / search.witness_filename(outcome)).write_text("".join(w + "\n" for w in result["witnesses"]))
        (out / f"{args.target}-n{args.n}-stats.json").write_text(_dump({**result, "stats": stats}) + "\n")
    if args.format == "json":
        print(_dump({**result, "stats": deterministic}))
    else:
        if outcome.exact:
            print(f"{args.target} n={args.n} minimum size {outcome.result} "
                  f"({len(outcome.witnesses)} witness class(es), {stats['classes']} classes searched)")
            for w in result["witnesses"]:
                print(w)
        else:
            lo, hi = outcome.bracket
            print(f"{args.target} n={args.n} budget exhausted: minimum size in [{lo}, {'-' if hi is None else hi}]")
    return 0


def cmd_named(args) -> int:
    if args.list or not args.names:
        print("\n".join(named_catalog()))
        return 0
    for name in args.names:
        print(to_graph6(named(name)))
    return 0


# -- parser -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mntgraphs", description="Maximal nontraceable graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="traceable/hamiltonian/MNT/MNH status")
    _add_input(p)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--assert", dest="assert_", choices=["mnt", "mnh", "traceable", "hamiltonian"])
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="emit a construction as graph6")
    p.add_argument("--format", choices=["graph6", "json"], default="graph6")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("disjoint-cliques")
    q.add_argument("k", type=int)
    q.add_argument("l", type=int)
    for name, count in (("zelinka1", 2), ("zelinka2", 3)):
        q = fam.add_parser(name)
        q.add_argument("--r", type=int, required=True, help="clique order")
        q.add_argument("--sizes", type=_int_list, required=True, help=f"{count} appendage sizes, e.g. 2,2")
    q = fam.add_parser("dkw")
    q.add_argument("--base", default="petersen", help="built-in name or graph6 string")
    q.add_argument("--edge", type=_pair, required=True, help="y1,y2")
    q.add_argument("--h2", type=int, choices=[1, 2], default=1)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("dkw-eligible", help="edges usable by the DKW construction")
    _add_input(p)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 if some graph has none")
    p.set_defaults(func=cmd_dkw_eligible)

    p = sub.add_parser("lemmas", help="run the structural law checkers")
    _add_input(p)
    p.add_argument("--exhaustive", action="store_true", help="no path/cutset caps (n <= 10)")
    p.add_argument("--format", choices=["table", "json"], default="json")
    p.add_argument("--assert-clean", action="store_true", help="exit 1 if a certified MNT graph has violations")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("bounds", help="status table for g(n)")
    p.add_argument("--range", default="2..13", help="a..b")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exhaustive minimum-size search")
    p.add_argument("target", choices=["mnt", "mnh"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-classes", type=int, help="class budget (env MNT_MAX_CLASSES)")
    p.add_argument("--checkpoint", metavar="FILE", help="write a resumable checkpoint after each level")
    p.add_argument("--resume", metavar="FILE", help="continue from a checkpoint")
    p.add_argument("--out", metavar="DIR", help="write witness .g6 and stats .json here")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("named", help="emit built-in graphs as graph6")
    p.add_argument("names", nargs="*")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_named)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("mntgraphs: error: --jobs must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, Graph6Error, GraphError, ValueError) as exc:
        print(f"mntgraphs: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
