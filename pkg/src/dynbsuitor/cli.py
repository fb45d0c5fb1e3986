"""Command-line entry point: ``dynbsuitor {gen,run-static,verify,bench,trace}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from typing import Optional, Sequence

from . import __version__
from .bench import (
    OPERATIONS,
    VERIFY_BATCHES,
    VERIFY_BS,
    VERIFY_NS,
    VERIFY_PS,
    BenchConfig,
    build_graph,
    check_path_properties,
    records_to_csv,
    records_to_ndjson,
    run_bench,
    sample_ops,
    summarize,
    verify_trial,
)
from .dynamic import apply_insert, apply_remove, parse_batch
from .errors import GraphError, NotEnoughCandidatesError
from .generators import gen_b_function
from .graph import write_edge_list
from .oracle import check_static_equivalence
from .static import run_static


@contextmanager
def _sink(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE", help="edge-list file")
    src.add_argument("--gen", metavar="SPEC", help="generator, e.g. rmat:scale=10,ef=8,probs=0.25,0.25,0.25,0.25 or gnp:n=256,p=0.05")


def _csv_list(conv):
    def parse(text: str):
        return tuple(conv(x) for x in text.split(",") if x.strip())

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynbsuitor", description="Dynamic b-Suitor matching tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("--gen", required=True, metavar="SPEC")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("run-static", help="compute the b-Suitor matching of a graph")
    _add_source(p)
    p.add_argument("--b", default="const:1", help="const:K or uniform:LO,HI (default const:1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--queues", action="store_true", help="also print every suitor queue")
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("verify", help="randomised dynamic-vs-static equality trials")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=_csv_list(int), default=VERIFY_NS, help="comma list of node counts")
    p.add_argument("--p", type=_csv_list(float), default=VERIFY_PS, help="comma list of edge probabilities")
    p.add_argument("--b", action="append", help="b spec; repeat for several (default: a standard mix)")
    p.add_argument("--op", choices=OPERATIONS, action="append", help="operation kind; repeatable")
    p.add_argument("--batch", type=_csv_list(int), default=VERIFY_BATCHES, help="comma list of batch sizes")
    p.add_argument("--paths", action="store_true", help="record update paths and check their properties too")
    p.add_argument("--out", metavar="FILE", help="write one JSON line per failing trial")

    p = sub.add_parser("bench", help="time dynamic updates against static recomputation")
    _add_source(p)
    p.add_argument("--b", default="const:1")
    p.add_argument("--op", choices=OPERATIONS, default="insert")
    p.add_argument("--batch", type=int, default=1)
    p.add_argument("--reps", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check", action=argparse.BooleanOptionalAction, default=True,
                   help="check every repetition against the static result (default on)")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("trace", help="apply updates one by one and stream per-update statistics")
    _add_source(p)
    p.add_argument("--b", default="const:1")
    p.add_argument("--batch-file", metavar="FILE", help="ops file ('+ u v w' / '- u v'); otherwise sampled")
    p.add_argument("--op", choices=OPERATIONS, default="mixed")
    p.add_argument("--batch", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check", action="store_true", help="check equality after every update")
    p.add_argument("--out", metavar="FILE")
    return parser


def cmd_gen(args) -> int:
    g = build_graph(gen=args.gen, seed=args.seed)
    with _sink(args.out) as fh:
        write_edge_list(g, fh)
    print(f"wrote n={g.n} m={g.m}", file=sys.stderr)
    return 0


def cmd_run_static(args) -> int:
    g = build_graph(args.graph, args.gen, args.seed)
    b = gen_b_function(g.n, args.b, seed=[args.seed, 0])
    t0 = time.perf_counter_ns()
    state = run_static(g, b)
    elapsed = time.perf_counter_ns() - t0
    report = {
        "n": g.n,
        "m": g.m,
        "matching_size": len(state.matching_pairs()),
        "matching_weight": state.matching_weight(),
        "time_ns": elapsed,
    }
    with _sink(args.out) as fh:
        fh.write(json.dumps(report) + "\n")
        if args.queues:
            fh.write(state.dump())
    return 0


def cmd_verify(args) -> int:
    bs = tuple(args.b) if args.b else VERIFY_BS
    ops = tuple(args.op) if args.op else OPERATIONS
    failures = []
    path_bad = 0
    for i in range(args.trials):
        seed = args.seed + i
        res = verify_trial(seed, ns=args.n, ps=args.p, bs=bs, ops=ops, batches=args.batch, record_paths=args.paths)
        if not res.passed or res.path_violations:
            failures.append(res)
            path_bad += bool(res.path_violations)
            if not res.passed:
                print(f"FAIL seed={seed} n={res.n} p={res.p} b={res.b} op={res.op} batch={res.batch_size}",
                      file=sys.stderr)
    unequal = sum(not r.passed for r in failures)
    with _sink(args.out) as fh:
        for r in failures:
            fh.write(json.dumps(r.__dict__) + "\n")
    msg = f"{args.trials - unequal}/{args.trials} trials equal to static recomputation"
    if args.paths:
        msg += f"; {path_bad} trials with path-property violations"
    print(msg, file=sys.stderr)
    return 0 if not failures else 1


def cmd_bench(args) -> int:
    cfg = BenchConfig(graph=args.graph, gen=args.gen, b=args.b, op=args.op, batch_size=args.batch,
                      reps=args.reps, seed=args.seed, check=args.check)
    records = run_bench(cfg)
    summary = summarize(records)
    with _sink(args.out) as fh:
        if args.format == "csv":
            fh.write(records_to_csv(records))
        else:
            fh.write(records_to_ndjson(records, summary))
    print(f"median speedup {summary['speedup_median']:.1f}, geomean {summary['speedup_geomean']:.1f}",
          file=sys.stderr)
    return 0


def cmd_trace(args) -> int:
    g = build_graph(args.graph, args.gen, args.seed)
    b = gen_b_function(g.n, args.b, seed=[args.seed, 0])
    state = run_static(g, b)
    if args.batch_file:
        with open(args.batch_file) as fh:
            ops = parse_batch(fh)
    else:
        ops = sample_ops(g, args.op, args.batch, seed=[args.seed, 1])
    bad = 0
    with _sink(args.out) as fh:
        for i, op in enumerate(ops):
            if op.kind == "insert":
                stats = apply_insert(g, state, op.u, op.v, op.w, record_paths=True)
            else:
                stats = apply_remove(g, state, op.u, op.v, record_paths=True)
            row = {"index": i, "op": op.kind, "u": op.u, "v": op.v, "w": op.w, **stats.to_dict()}
            row["path_violations"] = check_path_properties(stats.paths, g)
            if args.check:
                row["equal"] = check_static_equivalence(g, b, state)
                bad += not row["equal"]
            fh.write(json.dumps(row) + "\n")
    return 0 if not bad else 1


COMMANDS = {
    "gen": cmd_gen,
    "run-static": cmd_run_static,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "trace": cmd_trace,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (GraphError, NotEnoughCandidatesError, ValueError, OSError) as exc:
        print(f"dynbsuitor {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
