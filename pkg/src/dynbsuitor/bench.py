"""Measurement harness: dynamic update time against a full static recomputation.

Per repetition the harness samples a batch, copies the base graph and queues,
times only the update routine, then times one static run on the updated
graph. The static run doubles as the equality check, so every record with
``equality_checked`` set is a verified one.
"""

from __future__ import annotations

import csv
import io
import json
import math
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

from .dynamic import (
    EdgeOp,
    UpdateStats,
    apply_batch_insert,
    apply_batch_mixed,
    apply_batch_remove,
)
from .generators import (
    RMAT_PRESETS,
    gen_b_function,
    gen_gnp,
    gen_rmat,
    make_rng,
    sample_insert_batch,
    sample_remove_batch,
)
from .graph import DynamicGraph, read_edge_list
from .static import run_static
from .suitor import MatchingState

__all__ = [
    "BenchConfig",
    "BenchRecord",
    "parse_gen_spec",
    "build_graph",
    "sample_ops",
    "apply_ops",
    "run_bench",
    "summarize",
    "verify_trial",
    "run_verify",
    "geometric_mean",
]

OPERATIONS = ("insert", "remove", "mixed")


@dataclass
class BenchConfig:
    graph: Optional[str] = None
    gen: Optional[str] = None
    b: str = "const:1"
    op: str = "insert"
    batch_size: int = 1
    reps: int = 50
    seed: int = 0
    check: bool = True

    def __post_init__(self):
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.batch_size < 1:
            raise ValueError("batch size must be >= 1")
        if self.op not in OPERATIONS:
            raise ValueError(f"op must be one of {OPERATIONS}")
        if (self.graph is None) == (self.gen is None):
            raise ValueError("give exactly one of a graph file or a generator spec")


@dataclass
class BenchRecord:
    rep: int
    op: str
    batch_size: int
    static_time_ns: int
    dynamic_time_ns: int
    speedup: float
    affected_nodes: int
    loose_ends: int
    queue_ops: int
    path_count: int
    matching_weight_before: float
    matching_weight_after: float
    equality_checked: bool

    def to_dict(self) -> dict:
        return asdict(self)


def parse_gen_spec(spec: str) -> tuple[str, dict]:
    """``rmat:scale=17,ef=8,probs=a,b,c,d`` -> ``("rmat", {...})``.

    Bare comma-separated values extend the preceding key, which is how the
    four R-MAT probabilities ride along in one flag.
    """
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    params: dict[str, list[str]] = {}
    key = None
    for tok in filter(None, (t.strip() for t in rest.split(","))):
        if "=" in tok:
            key, _, val = tok.partition("=")
            key = key.strip()
            params[key] = [val.strip()]
        elif key is None:
            raise ValueError(f"dangling value {tok!r} in generator spec {spec!r}")
        else:
            params[key].append(tok)
    if kind == "rmat":
        out = {"scale": int(params.pop("scale", ["10"])[0]), "edge_factor": int(params.pop("ef", ["8"])[0])}
        if "probs" in params:
            out["probs"] = tuple(float(x) for x in params.pop("probs"))
        else:
            out["probs"] = RMAT_PRESETS[params.pop("preset", ["er"])[0]]
    elif kind == "gnp":
        out = {"n": int(params.pop("n", ["256"])[0]), "p": float(params.pop("p", ["0.05"])[0])}
    else:
        raise ValueError(f"unknown generator {kind!r}; expected rmat or gnp")
    if "seed" in params:
        out["seed"] = int(params.pop("seed")[0])
    if params:
        raise ValueError(f"unknown generator parameters: {sorted(params)}")
    return kind, out


def build_graph(graph_path: Optional[str] = None, gen: Optional[str] = None, seed: int = 0) -> DynamicGraph:
    if graph_path is not None:
        with open(graph_path) as fh:
            return read_edge_list(fh)[0]
    kind, params = parse_gen_spec(gen)
    params.setdefault("seed", seed)
    if kind == "rmat":
        return gen_rmat(**params)
    return gen_gnp(**params)


def sample_ops(g: DynamicGraph, op: str, k: int, seed) -> list[EdgeOp]:
    """A batch of ``k`` operations; ``mixed`` splits evenly between removals and insertions."""
    if op == "insert":
        return [EdgeOp("insert", u, v, w) for u, v, w in sample_insert_batch(g, k, seed=seed)]
    if op == "remove":
        return [EdgeOp("remove", u, v) for u, v in sample_remove_batch(g, k, seed=seed)]
    free = g.n * (g.n - 1) // 2 - g.m
    n_rem = min(max(k // 2, k - free), g.m)
    rem = [EdgeOp("remove", u, v) for u, v in sample_remove_batch(g, n_rem, seed=[seed, 1])]
    ins = [EdgeOp("insert", u, v, w) for u, v, w in sample_insert_batch(g, k - n_rem, seed=[seed, 2])]
    ops = rem + ins
    order = make_rng([seed, 3]).permutation(len(ops)).tolist()
    return [ops[i] for i in order]


def apply_ops(g: DynamicGraph, state: MatchingState, ops: Sequence[EdgeOp], **kw) -> UpdateStats:
    """Dispatch to the batch routine matching the operation kinds in ``ops``."""
    kinds = {o.kind for o in ops}
    if kinds == {"insert"}:
        return apply_batch_insert(g, state, [(o.u, o.v, o.w) for o in ops], **kw)
    if kinds == {"remove"}:
        return apply_batch_remove(g, state, [(o.u, o.v) for o in ops], **kw)
    return apply_batch_mixed(g, state, ops, **kw)


def run_bench(cfg: BenchConfig, g: Optional[DynamicGraph] = None, progress=None) -> list[BenchRecord]:
    """Run ``cfg.reps`` repetitions against one base graph; see the module docstring."""
    if g is None:
        g = build_graph(cfg.graph, cfg.gen, cfg.seed)
    b = gen_b_function(g.n, cfg.b, seed=[cfg.seed, 0])
    base_state = run_static(g, b)
    weight_before = base_state.matching_weight()
    records = []
    for rep in range(cfg.reps):
        ops = sample_ops(g, cfg.op, cfg.batch_size, seed=[cfg.seed, 1, rep])
        work_g = g.copy()
        work_s = base_state.copy()
        stats = apply_ops(work_g, work_s, ops)

        t0 = time.perf_counter_ns()
        ref = run_static(work_g, b)
        static_ns = time.perf_counter_ns() - t0

        checked = False
        if cfg.check:
            if not (work_s.same_queues(ref) and work_s.check_s_invariant(work_g)):
                raise AssertionError(f"dynamic result differs from static recomputation (seed={cfg.seed}, rep={rep})")
            checked = True
        dyn_ns = max(stats.wall_time_ns, 1)
        rec = BenchRecord(
            rep=rep,
            op=cfg.op,
            batch_size=cfg.batch_size,
            static_time_ns=static_ns,
            dynamic_time_ns=dyn_ns,
            speedup=static_ns / dyn_ns,
            affected_nodes=stats.affected_nodes,
            loose_ends=stats.loose_ends,
            queue_ops=stats.queue_ops,
            path_count=len(stats.path_lengths),
            matching_weight_before=weight_before,
            matching_weight_after=work_s.matching_weight(),
            equality_checked=checked,
        )
        records.append(rec)
        if progress is not None:
            progress(rec)
    return records


def geometric_mean(xs: Iterable[float]) -> float:
    xs = list(xs)
    return math.exp(statistics.fmean(math.log(x) for x in xs)) if xs else float("nan")


def summarize(records: Sequence[BenchRecord]) -> dict:
    speedups = [r.speedup for r in records]
    return {
        "summary": True,
        "op": records[0].op if records else None,
        "batch_size": records[0].batch_size if records else None,
        "reps": len(records),
        "speedup_median": statistics.median(speedups) if speedups else float("nan"),
        "speedup_geomean": geometric_mean(speedups),
        "static_time_ns_median": statistics.median(r.static_time_ns for r in records) if records else None,
        "dynamic_time_ns_median": statistics.median(r.dynamic_time_ns for r in records) if records else None,
        "affected_nodes_mean": statistics.fmean(r.affected_nodes for r in records) if records else None,
        "all_checked": all(r.equality_checked for r in records),
    }


def records_to_ndjson(records: Sequence[BenchRecord], summary: Optional[dict] = None) -> str:
    lines = [json.dumps(r.to_dict()) for r in records]
    if summary is not None:
        lines.append(json.dumps(summary))
    return "\n".join(lines) + "\n"


def records_to_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    names = list(BenchRecord.__dataclass_fields__)
    writer = csv.DictWriter(buf, fieldnames=names)
    writer.writeheader()
    for r in records:
        writer.writerow(r.to_dict())
    return buf.getvalue()


# -- randomized verification -------------------------------------------------

VERIFY_NS = (16, 64, 256)
VERIFY_PS = (0.02, 0.1, 0.3)
VERIFY_BS = ("const:1", "const:2", "const:3", "const:10", "uniform:1,10")
VERIFY_BATCHES = (1, 10, 100)


@dataclass
class TrialResult:
    seed: int
    n: int
    p: float
    b: str
    op: str
    batch_size: int
    passed: bool
    loose_ends: int = 0
    max_depth: int = 0
    path_violations: list = field(default_factory=list)


def check_path_properties(paths, g_after: DynamicGraph) -> list[str]:
    """Violations of the update-path properties; an empty list means all hold.

    Checks: consecutive path edges strictly decrease in the order of the node
    they share, no node repeats, and edge ``j`` entered the matching iff ``j``
    is even.
    """
    bad = []
    for path in paths:
        nodes = path.nodes
        if len(set(nodes)) != len(nodes):
            bad.append(f"repeated node in path {nodes}")
        for j, op in enumerate(path.ops):
            if op != ("I" if j % 2 == 0 else "R"):
                bad.append(f"edge {j} of path {nodes} is {op}")
        for j in range(len(nodes) - 2):
            shared = nodes[j + 1]
            before = (path.weights[j], -nodes[j])
            after = (path.weights[j + 1], -nodes[j + 2])
            if not before > after:
                bad.append(f"non-decreasing step at node {shared} in path {nodes}")
    return bad


def verify_trial(
    seed: int,
    ns=VERIFY_NS,
    ps=VERIFY_PS,
    bs=VERIFY_BS,
    ops=OPERATIONS,
    batches=VERIFY_BATCHES,
    record_paths: bool = False,
) -> TrialResult:
    """One seeded trial: random G(n,p), random b, random batch, then the equality check."""
    rng = make_rng([seed, 7])
    n = int(rng.choice(ns))
    p = float(rng.choice(ps))
    bspec = str(rng.choice(bs))
    op = str(rng.choice(ops))
    k = int(rng.choice(batches))
    g = gen_gnp(n, p, seed=[seed, 1])
    b = gen_b_function(n, bspec, seed=[seed, 2])
    state = run_static(g, b)
    free = n * (n - 1) // 2 - g.m
    k = min(k, {"insert": free, "remove": g.m, "mixed": free + g.m}[op])
    batch = sample_ops(g, op, k, seed=seed) if k else []
    stats = apply_ops(g, state, batch, record_paths=record_paths) if batch else UpdateStats(paths=[])
    ref = run_static(g, b)
    passed = (
        state.same_queues(ref)
        and state.matching_pairs() == ref.matching_pairs()
        and state.check_s_invariant(g)
    )
    violations = check_path_properties(stats.paths, g) if record_paths else []
    return TrialResult(seed, n, p, bspec, op, k, passed, stats.loose_ends, stats.max_depth, violations)


def run_verify(trials: int, seed: int = 0, record_paths: bool = False, **kw) -> list[TrialResult]:
    return [verify_trial(seed + i, record_paths=record_paths, **kw) for i in range(trials)]
