"""Acceptance checks. Each test prints one ``PASS``/``FAIL`` line for its criterion.

Run with ``pytest tests/test_acceptance.py -v``; the report lines are printed
even when output capture is on. Tolerances are fixed here and are not tuned.
"""

import random
import statistics
import time
from collections import Counter

import pytest

from dynbsuitor import (
    DynamicGraph,
    apply_insert,
    apply_remove,
    check_static_equivalence,
    exact_mwbm,
    gen_b_function,
    gen_gnp,
    run_static,
)
from dynbsuitor.bench import BenchConfig, build_graph, run_bench, run_verify
from dynbsuitor.oracle import exact_weight

from conftest import WORKED_B, WORKED_EDGES, WORKED_MATCHING, WORKED_QUEUES, loose_end_instance

VERIFY_TRIALS = 10_000
PATH_TRIALS = 2_000
APPROX_INSTANCES = 1_000
APPROX_MAX_EDGES = 18
ORDER_INSTANCES = 100
ORDER_PERMUTATIONS = 20
B_MODES = ("const:1", "const:2", "const:3", "const:10", "uniform:1,10")

SPEEDUP_GEN = "rmat:scale=17,ef=8,probs=0.25,0.25,0.25,0.25"
SPEEDUP_B = "const:3"
SPEEDUP_OPS = ("insert", "remove")
SPEEDUP_REPS = 9
SINGLE_FLOOR = 1e2
BATCH_FLOOR = 1e1
RATIO_LO, RATIO_HI = 10**2.5, 10**3.5


@pytest.fixture
def report(capsys):
    def emit(num, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
        return ok

    return emit


def test_c1_worked_instance(report):
    g = DynamicGraph(6, WORKED_EDGES)
    times = []
    for _ in range(50):
        t0 = time.perf_counter_ns()
        s = run_static(g, WORKED_B)
        times.append(time.perf_counter_ns() - t0)
    queues = {u: set(s.partners(u)) for u in range(6)}
    elapsed = statistics.median(times)
    ok = (
        s.matching_weight() == 22
        and s.matching_pairs() == WORKED_MATCHING
        and queues == WORKED_QUEUES
        and elapsed < 1_000_000
    )
    assert report(1, ok, f"weight={s.matching_weight()} queues_match={queues == WORKED_QUEUES} median_time={elapsed / 1e3:.1f}us")


def test_c2_static_equality(report):
    t0 = time.perf_counter()
    results = run_verify(VERIFY_TRIALS, seed=0)
    failed = [r.seed for r in results if not r.passed]
    elapsed = time.perf_counter() - t0
    ok = not failed and elapsed < 600
    assert report(2, ok, f"{VERIFY_TRIALS - len(failed)}/{VERIFY_TRIALS} trials equal, {elapsed:.0f}s, failing seeds {failed[:10]}")


def test_c3_half_approximation(report):
    rng = random.Random(2024)
    bad = []
    done = 0
    t0 = time.perf_counter()
    seed = 0
    while done < APPROX_INSTANCES:
        seed += 1
        n = rng.randint(2, 10)
        g = gen_gnp(n, rng.choice([0.2, 0.4, 0.7]), seed=seed)
        if g.m > APPROX_MAX_EDGES:
            continue
        b = gen_b_function(n, B_MODES[done % len(B_MODES)], seed=seed)
        got = exact_weight(run_static(g, b).matching_edges())
        if 2 * got < exact_mwbm(g, b).weight:
            bad.append(seed)
        done += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    assert report(3, ok, f"{done - len(bad)}/{done} instances within factor 2 of optimum, {elapsed:.0f}s")


def test_c4_path_properties(report):
    results = run_verify(PATH_TRIALS, seed=500_000, record_paths=True)
    kinds = Counter()
    trials_hit = Counter()
    for r in results:
        seen = set()
        for v in r.path_violations:
            kind = "monotonicity" if v.startswith("non-decreasing") else "simplicity" if v.startswith("repeated") else "alternation"
            kinds[kind] += 1
            seen.add(kind)
        trials_hit.update(seen)
    unequal = sum(not r.passed for r in results)
    detail = ", ".join(f"{k}: {trials_hit[k]} trials / {kinds[k]} violations" for k in ("monotonicity", "simplicity", "alternation"))
    ok = not kinds and not unequal
    assert report(4, ok, f"{PATH_TRIALS} instrumented trials; violations by property -> {detail}; equality failures {unequal}")


def test_c5_gated_noops(report):
    rng = random.Random(5)
    gated_inserts = unmatched_removes = 0
    bad = 0
    for seed in range(300):
        n = rng.choice([16, 64])
        g = gen_gnp(n, rng.choice([0.1, 0.3]), seed=seed)
        b = gen_b_function(n, B_MODES[seed % len(B_MODES)], seed=seed)
        s = run_static(g, b)
        for _ in range(10):
            u, v = rng.sample(range(n), 2)
            before = s.copy()
            if g.has_edge(u, v):
                if v in s.members[u]:
                    continue
                stats = apply_remove(g, s, u, v)
                unmatched_removes += 1
            else:
                w = rng.uniform(0.0, 0.3)
                if s.accepts(u, v, w) and s.accepts(v, u, w):
                    g.add_edge(u, v, w)
                    continue
                stats = apply_insert(g, s, u, v, w)
                gated_inserts += 1
            if stats.affected_nodes != 0 or stats.queue_ops != 0 or not s.same_queues(before):
                bad += 1
    ok = bad == 0 and gated_inserts > 100 and unmatched_removes > 100
    assert report(5, ok, f"{gated_inserts} gated inserts, {unmatched_removes} unmatched removals, {bad} touched the matching")


def test_c6_order_invariance(report):
    rng = random.Random(6)
    bad = 0
    for seed in range(ORDER_INSTANCES):
        n = rng.choice([10, 30, 80])
        g = gen_gnp(n, rng.choice([0.05, 0.2, 0.5]), seed=seed)
        b = gen_b_function(n, B_MODES[seed % len(B_MODES)], seed=seed)
        ref = run_static(g, b).matching_pairs()
        order = list(range(n))
        for _ in range(ORDER_PERMUTATIONS):
            rng.shuffle(order)
            if run_static(g, b, order).matching_pairs() != ref:
                bad += 1
    total = ORDER_INSTANCES * ORDER_PERMUTATIONS
    assert report(6, bad == 0, f"{total - bad}/{total} permuted runs identical")


@pytest.fixture(scope="module")
def speedups():
    g = build_graph(gen=SPEEDUP_GEN, seed=0)
    out = {}
    for batch in (1, 1000):
        pooled = []
        for op in SPEEDUP_OPS:
            cfg = BenchConfig(gen=SPEEDUP_GEN, b=SPEEDUP_B, op=op, batch_size=batch, reps=SPEEDUP_REPS, seed=batch)
            pooled += run_bench(cfg, g=g)
        out[batch] = pooled
    return g, out


def test_c7_speedup(report, speedups):
    g, recs = speedups
    single = statistics.median(r.speedup for r in recs[1])
    batch = statistics.median(r.speedup for r in recs[1000])
    checked = all(r.equality_checked for rs in recs.values() for r in rs)
    ok = single >= SINGLE_FLOOR and batch >= BATCH_FLOOR and checked
    assert report(7, ok, f"n={g.n} m={g.m} median speedup batch 1: {single:.3g}, batch 1000: {batch:.3g}, all reps checked={checked}")


def test_c8_batch_scaling(report, speedups):
    _, recs = speedups
    single = statistics.median(r.speedup for r in recs[1])
    batch = statistics.median(r.speedup for r in recs[1000])
    ratio = single / batch
    ok = RATIO_LO <= ratio <= RATIO_HI
    assert report(8, ok, f"batch-1 / batch-1000 speedup ratio {ratio:.0f} (accepted range {RATIO_LO:.0f}..{RATIO_HI:.0f})")


def test_c9_loose_end(report):
    g, b, ix = loose_end_instance()
    s = run_static(g, b)
    stats = apply_insert(g, s, ix["u"], ix["v"], 10.0)
    equal = check_static_equivalence(g, b, s)
    ok = stats.loose_ends == 1 and equal
    assert report(9, ok, f"loose ends {stats.loose_ends}, recursion depth {stats.max_depth}, static equivalence {equal}")
