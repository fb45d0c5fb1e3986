"""Seeded synthetic graphs, update batches and saturation goals.

Every function takes an explicit seed and draws from a numpy ``Generator``
backed by the counter-based Philox bit generator, so results depend on the
seed alone.
"""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np

from .errors import NotEnoughCandidatesError
from .graph import DynamicGraph
from .suitor import BFunction

__all__ = [
    "RMAT_PRESETS",
    "make_rng",
    "gen_gnp",
    "gen_rmat",
    "rmat_draws",
    "sample_insert_batch",
    "sample_remove_batch",
    "gen_b_function",
    "parse_b_spec",
]

RMAT_PRESETS = {
    "er": (0.25, 0.25, 0.25, 0.25),
    "g": (0.45, 0.15, 0.15, 0.25),
    "b": (0.55, 0.15, 0.15, 0.15),
}

DEFAULT_WEIGHTS = (0.0, 1.0)


def make_rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _weights(rng: np.random.Generator, k: int, weight_range) -> np.ndarray:
    lo, hi = map(float, weight_range)
    if not (0 <= lo < hi):
        raise ValueError(f"weight range must satisfy 0 <= lo < hi, got {weight_range}")
    # uniform on [0, 1) flipped to the half-open (lo, hi], so no weight is ever 0
    return hi - (hi - lo) * rng.random(k)


def _graph_from_codes(n: int, codes: np.ndarray, weights: np.ndarray) -> DynamicGraph:
    g = DynamicGraph(n)
    adj = g.adj
    us = (codes // n).tolist()
    vs = (codes % n).tolist()
    for u, v, w in zip(us, vs, weights.tolist()):
        adj[u][v] = w
        adj[v][u] = w
    g.m = len(us)
    return g


def gen_gnp(n: int, p: float, weight_range=DEFAULT_WEIGHTS, seed=0) -> DynamicGraph:
    """Erdos-Renyi G(n, p) with uniform weights in ``(lo, hi]``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = make_rng(seed)
    codes = []
    for u in range(n - 1):
        hit = np.nonzero(rng.random(n - u - 1) < p)[0]
        if hit.size:
            codes.append(u * n + u + 1 + hit)
    codes = np.concatenate(codes) if codes else np.empty(0, dtype=np.int64)
    return _graph_from_codes(n, codes, _weights(rng, codes.size, weight_range))


def _check_probs(probs: Sequence[float]) -> np.ndarray:
    arr = np.asarray(probs, dtype=float)
    if arr.shape != (4,) or np.any(arr < 0) or abs(arr.sum() - 1.0) > 1e-9:
        raise ValueError(f"R-MAT needs four non-negative probabilities summing to 1, got {probs}")
    return arr / arr.sum()


def rmat_draws(rng: np.random.Generator, scale: int, count: int, probs) -> tuple[np.ndarray, np.ndarray]:
    """Raw recursive-quadrant endpoint draws (may contain loops and repeats)."""
    p = _check_probs(probs)
    src = np.zeros(count, dtype=np.int64)
    dst = np.zeros(count, dtype=np.int64)
    for level in range(scale):
        q = rng.choice(4, size=count, p=p)
        bit = np.int64(1) << (scale - 1 - level)
        src |= (q >> 1) * bit
        dst |= (q & 1) * bit
    return src, dst


def gen_rmat(
    scale: int,
    edge_factor: int = 8,
    probs: Union[str, Sequence[float]] = "er",
    weight_range=DEFAULT_WEIGHTS,
    seed=0,
) -> DynamicGraph:
    """R-MAT graph on ``2**scale`` nodes from ``edge_factor * 2**scale`` endpoint draws.

    Self-loops and repeated pairs are dropped and redrawn, giving up after
    ``100 * target`` draws in total, so ``m`` can fall short of the target.
    """
    if scale < 1:
        raise ValueError("scale must be >= 1")
    if isinstance(probs, str):
        probs = RMAT_PRESETS[probs]
    _check_probs(probs)
    rng = make_rng(seed)
    n = 1 << scale
    target = edge_factor * n
    codes = np.empty(0, dtype=np.int64)
    drawn = 0
    while codes.size < target and drawn < 100 * target:
        k = min(target - codes.size, 100 * target - drawn)
        src, dst = rmat_draws(rng, scale, k, probs)
        drawn += k
        keep = src != dst
        lo = np.minimum(src[keep], dst[keep])
        hi = np.maximum(src[keep], dst[keep])
        codes = np.union1d(codes, lo * n + hi)
    return _graph_from_codes(n, codes, _weights(rng, codes.size, weight_range))


def sample_insert_batch(g: DynamicGraph, k: int, weight_range=DEFAULT_WEIGHTS, seed=0) -> list[tuple[int, int, float]]:
    """``k`` distinct non-edges of ``g``, uniformly at random, with fresh weights."""
    n = g.n
    total = n * (n - 1) // 2
    free = total - g.m
    if k > free:
        raise NotEnoughCandidatesError(f"asked for {k} non-edges, only {free} exist")
    rng = make_rng(seed)
    if k == 0:
        return []
    if free < 4 * k or total <= 200_000:
        cand = [(u, v) for u in range(n) for v in range(u + 1, n) if v not in g.adj[u]]
        idx = rng.choice(len(cand), size=k, replace=False)
        pairs = [cand[i] for i in idx.tolist()]
    else:
        chosen: dict[tuple[int, int], None] = {}
        while len(chosen) < k:
            us = rng.integers(0, n, size=2 * (k - len(chosen)))
            vs = rng.integers(0, n, size=us.size)
            for u, v in zip(us.tolist(), vs.tolist()):
                if u == v or v in g.adj[u]:
                    continue
                key = (u, v) if u < v else (v, u)
                chosen.setdefault(key)
                if len(chosen) == k:
                    break
        pairs = list(chosen)
    ws = _weights(rng, k, weight_range).tolist()
    return [(u, v, w) for (u, v), w in zip(pairs, ws)]


def sample_remove_batch(g: DynamicGraph, k: int, seed=0) -> list[tuple[int, int]]:
    """``k`` distinct existing edges of ``g``, uniformly at random."""
    if k > g.m:
        raise NotEnoughCandidatesError(f"asked for {k} edges, graph has {g.m}")
    if k == 0:
        return []
    rng = make_rng(seed)
    edges = [(u, v) for u, v, _ in g.edges()]
    idx = rng.choice(len(edges), size=k, replace=False)
    return [edges[i] for i in idx.tolist()]


def parse_b_spec(spec) -> tuple:
    """``3`` / ``"const:3"`` / ``"uniform:1,10"`` to ``("const", c)`` or ``("uniform", lo, hi)``."""
    if isinstance(spec, tuple):
        return spec
    if isinstance(spec, (int, np.integer)):
        return ("const", int(spec))
    s = str(spec).strip()
    if s.isdigit():
        return ("const", int(s))
    kind, _, rest = s.partition(":")
    try:
        if kind == "const":
            return ("const", int(rest))
        if kind in ("uniform", "random"):
            lo, hi = (int(x) for x in (rest or "1,10").split(","))
            return ("uniform", lo, hi)
    except ValueError:
        pass
    raise ValueError(f"bad b spec {spec!r}; use const:K or uniform:LO,HI")


def gen_b_function(n: int, mode=("const", 1), seed=0) -> BFunction:
    mode = parse_b_spec(mode)
    if mode[0] == "const":
        c = mode[1]
        if c < 1:
            raise ValueError("constant b must be >= 1")
        return BFunction.constant(n, c)
    _, lo, hi = mode
    if not 1 <= lo <= hi:
        raise ValueError(f"uniform b needs 1 <= lo <= hi, got {lo}, {hi}")
    return BFunction(make_rng(seed).integers(lo, hi + 1, size=n).tolist())

