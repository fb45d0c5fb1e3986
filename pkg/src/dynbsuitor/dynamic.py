"""Dyn-b-Suitor: keep the b-Suitor queues current under edge insertions and removals.

Every routine mutates the graph first and then repairs the suitor queues by
walking update paths from the nodes whose queues lost an entry. After each
call the queues are identical to a fresh :func:`~dynbsuitor.static.run_static`
on the updated graph.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Literal, Optional, Sequence

from .errors import BatchConflictError, ParseError, SelfLoopError
from .graph import DynamicGraph
from .static import find_partner
from .suitor import MatchingState

__all__ = [
    "EdgeOp",
    "UpdatePath",
    "UpdateStats",
    "DynamicMatcher",
    "find_affected",
    "apply_insert",
    "apply_remove",
    "apply_batch_insert",
    "apply_batch_remove",
    "apply_batch_mixed",
    "parse_batch",
    "format_batch",
]

# Tripwire on loose-end recursion; not a proven bound.
MAX_LOOSE_END_DEPTH = 64


@dataclass(frozen=True)
class EdgeOp:
    kind: Literal["insert", "remove"]
    u: int
    v: int
    w: Optional[float] = None

    def __post_init__(self):
        if self.kind not in ("insert", "remove"):
            raise ValueError(f"unknown op kind {self.kind!r}")
        if self.u == self.v:
            raise SelfLoopError(f"self-loop at node {self.u}")
        if self.kind == "insert" and self.w is None:
            raise ValueError("insert needs a weight")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


@dataclass
class UpdatePath:
    """Nodes visited by one traversal; ``ops[j]`` says what happened to edge ``(nodes[j], nodes[j+1])``.

    ``"I"`` means the edge entered the matching, ``"R"`` that it left.
    """

    nodes: list[int]
    weights: list[float] = field(default_factory=list)
    ops: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.nodes) - 1


@dataclass
class UpdateStats:
    path_lengths: list[int] = field(default_factory=list)
    loose_ends: int = 0
    queue_ops: int = 0
    max_depth: int = 0
    wall_time_ns: int = 0
    touched: set[int] = field(default_factory=set, repr=False)
    paths: Optional[list[UpdatePath]] = field(default=None, repr=False)

    @property
    def affected_nodes(self) -> int:
        """Number of distinct nodes whose queue changed."""
        return len(self.touched)

    def to_dict(self) -> dict:
        return {
            "affected_nodes": self.affected_nodes,
            "path_lengths": list(self.path_lengths),
            "loose_ends": self.loose_ends,
            "queue_ops": self.queue_ops,
            "wall_time_ns": self.wall_time_ns,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class _Run:
    """Queue edits routed through one place so the counters stay honest."""

    __slots__ = ("g", "state", "stats", "record")

    def __init__(self, g: DynamicGraph, state: MatchingState, stats: UpdateStats):
        self.g = g
        self.state = state
        self.stats = stats
        self.record = stats.paths is not None

    def insert(self, owner: int, partner: int, w: float) -> Optional[int]:
        self.stats.queue_ops += 1
        self.stats.touched.add(owner)
        evicted = self.state.queue_insert(owner, partner, w)
        if evicted is not None:
            self.stats.queue_ops += 1
        return evicted

    def remove(self, owner: int, partner: int) -> None:
        self.stats.queue_ops += 1
        self.stats.touched.add(owner)
        self.state.queue_remove(owner, partner)

    def find_affected(self, x: int) -> None:
        pending = [(x, 1)]
        while pending:
            start, depth = pending.pop()
            if depth > self.stats.max_depth:
                self.stats.max_depth = depth
            if depth > MAX_LOOSE_END_DEPTH:
                raise RuntimeError(f"loose-end recursion exceeded depth {MAX_LOOSE_END_DEPTH}")
            loose = self._walk(start)
            self.stats.loose_ends += len(loose)
            # LIFO so the first recorded loose end is repaired first
            pending.extend((le, depth + 1) for le in reversed(loose))

    def _walk(self, x: int) -> list[int]:
        g, state = self.g, self.state
        cu = x
        loose: list[int] = []
        path = UpdatePath([x]) if self.record else None
        length = 0
        while True:
            ca = find_partner(g, state, cu)
            if ca is None:
                break
            w = g.adj[cu][ca]
            # cu may have been refilled by an earlier path; only a strict improvement counts
            if not state.accepts(cu, ca, w):
                break
            if path is not None:
                held_by_ca = dict(state.members[ca])
            prev_cu = self.insert(cu, ca, w)
            prev_ca = self.insert(ca, cu, w)
            length += 1
            if path is not None:
                path.nodes.append(ca)
                path.weights.append(w)
                path.ops.append(_observe(state, cu, ca, was_matched=False))
            if prev_cu is not None:
                self.remove(prev_cu, cu)
                loose.append(prev_cu)
            if prev_ca is None:
                break
            if path is not None:
                was = prev_ca in held_by_ca and ca in state.members[prev_ca]
            self.remove(prev_ca, ca)
            length += 1
            if path is not None:
                path.nodes.append(prev_ca)
                path.weights.append(g.adj[ca][prev_ca])
                path.ops.append(_observe(state, ca, prev_ca, was_matched=was))
            cu = prev_ca
        self.stats.path_lengths.append(length)
        if path is not None:
            self.stats.paths.append(path)
        return loose


def _observe(state: MatchingState, x: int, y: int, was_matched: bool) -> str:
    """Classify what a step did to edge {x, y} in the matching, from the queues themselves."""
    now = y in state.members[x] and x in state.members[y]
    if now and not was_matched:
        return "I"
    if was_matched and not now:
        return "R"
    return "?"


def _new_stats(record_paths: bool) -> UpdateStats:
    return UpdateStats(paths=[] if record_paths else None)


def find_affected(
    g: DynamicGraph,
    state: MatchingState,
    x: int,
    stats: Optional[UpdateStats] = None,
) -> UpdateStats:
    """Walk the update path starting at ``x`` and repair any loose ends it leaves."""
    stats = stats if stats is not None else _new_stats(False)
    _Run(g, state, stats).find_affected(x)
    return stats


def _insert(run: _Run, u: int, v: int, w: float) -> None:
    run.g.add_edge(u, v, w)
    w = run.g.adj[u][v]
    state = run.state
    if not (state.accepts(u, v, w) and state.accepts(v, u, w)):
        return
    start_u = run.insert(u, v, w)
    start_v = run.insert(v, u, w)
    if start_u is not None:
        run.remove(start_u, u)
    if start_v is not None:
        run.remove(start_v, v)
    if start_u is not None:
        run.find_affected(start_u)
    if start_v is not None:
        run.find_affected(start_v)


def _remove(run: _Run, u: int, v: int) -> None:
    run.g.remove_edge(u, v)
    members = run.state.members
    if v in members[u] and u in members[v]:
        run.remove(u, v)
        run.remove(v, u)
        run.find_affected(u)
        run.find_affected(v)


def _timed(stats: UpdateStats, fn, *args) -> UpdateStats:
    t0 = time.perf_counter_ns()
    try:
        fn(*args)
    finally:
        stats.wall_time_ns += time.perf_counter_ns() - t0
    return stats


def apply_insert(g, state, u, v, w, *, record_paths=False) -> UpdateStats:
    stats = _new_stats(record_paths)
    return _timed(stats, _insert, _Run(g, state, stats), u, v, w)


def apply_remove(g, state, u, v, *, record_paths=False) -> UpdateStats:
    stats = _new_stats(record_paths)
    return _timed(stats, _remove, _Run(g, state, stats), u, v)


def _check_distinct(pairs: Iterable[tuple[int, int]]) -> None:
    seen = set()
    for u, v in pairs:
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise BatchConflictError(f"edge {{{u},{v}}} appears twice in the batch")
        seen.add(key)


def apply_batch_insert(g, state, batch: Sequence[tuple[int, int, float]], *, record_paths=False) -> UpdateStats:
    """Insert every edge in order.

    The batch must not name a pair twice. On a graph-layer error the edges
    before the failing one stay applied; the queues are consistent with that
    prefix.
    """
    _check_distinct((u, v) for u, v, _ in batch)
    stats = _new_stats(record_paths)
    run = _Run(g, state, stats)

    def go():
        for u, v, w in batch:
            _insert(run, u, v, w)

    return _timed(stats, go)


def apply_batch_remove(g, state, batch: Sequence[tuple[int, int]], *, record_paths=False) -> UpdateStats:
    _check_distinct(batch)
    stats = _new_stats(record_paths)
    run = _Run(g, state, stats)

    def go():
        for u, v in batch:
            _remove(run, u, v)

    return _timed(stats, go)


def apply_batch_mixed(g, state, ops: Sequence[EdgeOp], *, record_paths=False) -> UpdateStats:
    """Fold single-edge updates over ``ops``; the same pair may be inserted and later removed."""
    stats = _new_stats(record_paths)
    run = _Run(g, state, stats)

    def go():
        for op in ops:
            if op.kind == "insert":
                _insert(run, op.u, op.v, op.w)
            else:
                _remove(run, op.u, op.v)

    return _timed(stats, go)


class DynamicMatcher:
    """A graph bundled with its suitor queues.

    Thin convenience wrapper so callers do not have to thread ``(g, state)``
    through every call.
    """

    def __init__(self, g: DynamicGraph, b: Sequence[int], state: Optional[MatchingState] = None):
        from .static import run_static

        self.g = g
        self.state = state if state is not None else run_static(g, b)
        self.b = self.state.b

    def insert(self, u, v, w, **kw) -> UpdateStats:
        return apply_insert(self.g, self.state, u, v, w, **kw)

    def remove(self, u, v, **kw) -> UpdateStats:
        return apply_remove(self.g, self.state, u, v, **kw)

    def apply(self, ops: Sequence[EdgeOp], **kw) -> UpdateStats:
        return apply_batch_mixed(self.g, self.state, ops, **kw)

    def matching(self) -> set[tuple[int, int]]:
        return self.state.matching_pairs()

    def weight(self) -> float:
        return self.state.matching_weight()


def parse_batch(source: IO[str] | Iterable[str]) -> list[EdgeOp]:
    """Read ``+ u v w`` / ``- u v`` lines; ``#`` starts a comment line."""
    ops = []
    for lineno, line in enumerate(source, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        try:
            if parts[0] == "+" and len(parts) == 4:
                ops.append(EdgeOp("insert", int(parts[1]), int(parts[2]), float(parts[3])))
            elif parts[0] == "-" and len(parts) == 3:
                ops.append(EdgeOp("remove", int(parts[1]), int(parts[2])))
            else:
                raise ParseError(f"expected '+ u v w' or '- u v', got {s!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed op {s!r}: {exc}", lineno) from None
    return ops


def format_batch(ops: Iterable[EdgeOp]) -> Iterator[str]:
    for op in ops:
        if op.kind == "insert":
            yield f"+ {op.u} {op.v} {op.w!r}\n"
        else:
            yield f"- {op.u} {op.v}\n"
