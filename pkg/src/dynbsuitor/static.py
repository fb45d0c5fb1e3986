"""Sequential b-Suitor: the half-approximate b-matching both initialiser and oracle use."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

from .graph import DynamicGraph
from .suitor import MatchingState

__all__ = ["find_partner", "run_static"]


def find_partner(g: DynamicGraph, state: MatchingState, u: int) -> Optional[int]:
    """Best neighbour ``v`` of ``u`` outside S(u) that would accept ``u``.

    ``v`` accepts when proposal ``(v, u)`` beats the minimum of S(v) in v's
    order. Among accepting neighbours the winner is the best proposal in u's
    order. Returns ``None`` when nobody accepts.
    """
    members = state.members[u]
    keys = state.keys
    b = state.b
    neg_u = -u
    best_key = None
    best = None
    for v, w in g.adj[u].items():
        if v in members:
            continue
        qv = keys[v]
        if len(qv) >= b[v] and not (w, neg_u) > qv[0]:
            continue
        key = (w, -v)
        if best_key is None or key > best_key:
            best_key = key
            best = v
    return best


def run_static(
    g: DynamicGraph,
    b: Sequence[int],
    order: Optional[Iterable[int]] = None,
) -> MatchingState:
    """Compute suitor queues for ``g`` from scratch.

    The work queue starts with ``b(u)`` copies of every node, in ``order``
    (ascending ids by default). A popped node ``u`` pairs with its best
    accepting neighbour ``p`` when that proposal also beats u's own minimum;
    whoever gets evicted on either side goes back on the queue.
    """
    state = MatchingState(g.n, b)
    bvals = state.b
    if order is None:
        order = range(g.n)
    work: deque[int] = deque()
    for u in order:
        work.extend([u] * bvals[u])

    adj = g.adj
    accepts = state.accepts
    insert = state.queue_insert
    remove = state.queue_remove
    while work:
        u = work.popleft()
        p = find_partner(g, state, u)
        if p is None:
            continue
        w = adj[u][p]
        if not accepts(u, p, w):
            continue
        y = insert(p, u, w)
        if y is not None:
            remove(y, p)
            work.append(y)
        z = insert(u, p, w)
        if z is not None:
            remove(z, u)
            work.append(z)
    return state
