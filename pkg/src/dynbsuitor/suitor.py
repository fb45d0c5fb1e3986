"""Per-node capped suitor queues and the b-matching they define.

Each queue is a short list sorted ascending by proposal key ``(w, -partner)``,
so the minimum sits at index 0. Saturation goals are small in practice, which
makes linear insertion cheaper than a heap and keeps iteration order
deterministic.
"""

from __future__ import annotations

from bisect import insort
from typing import Optional, Sequence

from .errors import AlreadyPresentError, NotPresentError, WouldNotImproveError
from .graph import DynamicGraph, Edge, Proposal

__all__ = ["MatchingState", "BFunction"]


class BFunction(tuple):
    """Immutable per-node saturation goals, each at least 1."""

    def __new__(cls, values: Sequence[int]):
        vals = tuple(int(x) for x in values)
        for u, x in enumerate(vals):
            if x < 1:
                raise ValueError(f"b({u}) = {x}; saturation goals must be >= 1")
        return super().__new__(cls, vals)

    @classmethod
    def constant(cls, n: int, c: int) -> "BFunction":
        return cls([c] * n)

    @property
    def beta(self) -> int:
        return max(self, default=0)


class MatchingState:
    """All suitor queues S(u) for one graph.

    ``keys[u]`` is the sorted queue of ``(w, -partner)`` keys and
    ``members[u]`` maps partner to weight for O(1) membership. Both views are
    kept in lockstep by :meth:`queue_insert` and :meth:`queue_remove`, which
    touch a single queue only; keeping v in S(u) iff u in S(v) is the
    caller's job.
    """

    __slots__ = ("n", "b", "keys", "members")

    def __init__(self, n: int, b: Sequence[int]):
        if len(b) != n:
            raise ValueError(f"b has {len(b)} entries for {n} nodes")
        self.n = n
        self.b = b if isinstance(b, BFunction) else BFunction(b)
        self.keys: list[list[tuple[float, int]]] = [[] for _ in range(n)]
        self.members: list[dict[int, float]] = [{} for _ in range(n)]

    def copy(self) -> "MatchingState":
        s = MatchingState.__new__(MatchingState)
        s.n = self.n
        s.b = self.b
        s.keys = [list(k) for k in self.keys]
        s.members = [dict(m) for m in self.members]
        return s

    # -- queue primitives -------------------------------------------------

    def is_saturated(self, owner: int) -> bool:
        return len(self.keys[owner]) >= self.b[owner]

    def queue_min(self, owner: int) -> Optional[Proposal]:
        q = self.keys[owner]
        if len(q) < self.b[owner]:
            return None
        w, neg = q[0]
        return Proposal(owner, -neg, w)

    def accepts(self, owner: int, partner: int, w: float) -> bool:
        """True iff proposal ``(owner, partner, w)`` beats ``owner``'s current minimum."""
        q = self.keys[owner]
        return len(q) < self.b[owner] or (w, -partner) > q[0]

    def queue_insert(self, owner: int, partner: int, w: float) -> Optional[int]:
        """Put ``partner`` into S(owner); return the evicted previous minimum, if any."""
        members = self.members[owner]
        if partner in members:
            raise AlreadyPresentError(f"{partner} already in S({owner})")
        q = self.keys[owner]
        key = (w, -partner)
        evicted = None
        if len(q) >= self.b[owner]:
            if not key > q[0]:
                raise WouldNotImproveError(
                    f"proposal ({owner},{partner},{w}) does not beat min {q[0]} of saturated S({owner})"
                )
            evicted = -q.pop(0)[1]
            del members[evicted]
        insort(q, key)
        members[partner] = w
        return evicted

    def queue_remove(self, owner: int, partner: int) -> None:
        members = self.members[owner]
        try:
            w = members.pop(partner)
        except KeyError:
            raise NotPresentError(f"{partner} not in S({owner})") from None
        self.keys[owner].remove((w, -partner))

    def partners(self, owner: int) -> list[int]:
        """Queue content of ``owner`` in queue order, minimum first."""
        return [-neg for _, neg in self.keys[owner]]

    # -- derived matching -------------------------------------------------

    def matching_edges(self) -> set[Edge]:
        out = set()
        for u in range(self.n):
            for v, w in self.members[u].items():
                if u < v and u in self.members[v]:
                    out.add(Edge(u, v, w))
        return out

    def matching_pairs(self) -> set[tuple[int, int]]:
        return {e.pair() for e in self.matching_edges()}

    def matching_weight(self) -> float:
        # sorted summation keeps the total independent of set iteration order
        return sum(sorted(e.w for e in self.matching_edges()))

    def check_s_invariant(self, g: Optional[DynamicGraph] = None) -> bool:
        for u in range(self.n):
            mem = self.members[u]
            if len(mem) > self.b[u] or len(mem) != len(self.keys[u]):
                return False
            for v, w in mem.items():
                if u not in self.members[v]:
                    return False
                if g is not None and g.adj[u].get(v) != w:
                    return False
        return True

    def same_queues(self, other: "MatchingState") -> bool:
        return self.n == other.n and self.members == other.members

    def dump(self) -> str:
        """One line per node, ``u: [p1:w1, p2:w2]``, minimum first."""
        lines = []
        for u in range(self.n):
            body = ", ".join(f"{-neg}:{w:g}" for w, neg in self.keys[u])
            lines.append(f"{u}: [{body}]")
        return "\n".join(lines) + "\n"
