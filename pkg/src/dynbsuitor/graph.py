"""Undirected weighted simple graph over a fixed node set, plus edge-list I/O.

Nodes are the integers ``0 .. n-1``. Weights are strictly positive floats and
are compared exactly; ties between equal weights are broken by node id (see
:func:`compare_proposals`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Optional

from .errors import (
    DuplicateEdgeError,
    MissingEdgeError,
    MixedOwnerError,
    NodeRangeError,
    NonPositiveWeightError,
    ParseError,
    SelfLoopError,
)

__all__ = [
    "DynamicGraph",
    "Edge",
    "Proposal",
    "compare_proposals",
    "proposal_key",
    "read_edge_list",
    "write_edge_list",
]


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    w: float

    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


@dataclass(frozen=True)
class Proposal:
    """Partner ``partner`` sitting in the suitor queue of ``owner`` with weight ``w``."""

    owner: int
    partner: int
    w: float


def proposal_key(partner: int, w: float) -> tuple[float, int]:
    """Sort key for a proposal at a fixed owner: larger key means better proposal."""
    return (w, -partner)


def compare_proposals(a: Proposal, b: Optional[Proposal]) -> int:
    """Three-way comparison under the proposal order at a shared owner.

    Returns 1 if ``a`` beats ``b``, -1 if ``b`` beats ``a`` and 0 only when both
    name the same partner. Higher weight wins; equal weights go to the smaller
    partner id. Any proposal beats ``None``.
    """
    if b is None:
        return 1
    if a.owner != b.owner:
        raise MixedOwnerError(f"owners differ: {a.owner} vs {b.owner}")
    ka = proposal_key(a.partner, a.w)
    kb = proposal_key(b.partner, b.w)
    if ka > kb:
        return 1
    if ka < kb:
        return -1
    return 0


class DynamicGraph:
    """Mutable undirected weighted simple graph with a fixed node set.

    ``adj[u]`` maps each neighbour of ``u`` to the edge weight. The algorithm
    modules read ``adj`` directly in their inner loops; everything else should
    go through the methods.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = ()):
        if n < 0:
            raise ValueError("node count must be non-negative")
        self.n = int(n)
        self.adj: list[dict[int, float]] = [{} for _ in range(self.n)]
        self.m = 0
        for u, v, w in edges:
            self.add_edge(u, v, w)

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise NodeRangeError(f"node {u} outside [0, {self.n})")

    def add_edge(self, u: int, v: int, w: float) -> None:
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise SelfLoopError(f"self-loop at node {u}")
        w = float(w)
        if not w > 0:
            raise NonPositiveWeightError(f"weight of {{{u},{v}}} must be > 0, got {w}")
        if v in self.adj[u]:
            raise DuplicateEdgeError(f"edge {{{u},{v}}} already present")
        self.adj[u][v] = w
        self.adj[v][u] = w
        self.m += 1

    def remove_edge(self, u: int, v: int) -> float:
        self._check_node(u)
        self._check_node(v)
        try:
            w = self.adj[u].pop(v)
        except KeyError:
            raise MissingEdgeError(f"edge {{{u},{v}}} not present") from None
        del self.adj[v][u]
        self.m -= 1
        return w

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def weight_of(self, u: int, v: int) -> float:
        self._check_node(u)
        try:
            return self.adj[u][v]
        except KeyError:
            raise MissingEdgeError(f"edge {{{u},{v}}} not present") from None

    def neighbors(self, u: int) -> list[tuple[int, float]]:
        self._check_node(u)
        return list(self.adj[u].items())

    def degree(self, u: int) -> int:
        self._check_node(u)
        return len(self.adj[u])

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Yield every edge once as ``(u, v, w)`` with ``u < v``, sorted by ``u`` then ``v``."""
        for u in range(self.n):
            for v in sorted(x for x in self.adj[u] if x > u):
                yield u, v, self.adj[u][v]

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph.__new__(DynamicGraph)
        g.n = self.n
        g.adj = [dict(d) for d in self.adj]
        g.m = self.m
        return g

    def check_symmetry(self) -> bool:
        total = 0
        for u, nbrs in enumerate(self.adj):
            for v, w in nbrs.items():
                if u == v or self.adj[v].get(u) != w or not w > 0:
                    return False
            total += len(nbrs)
        return total == 2 * self.m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DynamicGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"DynamicGraph(n={self.n}, m={self.m})"


_HEADER = re.compile(r"^[#%]\s*n\s*=\s*(\d+)\s*$")


def read_edge_list(source: IO[str] | Iterable[str], n: Optional[int] = None) -> tuple[DynamicGraph, int]:
    """Parse ``u v w`` lines into a graph.

    Lines starting with ``#`` or ``%`` are comments, except a header of the
    form ``# n=<count>`` which fixes the node count (useful for trailing
    isolated nodes). Without a header or explicit ``n`` the node count is one
    more than the largest id seen.
    """
    rows: list[tuple[int, int, float, int]] = []
    header_n = None
    max_id = -1
    for lineno, line in enumerate(source, start=1):
        s = line.strip()
        if not s:
            continue
        if s[0] in "#%":
            match = _HEADER.match(s)
            if match:
                header_n = int(match.group(1))
            continue
        parts = s.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v w', got {s!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2])
        except ValueError:
            raise ParseError(f"malformed edge {s!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("node ids must be non-negative", lineno)
        rows.append((u, v, w, lineno))
        max_id = max(max_id, u, v)

    if n is None:
        n = header_n if header_n is not None else max_id + 1
    if max_id >= n:
        raise ParseError(f"node id {max_id} exceeds declared node count {n}")
    g = DynamicGraph(n)
    for u, v, w, lineno in rows:
        try:
            g.add_edge(u, v, w)
        except (DuplicateEdgeError, SelfLoopError, NonPositiveWeightError) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    return g, n


def write_edge_list(g: DynamicGraph, sink: IO[str]) -> None:
    sink.write(f"# n={g.n}\n")
    for u, v, w in g.edges():
        sink.write(f"{u} {v} {w!r}\n")
