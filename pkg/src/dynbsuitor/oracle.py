"""Independent ground truth for tests: exhaustive MWBM, greedy b-matching, equivalence checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import TooLargeError
from .graph import DynamicGraph, Edge
from .static import run_static
from .suitor import MatchingState

__all__ = [
    "ExactResult",
    "EXACT_EDGE_BUDGET",
    "exact_mwbm",
    "greedy_bmatching",
    "check_half_approx",
    "check_static_equivalence",
]

EXACT_EDGE_BUDGET = 24


@dataclass(frozen=True)
class ExactResult:
    weight: Fraction
    witness: frozenset[Edge]


def _exact_ints(weights: Sequence[float]) -> tuple[list[int], int]:
    """Scale binary floats to integers sharing one power-of-two denominator."""
    ratios = [Fraction(w) for w in weights]
    denom = max((r.denominator for r in ratios), default=1)
    return [int(r * denom) for r in ratios], denom


def exact_mwbm(g: DynamicGraph, b: Sequence[int]) -> ExactResult:
    """Maximum weight b-matching by depth-first include/exclude search.

    Edges are branched heaviest first; a branch is cut when its weight plus
    every remaining edge cannot beat the incumbent. Arithmetic is exact.
    """
    edges = sorted(g.edges(), key=lambda e: e[2], reverse=True)
    m = len(edges)
    if m > EXACT_EDGE_BUDGET:
        raise TooLargeError(f"{m} edges exceed the exhaustive budget of {EXACT_EDGE_BUDGET}")
    ints, denom = _exact_ints([e[2] for e in edges])
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ints[i]

    cap = list(b)
    chosen: list[int] = []
    best = [0, []]

    def search(i: int, total: int) -> None:
        if total > best[0]:
            best[0] = total
            best[1] = list(chosen)
        if i == m or total + suffix[i] <= best[0]:
            return
        u, v, _ = edges[i]
        if cap[u] and cap[v]:
            cap[u] -= 1
            cap[v] -= 1
            chosen.append(i)
            search(i + 1, total + ints[i])
            chosen.pop()
            cap[u] += 1
            cap[v] += 1
        search(i + 1, total)

    search(0, 0)
    witness = frozenset(Edge(*edges[i]) for i in best[1])
    return ExactResult(Fraction(best[0], denom), witness)


def greedy_bmatching(g: DynamicGraph, b: Sequence[int]) -> set[tuple[int, int]]:
    """Scan edges heaviest first, ties by ``(min id, max id)``, keeping each one both ends have room for.

    That global order agrees with every node's local proposal order, so the
    result is the unique locally dominant b-matching.
    """
    cap = list(b)
    out = set()
    for u, v, w in sorted(g.edges(), key=lambda e: (-e[2], e[0], e[1])):
        if cap[u] and cap[v]:
            cap[u] -= 1
            cap[v] -= 1
            out.add((u, v))
    return out


def exact_weight(edges) -> Fraction:
    return sum((Fraction(e.w) for e in edges), Fraction(0))


def check_half_approx(g: DynamicGraph, b: Sequence[int]) -> bool:
    opt = exact_mwbm(g, b).weight
    got = exact_weight(run_static(g, b).matching_edges())
    return 2 * got >= opt


def check_static_equivalence(g_final: DynamicGraph, b: Sequence[int], state: MatchingState) -> bool:
    """Queue-level equality between ``state`` and a fresh static run on ``g_final``."""
    ref = run_static(g_final, b)
    if state.matching_pairs() != ref.matching_pairs():
        return False
    return state.same_queues(ref) and state.check_s_invariant(g_final)
