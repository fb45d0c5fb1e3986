"""scikit-learn style wrappers around the static and dynamic matchers.

``X`` is either a :class:`~dynbsuitor.graph.DynamicGraph` or an ``(m, 3)``
array of ``u, v, w`` rows. After ``fit`` the matching is available as
``matching_`` (sorted ``(u, v)`` rows with ``u < v``) and ``weight_``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .dynamic import EdgeOp, UpdateStats, apply_batch_mixed, parse_batch
from .static import run_static
from .validation import as_graph, check_b, check_edges

__all__ = ["BSuitorMatcher", "DynamicBSuitor"]


class BSuitorMatcher(TransformerMixin, BaseEstimator):
    """Half-approximate maximum weight b-matching.

    Parameters
    ----------
    b : int or sequence of int, default=1
        Saturation goal per node; an int applies to every node.
    order : sequence of int, optional
        Processing order for the initial work queue. The result does not
        depend on it; exposed for testing.
    n_nodes : int, optional
        Node count when ``X`` is an edge array whose highest ids are isolated.
    """

    def __init__(self, b=1, order=None, n_nodes=None):
        self.b = b
        self.order = order
        self.n_nodes = n_nodes

    def fit(self, X, y=None):
        g = as_graph(X, self.n_nodes)
        self.graph_ = g.copy()
        self.b_ = check_b(self.b, g.n)
        self.state_ = run_static(self.graph_, self.b_, self.order)
        self._refresh()
        return self

    def _refresh(self):
        pairs = sorted(self.state_.matching_pairs())
        self.matching_ = np.array(pairs, dtype=np.int64).reshape(-1, 2)
        self.weight_ = self.state_.matching_weight()
        self.n_nodes_ = self.graph_.n

    def predict(self, X):
        """Boolean mask: is row ``i`` of ``X`` a matched edge?"""
        check_is_fitted(self, "state_")
        if hasattr(X, "edges") and not isinstance(X, np.ndarray):
            rows = [(u, v) for u, v, _ in X.edges()]
        else:
            pairs, _, _ = check_edges(X)
            rows = pairs.tolist()
        members = self.state_.members
        n = self.state_.n
        out = np.zeros(len(rows), dtype=bool)
        for i, (u, v) in enumerate(rows):
            if u < n and v < n and v in members[u] and u in members[v]:
                out[i] = True
        return out

    def transform(self, X):
        """Rows of ``X`` that are in the matching."""
        mask = self.predict(X)
        if hasattr(X, "edges") and not isinstance(X, np.ndarray):
            X = np.array(list(X.edges()), dtype=np.float64).reshape(-1, 3)
        return np.asarray(X, dtype=np.float64)[mask]


def _as_ops(ops) -> list[EdgeOp]:
    if isinstance(ops, str):
        return parse_batch(ops.splitlines())
    out = []
    for op in ops:
        if isinstance(op, EdgeOp):
            out.append(op)
        elif isinstance(op, str):
            out.extend(parse_batch([op]))
        else:
            kind, u, v, *rest = op
            kind = {"+": "insert", "-": "remove"}.get(kind, kind)
            out.append(EdgeOp(kind, int(u), int(v), float(rest[0]) if rest else None))
    return out


class DynamicBSuitor(BSuitorMatcher):
    """:class:`BSuitorMatcher` that can absorb edge updates without refitting.

    ``partial_fit(ops)`` takes :class:`EdgeOp` objects, ``(kind, u, v[, w])``
    tuples with kind ``"insert"``/``"+"`` or ``"remove"``/``"-"``, or lines
    of the text batch format. The first call fits on ``ops`` instead when the
    estimator has not been fitted yet and ``ops`` looks like a graph.
    """

    def fit(self, X, y=None):
        super().fit(X, y)
        self.stats_ = UpdateStats()
        self.n_updates_ = 0
        return self

    def partial_fit(self, ops, y=None, record_paths=False):
        if not hasattr(self, "state_"):
            return self.fit(ops)
        batch = _as_ops(ops)
        self.last_stats_ = apply_batch_mixed(self.graph_, self.state_, batch, record_paths=record_paths)
        s = self.stats_
        s.path_lengths.extend(self.last_stats_.path_lengths)
        s.loose_ends += self.last_stats_.loose_ends
        s.queue_ops += self.last_stats_.queue_ops
        s.max_depth = max(s.max_depth, self.last_stats_.max_depth)
        s.wall_time_ns += self.last_stats_.wall_time_ns
        s.touched |= self.last_stats_.touched
        self.n_updates_ += len(batch)
        self._refresh()
        return self
