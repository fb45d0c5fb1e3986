"""Input checks for the estimator facade, built on scikit-learn's validators."""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.utils import check_array

from .graph import DynamicGraph
from .suitor import BFunction

__all__ = ["check_edges", "check_b", "as_graph"]


def check_edges(X, n_nodes=None):
    """Validate an ``(m, 3)`` array of ``u, v, w`` rows.

    Returns ``(pairs, weights, n)`` with integer endpoints. Endpoints must be
    non-negative whole numbers and weights strictly positive and finite.
    """
    X = check_array(X, dtype=np.float64, ensure_min_samples=0, ensure_all_finite=True)
    if X.shape[1] != 3:
        raise ValueError(f"edge array needs 3 columns (u, v, w), got {X.shape[1]}")
    ends = X[:, :2]
    if np.any(ends < 0) or np.any(ends != np.floor(ends)):
        raise ValueError("edge endpoints must be non-negative integers")
    pairs = ends.astype(np.int64)
    weights = X[:, 2]
    if np.any(weights <= 0):
        raise ValueError("edge weights must be > 0")
    n = int(pairs.max()) + 1 if pairs.size else 0
    if n_nodes is not None:
        if n_nodes < n:
            raise ValueError(f"n_nodes={n_nodes} but edges mention node {n - 1}")
        n = int(n_nodes)
    return pairs, weights, n


def as_graph(X, n_nodes=None) -> DynamicGraph:
    """Accept a :class:`DynamicGraph` as-is or build one from an edge array."""
    if isinstance(X, DynamicGraph):
        if n_nodes is not None and n_nodes != X.n:
            raise ValueError(f"n_nodes={n_nodes} but the graph has {X.n} nodes")
        return X
    pairs, weights, n = check_edges(X, n_nodes)
    return DynamicGraph(n, zip(pairs[:, 0].tolist(), pairs[:, 1].tolist(), weights.tolist()))


def check_b(b, n: int) -> BFunction:
    """An integer broadcasts to every node; a sequence must have one entry per node."""
    if isinstance(b, numbers.Integral):
        if b < 1:
            raise ValueError("b must be >= 1")
        return BFunction.constant(n, int(b))
    arr = check_array(np.asarray(b).reshape(1, -1), dtype=None, ensure_min_features=0).ravel()
    if arr.shape[0] != n:
        raise ValueError(f"b has {arr.shape[0]} entries for {n} nodes")
    if not np.issubdtype(arr.dtype, np.integer) and np.any(arr != np.floor(arr)):
        raise ValueError("b values must be integers")
    return BFunction(arr.astype(np.int64).tolist())
