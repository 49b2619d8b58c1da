"""Input checks for the estimator layer."""

from __future__ import annotations

import numbers

import numpy as np
from scipy import sparse


def check_edge_array(X) -> tuple[np.ndarray, int | None]:
    """Normalise graph input to an ``(m, 2)`` int64 edge array.

    Accepts an edge list (array-like of vertex pairs) or a square sparse or
    dense adjacency matrix. For adjacency input the vertex count is
    returned as well so isolated trailing vertices keep their rows.
    """
    if sparse.issparse(X):
        if X.shape[0] != X.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got shape {X.shape}")
        coo = sparse.triu(X + X.T, k=1).tocoo()
        return np.stack([coo.row, coo.col], axis=1).astype(np.int64), X.shape[0]
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D edge array, got {arr.ndim} dimension(s)")
    if arr.shape[1] != 2 and arr.shape[0] == arr.shape[1] and arr.shape[0] > 2:
        adj = np.asarray(arr != 0)
        iu, ju = np.nonzero(np.triu(adj | adj.T, k=1))
        return np.stack([iu, ju], axis=1).astype(np.int64), arr.shape[0]
    if arr.shape[1] != 2:
        raise ValueError(f"edge array must have 2 columns, got {arr.shape[1]}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        if not np.issubdtype(arr.dtype, np.number) or np.any(arr != np.round(arr)):
            raise ValueError("vertex ids must be integers")
    arr = arr.astype(np.int64)
    if arr.size and arr.min() < 0:
        raise ValueError("vertex ids must be non-negative")
    return arr, None


def check_graphlet_size(k) -> int:
    if not isinstance(k, numbers.Integral) or k not in (4, 5):
        raise ValueError(f"graphlet_size must be 4 or 5, got {k!r}")
    return int(k)


def check_threads(n) -> int:
    if n is None:
        return 1
    if not isinstance(n, numbers.Integral) or n < 1:
        raise ValueError(f"n_threads must be a positive integer, got {n!r}")
    return int(n)
