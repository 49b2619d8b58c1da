"""Conversion between non-induced and induced orbit counts.

``noninduced[v] = A @ induced[v]`` where ``A[i, j]`` is the number of
non-induced copies of orbit ``i`` at a vertex of orbit ``j`` inside one
induced copy of orbit ``j``'s graphlet. ``A`` is built by running the
exhaustive counter on each graphlet, and is unit upper-triangular because
orbit ids grow with graphlet size and edge count.
"""

from __future__ import annotations

from functools import lru_cache

import numba as nb
import numpy as np

from .graph import build_graph
from .oracle import brute_force_voc
from .patterns import N_ORBITS, ORBIT_BLOCKS, pattern_of_orbit


def build_transform_matrix(lo: int = 0, hi: int = N_ORBITS) -> np.ndarray:
    """Block of ``A`` for orbits ``lo..hi-1``."""
    size = hi - lo
    A = np.zeros((size, size), dtype=np.int64)
    for j in range(lo, hi):
        p = pattern_of_orbit(j)
        g = build_graph(p.edges, n_vertices=p.n_vertices)
        noninduced, _ = brute_force_voc(g)
        A[:, j - lo] = noninduced[p.representative(j), lo:hi]
    return A


@lru_cache(maxsize=None)
def _matrices():
    A = np.zeros((N_ORBITS, N_ORBITS), dtype=np.int64)
    for lo, hi in ORBIT_BLOCKS.values():
        A[lo:hi, lo:hi] = build_transform_matrix(lo, hi)
    Ainv = invert_unit_triangular(A)
    A.setflags(write=False)
    Ainv.setflags(write=False)
    return A, Ainv


def transform_matrix() -> np.ndarray:
    """Full 73x73 induced-to-non-induced matrix (read-only)."""
    return _matrices()[0]


def inverse_transform_matrix() -> np.ndarray:
    """Full 73x73 non-induced-to-induced matrix (read-only)."""
    return _matrices()[1]


def invert_unit_triangular(A: np.ndarray) -> np.ndarray:
    """Exact integer inverse of a unit upper-triangular matrix."""
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n) or np.any(np.diag(A) != 1) or np.any(np.tril(A, -1)):
        raise ValueError("matrix is not unit upper-triangular")
    rows = [[int(x) for x in row] for row in A]
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n - 1, -1, -1):
        for k in range(i + 1, n):
            a = rows[i][k]
            if a:
                for j in range(k, n):
                    inv[i][j] -= a * inv[k][j]
    return np.array(inv, dtype=np.int64).reshape(n, n)


@nb.njit(cache=True, nogil=True)
def _apply_sparse(table, col_ptr, col_rows, col_vals, out):
    # out[v] = M @ table[v], visiting only the nonzero counts of each row
    for v in range(table.shape[0]):
        for j in range(table.shape[1]):
            c = table[v, j]
            if c == 0:
                continue
            for k in range(col_ptr[j], col_ptr[j + 1]):
                out[v, col_rows[k]] += col_vals[k] * c


def _apply(table: np.ndarray, M: np.ndarray) -> np.ndarray:
    table = np.ascontiguousarray(table, dtype=np.int64)
    width = table.shape[1]
    M = M[:width, :width]
    cols, rows = np.nonzero(M.T)
    col_ptr = np.zeros(width + 1, dtype=np.int64)
    np.cumsum(np.bincount(cols, minlength=width), out=col_ptr[1:])
    out = np.zeros_like(table)
    _apply_sparse(table, col_ptr, rows.astype(np.int64), M[rows, cols].astype(np.int64), out)
    return out


def to_induced(noninduced: np.ndarray, Ainv: np.ndarray | None = None) -> np.ndarray:
    """Induced counts from a non-induced table of 15 or 73 columns.

    A negative result means the input was not a valid non-induced table
    and raises ``ValueError``.
    """
    if Ainv is None:
        Ainv = inverse_transform_matrix()
    out = _apply(noninduced, Ainv)
    if out.size and out.min() < 0:
        v, j = np.argwhere(out < 0)[0]
        raise ValueError(f"negative induced count at vertex {v}, orbit {j}")
    return out


def to_noninduced(induced: np.ndarray, A: np.ndarray | None = None) -> np.ndarray:
    if A is None:
        A = transform_matrix()
    return _apply(induced, A)


def format_matrix(M: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in M) + "\n"
