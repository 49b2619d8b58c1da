"""Vertex orbits 0-14 and edge orbits E0-E11 of graphlets with up to 4 vertices.

Column ``j`` of a vertex table counts the graphlet copies (not necessarily
induced) in which the vertex occupies orbit ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba as nb
import numpy as np

from .enumerators import LocalCounts4
from .graph import Graph, edge_id
from .patterns import N_EDGE_ORBITS

# Edge orbits whose value depends on the direction of the edge.
ASYMMETRIC_EDGE_ORBITS = (0, 2, 4, 6, 8, 9)
SYMMETRIC_EDGE_ORBITS = (1, 3, 5, 7, 10, 11)


@nb.njit(cache=True, nogil=True)
def _voc4_kernel(g, tri_v, tri_e, tv, te, c4_v, k4_v, out):
    n = g.n
    deg = g.deg
    for u in range(n):
        d = deg[u]
        s = 0
        for p in range(g.indptr[u], g.indptr[u + 1]):
            s += deg[g.indices[p]] - 1
        out[u, 0] = d
        out[u, 1] = s
        out[u, 2] = d * (d - 1) // 2
        out[u, 3] = tv[u]
        out[u, 7] = d * (d - 1) * (d - 2) // 6
        out[u, 8] = c4_v[u]
        out[u, 11] = tv[u] * (d - 2)
        out[u, 14] = k4_v[u]
    for u in range(n):
        d = deg[u]
        s4 = 0
        s6 = 0
        s9 = 0
        s10 = 0
        s13 = 0
        for p in range(g.indptr[u], g.indptr[u + 1]):
            v = g.indices[p]
            t = te[g.slot_edge[p]]
            dv1 = deg[v] - 1
            s4 += out[v, 1]
            s6 += dv1 * (dv1 - 1) // 2
            s9 += tv[v] - t
            s10 += t * (deg[v] - 2)
            s13 += t * (t - 1) // 2
        out[u, 4] = s4 - 2 * out[u, 2] - 2 * out[u, 3]
        out[u, 5] = out[u, 1] * (d - 1) - 2 * out[u, 3]
        out[u, 6] = s6
        out[u, 9] = s9
        out[u, 10] = s10
        out[u, 13] = s13
    for t in range(tri_v.shape[0]):
        a, b, c = tri_v[t, 0], tri_v[t, 1], tri_v[t, 2]
        out[a, 12] += te[tri_e[t, 1]] - 1
        out[b, 12] += te[tri_e[t, 2]] - 1
        out[c, 12] += te[tri_e[t, 0]] - 1


def count_voc4(g: Graph, lc: LocalCounts4) -> np.ndarray:
    """Per-vertex counts for orbits 0-14, shape ``(n, 15)``."""
    out = np.zeros((g.n, 15), dtype=np.int64)
    _voc4_kernel(
        g.arrays, lc.tri_vertices, lc.tri_edges, lc.tri_vertex, lc.tri_edge,
        lc.c4_vertex, lc.k4_vertex, out,
    )
    return out


@dataclass(frozen=True, eq=False)
class EdgeOrbitTable:
    """Edge orbit counts: ``forward[e, k]`` is E_k<eu, ev>, ``backward[e, k]`` is E_k<ev, eu>.

    Symmetric orbits hold the same value in both arrays.
    """

    forward: np.ndarray
    backward: np.ndarray

    def directed(self, g: Graph, k: int) -> np.ndarray:
        """E_k per adjacency slot: entry ``p`` is E_k<u, indices[p]> for the slot owner ``u``."""
        out = np.empty(2 * g.m, dtype=np.int64)
        out[g.edge_slots[:, 0]] = self.forward[:, k]
        out[g.edge_slots[:, 1]] = self.backward[:, k]
        return out

    def value(self, g: Graph, u: int, v: int, k: int) -> int:
        e = edge_id(g, u, v)
        if e < 0:
            raise KeyError((u, v))
        return int(self.forward[e, k] if u == g.eu[e] else self.backward[e, k])


@nb.njit(cache=True, nogil=True)
def _edge_side(g, u, v, e, lam1_u, tv_u, te, ptr, third, other_edge, fwd_row):
    d = g.deg[u]
    t = te[e]
    fwd_row[0] = d - 1
    fwd_row[2] = lam1_u - (g.deg[v] - 1) - t
    fwd_row[4] = (d - 1) * (d - 2) // 2
    fwd_row[6] = tv_u - t
    fwd_row[8] = t * (d - 2)
    s9 = 0
    for pos in range(ptr[e], ptr[e + 1]):
        s9 += te[other_edge[pos]] - 1
    fwd_row[9] = s9


@nb.njit(cache=True, nogil=True)
def _edge_orbit_kernel(g, v4, tv, te, c4_e, k4_e, ptr, third, low, high, fwd, bwd):
    for e in range(g.m):
        u = g.eu[e]
        v = g.ev[e]
        t = te[e]
        _edge_side(g, u, v, e, v4[u, 1], tv[u], te, ptr, third, low, fwd[e])
        _edge_side(g, v, u, e, v4[v, 1], tv[v], te, ptr, third, high, bwd[e])
        s7 = 0
        for pos in range(ptr[e], ptr[e + 1]):
            s7 += g.deg[third[pos]] - 2
        sym = (
            t,
            (g.deg[u] - 1) * (g.deg[v] - 1) - t,
            c4_e[e],
            s7,
            t * (t - 1) // 2,
            k4_e[e],
        )
        for i in range(6):
            k = (1, 3, 5, 7, 10, 11)[i]
            fwd[e, k] = sym[i]
            bwd[e, k] = sym[i]


def count_edge_orbits4(g: Graph, lc: LocalCounts4, v4: np.ndarray) -> EdgeOrbitTable:
    fwd = np.zeros((g.m, N_EDGE_ORBITS), dtype=np.int64)
    bwd = np.zeros((g.m, N_EDGE_ORBITS), dtype=np.int64)
    _edge_orbit_kernel(
        g.arrays, v4, lc.tri_vertex, lc.tri_edge, lc.c4_edge, lc.k4_edge,
        lc.edge_tri_ptr, lc.edge_tri_third, lc.edge_tri_low, lc.edge_tri_high, fwd, bwd,
    )
    return EdgeOrbitTable(fwd, bwd)


EDGE_DUMP_HEADER = (
    "u v E0uv E0vu E1 E2uv E2vu E3 E4uv E4vu E5 E6uv E6vu E7 E8uv E8vu E9uv E9vu E10 E11"
)


def edge_dump_rows(g: Graph, table: EdgeOrbitTable) -> np.ndarray:
    """Rows in dump column order, one per edge, with original vertex labels."""
    cols = [g.labels[g.eu], g.labels[g.ev]]
    for k in range(N_EDGE_ORBITS):
        cols.append(table.forward[:, k])
        if k in ASYMMETRIC_EDGE_ORBITS:
            cols.append(table.backward[:, k])
    return np.stack(cols, axis=1)
