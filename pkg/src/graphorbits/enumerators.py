"""Triangles, 4-cycles, 4-cliques and the fundamental pattern enumerations.

Compiled kernels take the ``GraphArrays``/``OrientedArrays`` bundles. The
``for_each_*`` visitors run in plain Python and are meant for small graphs
and tests; the counting code inlines the same loops in compiled form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba as nb
import numpy as np

from .graph import Graph, OrientedGraph, find_edge, rank_sorted_adjacency


@dataclass(frozen=True, eq=False)
class LocalCounts4:
    """Triangle, 4-cycle and 4-clique incidences.

    Triangle ``t`` has vertices ``tri_vertices[t] = (a, b, c)`` with
    ``a -> b -> c`` in degree order and edges ``tri_edges[t] = (ab, bc, ac)``.
    The triangles on edge ``e`` are entries ``edge_tri_ptr[e]:edge_tri_ptr[e+1]``
    of ``edge_tri_third`` (third vertex), ``edge_tri_low`` (edge from
    ``eu[e]`` to the third vertex) and ``edge_tri_high`` (edge from ``ev[e]``).
    ``ranked_indices``/``ranked_slot`` come from ``rank_sorted_adjacency``.
    """

    tri_vertices: np.ndarray
    tri_edges: np.ndarray
    tri_vertex: np.ndarray
    tri_edge: np.ndarray
    tri_roles: np.ndarray
    edge_tri_ptr: np.ndarray
    edge_tri_third: np.ndarray
    edge_tri_low: np.ndarray
    edge_tri_high: np.ndarray
    c4_vertex: np.ndarray
    c4_edge: np.ndarray
    k4_vertex: np.ndarray
    k4_edge: np.ndarray
    k4_triangle: np.ndarray
    ranked_indices: np.ndarray
    ranked_slot: np.ndarray

    @property
    def n_triangles(self) -> int:
        return len(self.tri_vertices)

    def edge_triangles(self, e: int) -> np.ndarray:
        return self.edge_tri_third[self.edge_tri_ptr[e] : self.edge_tri_ptr[e + 1]]


@dataclass(frozen=True)
class FundamentalCounts:
    wedges: int
    diamonds: int
    directed_three_paths: int
    directed_bipyramids: int


@nb.njit(cache=True, nogil=True)
def _triangle_pass(og, n, fill, tri_v, tri_e):
    mark = np.full(n, -1, dtype=np.int64)
    count = 0
    for u in range(n):
        lo, hi = og.out_indptr[u], og.out_indptr[u + 1]
        for p in range(lo, hi):
            mark[og.out_indices[p]] = og.out_edge[p]
        for p in range(lo, hi):
            v = og.out_indices[p]
            for q in range(og.out_indptr[v], og.out_indptr[v + 1]):
                w = og.out_indices[q]
                if mark[w] >= 0:
                    if fill:
                        tri_v[count, 0] = u
                        tri_v[count, 1] = v
                        tri_v[count, 2] = w
                        tri_e[count, 0] = og.out_edge[p]
                        tri_e[count, 1] = og.out_edge[q]
                        tri_e[count, 2] = mark[w]
                    count += 1
        for p in range(lo, hi):
            mark[og.out_indices[p]] = -1
    return count


@nb.njit(cache=True, nogil=True)
def _fill_edge_lists(g, tri_v, tri_e, ptr, third, low, high):
    cursor = ptr[:-1].copy()
    for t in range(tri_v.shape[0]):
        a, b, c = tri_v[t, 0], tri_v[t, 1], tri_v[t, 2]
        ab, bc, ac = tri_e[t, 0], tri_e[t, 1], tri_e[t, 2]
        # (edge, opposite vertex, edge to the first endpoint's side, other side)
        for k in range(3):
            if k == 0:
                e, x, ex_a, ex_b = ab, c, ac, bc
                first = a
            elif k == 1:
                e, x, ex_a, ex_b = bc, a, ab, ac
                first = b
            else:
                e, x, ex_a, ex_b = ac, b, ab, bc
                first = a
            pos = cursor[e]
            cursor[e] += 1
            third[pos] = x
            if g.eu[e] == first:
                low[pos] = ex_a
                high[pos] = ex_b
            else:
                low[pos] = ex_b
                high[pos] = ex_a


def enumerate_triangles(g: Graph, og: OrientedGraph):
    """All triangles once each, with vertex, edge and role incidence counts.

    Returns ``(tri_vertices, tri_edges, T(v), T(e), roles, edge lists...)``;
    ``roles[v]`` counts triangles where ``v`` is the lowest, middle and
    highest vertex in degree order.
    """
    n = g.n
    dummy = np.zeros((0, 3), dtype=np.int64)
    count = _triangle_pass(og.arrays, n, False, dummy, dummy)
    tri_v = np.zeros((count, 3), dtype=np.int64)
    tri_e = np.zeros((count, 3), dtype=np.int64)
    _triangle_pass(og.arrays, n, True, tri_v, tri_e)
    roles = np.stack([np.bincount(tri_v[:, k], minlength=n) for k in range(3)], axis=1).astype(np.int64)
    tri_vertex = roles.sum(axis=1)
    tri_edge = np.bincount(tri_e.ravel(), minlength=g.m).astype(np.int64)
    ptr = np.zeros(g.m + 1, dtype=np.int64)
    np.cumsum(tri_edge, out=ptr[1:])
    third = np.zeros(3 * count, dtype=np.int64)
    low = np.zeros(3 * count, dtype=np.int64)
    high = np.zeros(3 * count, dtype=np.int64)
    _fill_edge_lists(g.arrays, tri_v, tri_e, ptr, third, low, high)
    return tri_v, tri_e, tri_vertex, tri_edge, roles, ptr, third, low, high


@nb.njit(cache=True, nogil=True)
def _four_cycle_kernel(g, rank, r_idx, r_slot, c4_v, c4_e):
    # u is the top-ranked vertex of the cycle, w the opposite one; lists in
    # ``r_idx`` are rank-sorted so each scan stops at rank(u)
    n = g.n
    cnt = np.zeros(n, dtype=np.int64)
    touched = np.empty(n, dtype=np.int64)
    for u in range(n):
        ru = rank[u]
        nt = 0
        lo = g.indptr[u]
        hi = lo
        while hi < g.indptr[u + 1] and rank[r_idx[hi]] < ru:
            hi += 1
        for p in range(lo, hi):
            v = r_idx[p]
            for q in range(g.indptr[v], g.indptr[v + 1]):
                w = r_idx[q]
                if rank[w] >= ru:
                    break
                if cnt[w] == 0:
                    touched[nt] = w
                    nt += 1
                cnt[w] += 1
        heavy = 0
        for i in range(nt):
            w = touched[i]
            if cnt[w] >= 2:
                pairs = cnt[w] * (cnt[w] - 1) // 2
                c4_v[u] += pairs
                c4_v[w] += pairs
                heavy += 1
        for p in range(lo, hi if heavy else lo):
            v = r_idx[p]
            for q in range(g.indptr[v], g.indptr[v + 1]):
                w = r_idx[q]
                if rank[w] >= ru:
                    break
                others = cnt[w] - 1
                c4_v[v] += others
                c4_e[g.slot_edge[r_slot[p]]] += others
                c4_e[g.slot_edge[r_slot[q]]] += others
        for i in range(nt):
            cnt[touched[i]] = 0


def count_four_cycles(g: Graph, og: OrientedGraph, ranked=None):
    """4-cycles through every vertex and every edge.

    ``ranked`` is the output of ``rank_sorted_adjacency``, computed if absent.
    """
    if ranked is None:
        ranked = rank_sorted_adjacency(g, og)
    c4_v = np.zeros(g.n, dtype=np.int64)
    c4_e = np.zeros(g.m, dtype=np.int64)
    _four_cycle_kernel(g.arrays, og.rank, ranked[0], ranked[1], c4_v, c4_e)
    return c4_v, c4_e


@nb.njit(cache=True, nogil=True)
def _four_clique_kernel(g, tri_v, tri_e, tri_edge, ptr, third, k4_t):
    for t in range(tri_v.shape[0]):
        # scan the triangle list of the least loaded edge, test the far vertex
        best = 0
        for k in range(1, 3):
            if tri_edge[tri_e[t, k]] < tri_edge[tri_e[t, best]]:
                best = k
        if best == 0:
            far = tri_v[t, 2]
        elif best == 1:
            far = tri_v[t, 0]
        else:
            far = tri_v[t, 1]
        e = tri_e[t, best]
        c = 0
        for pos in range(ptr[e], ptr[e + 1]):
            x = third[pos]
            if x != far and find_edge(g, x, far) >= 0:
                c += 1
        k4_t[t] = c


def count_four_cliques(g: Graph, tri_v, tri_e, tri_edge, ptr, third):
    """4-cliques containing each vertex, edge and triangle."""
    k4_t = np.zeros(len(tri_v), dtype=np.int64)
    _four_clique_kernel(g.arrays, tri_v, tri_e, tri_edge, ptr, third, k4_t)
    k4_v = np.zeros(g.n, dtype=np.int64)
    k4_e = np.zeros(g.m, dtype=np.int64)
    for k in range(3):
        np.add.at(k4_v, tri_v[:, k], k4_t)
        np.add.at(k4_e, tri_e[:, k], k4_t)
    return k4_v // 3, k4_e // 2, k4_t


def local_counts(g: Graph, og: OrientedGraph) -> LocalCounts4:
    tri_v, tri_e, tv, te, roles, ptr, third, low, high = enumerate_triangles(g, og)
    ranked = rank_sorted_adjacency(g, og)
    c4_v, c4_e = count_four_cycles(g, og, ranked)
    k4_v, k4_e, k4_t = count_four_cliques(g, tri_v, tri_e, te, ptr, third)
    return LocalCounts4(
        tri_v, tri_e, tv, te, roles, ptr, third, low, high, c4_v, c4_e, k4_v, k4_e, k4_t,
        ranked[0], ranked[1],
    )


# Fundamental pattern enumeration. Each kernel really visits every item and
# folds its vertex ids into a checksum so the loops cannot be collapsed.


@nb.njit(cache=True, nogil=True)
def _visit_wedges(g):
    count = 0
    check = 0
    for v in range(g.n):
        lo, hi = g.indptr[v], g.indptr[v + 1]
        for a in range(lo, hi):
            for b in range(a + 1, hi):
                count += 1
                check ^= g.indices[a] * 31 + g.indices[b]
    return count, check


@nb.njit(cache=True, nogil=True)
def _visit_diamonds(m, ptr, third):
    count = 0
    check = 0
    for e in range(m):
        for a in range(ptr[e], ptr[e + 1]):
            for b in range(a + 1, ptr[e + 1]):
                count += 1
                check ^= third[a] * 31 + third[b]
    return count, check


@nb.njit(cache=True, nogil=True)
def _visit_three_paths(og, n):
    count = 0
    check = 0
    for i in range(n):
        for p in range(og.out_indptr[i], og.out_indptr[i + 1]):
            j = og.out_indices[p]
            for q in range(og.out_indptr[j], og.out_indptr[j + 1]):
                k = og.out_indices[q]
                for r in range(og.out_indptr[k], og.out_indptr[k + 1]):
                    count += 1
                    check ^= og.out_indices[r] + i
    return count, check


@nb.njit(cache=True, nogil=True)
def _visit_bipyramids(og, n):
    mark_u = np.full(n, -1, dtype=np.int64)
    mark_v = np.full(n, -1, dtype=np.int64)
    common = np.empty(n, dtype=np.int64)
    count = 0
    check = 0
    for u in range(n):
        for p in range(og.out_indptr[u], og.out_indptr[u + 1]):
            mark_u[og.out_indices[p]] = u
        for p in range(og.out_indptr[u], og.out_indptr[u + 1]):
            v = og.out_indices[p]
            for q in range(og.out_indptr[v], og.out_indptr[v + 1]):
                mark_v[og.out_indices[q]] = v
            for q in range(og.out_indptr[v], og.out_indptr[v + 1]):
                w = og.out_indices[q]
                if mark_u[w] != u:
                    continue
                nc = 0
                for r in range(og.out_indptr[w], og.out_indptr[w + 1]):
                    x = og.out_indices[r]
                    if mark_u[x] == u and mark_v[x] == v:
                        common[nc] = x
                        nc += 1
                for a in range(nc):
                    for b in range(a + 1, nc):
                        count += 1
                        check ^= common[a] * 31 + common[b]
    return count, check


def global_fundamental_counts(g: Graph, og: OrientedGraph, lc: LocalCounts4 | None = None) -> FundamentalCounts:
    """Totals of wedges, diamonds, directed 3-paths and directed bipyramids.

    A directed 3-path is ``i -> j -> k -> l`` in the degree orientation. A
    directed bipyramid is a directed triangle plus an unordered pair of
    vertices that are out-neighbours of all three triangle vertices.
    """
    if lc is None:
        _, _, _, _, _, ptr, third, _, _ = enumerate_triangles(g, og)
    else:
        ptr, third = lc.edge_tri_ptr, lc.edge_tri_third
    w, _ = _visit_wedges(g.arrays)
    d, _ = _visit_diamonds(g.m, ptr, third)
    dp, _ = _visit_three_paths(og.arrays, g.n)
    dbp, _ = _visit_bipyramids(og.arrays, g.n)
    return FundamentalCounts(int(w), int(d), int(dp), int(dbp))


def for_each_wedge(g: Graph, visitor) -> None:
    """Call ``visitor(center, end1, end2)`` once per wedge."""
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                visitor(v, int(nbrs[i]), int(nbrs[j]))


def for_each_triangle(g: Graph, og: OrientedGraph, visitor) -> None:
    """Call ``visitor(a, b, c)`` once per triangle with ``a -> b -> c``."""
    for a in range(g.n):
        out_a = set(og.out_neighbors(a).tolist())
        for b in og.out_neighbors(a):
            for c in og.out_neighbors(b):
                if int(c) in out_a:
                    visitor(a, int(b), int(c))


def for_each_diamond(g: Graph, lc: LocalCounts4, visitor) -> None:
    """Call ``visitor(chord_end1, chord_end2, off1, off2)`` once per diamond."""
    for e in range(g.m):
        thirds = lc.edge_triangles(e)
        for i in range(len(thirds)):
            for j in range(i + 1, len(thirds)):
                visitor(int(g.eu[e]), int(g.ev[e]), int(thirds[i]), int(thirds[j]))


def for_each_directed_three_path(og: OrientedGraph, visitor) -> None:
    """Call ``visitor(i, j, k, l)`` once per directed path ``i -> j -> k -> l``."""
    for i in range(len(og.rank)):
        for j in og.out_neighbors(i):
            for k in og.out_neighbors(j):
                for l in og.out_neighbors(k):
                    visitor(i, int(j), int(k), int(l))
