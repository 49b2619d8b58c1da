"""Orbits 15-72 of the 5-vertex graphlets.

Each column is a closed-form combination of local quantities, summed over
vertices, neighbours, triangles, wedges or diamonds, minus multiples of
smaller orbits that the sum over-counts. The work is split into independent
groups that write disjoint columns and can run on separate threads.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numba as nb
import numpy as np

from .enumerators import LocalCounts4
from .graph import Graph, OrientedGraph, find_edge
from .orbit4 import EdgeOrbitTable
from .patterns import N_ORBITS

CLOSED_FORM_ORBITS = (16, 17, 23, 33, 38, 44, 47, 58)
NEIGHBOR_SUM_ORBITS = (15, 18, 19, 20, 21, 22, 24, 27, 28, 30, 31, 35, 37, 39, 40, 41, 42, 45, 55, 56, 57, 60, 67)
TRIANGLE_ORBITS = (25, 26, 29, 32, 43, 46, 48, 52, 53, 54, 59, 61, 65)
PAIR_ORBITS = (36, 49, 50, 51, 62, 63, 64)
WHEEL_ORBITS = (68, 69)
CLIQUE_ORBITS = (66, 70, 71)
FIVE_CYCLE_ORBIT = 34
FIVE_CLIQUE_ORBIT = 72


@nb.njit(inline="always")
def _c2(x):
    return x * (x - 1) // 2 if x >= 2 else 0


@nb.njit(inline="always")
def _c3(x):
    return x * (x - 1) * (x - 2) // 6 if x >= 3 else 0


@nb.njit(inline="always")
def _c4(x):
    return x * (x - 1) * (x - 2) * (x - 3) // 24 if x >= 4 else 0


@nb.njit(cache=True, nogil=True)
def _closed_form_kernel(deg, v, out):
    for u in range(deg.shape[0]):
        d = deg[u]
        out[u, 16] = v[u, 4] * (d - 1) - v[u, 10] - 2 * v[u, 8]
        out[u, 17] = _c2(v[u, 1]) - v[u, 3] - v[u, 6] - v[u, 8] - v[u, 10]
        out[u, 23] = _c4(d)
        out[u, 33] = v[u, 3] * _c2(d - 2)
        out[u, 38] = v[u, 8] * (d - 2) - v[u, 13]
        out[u, 44] = _c2(v[u, 3]) - v[u, 13]
        out[u, 47] = v[u, 12] * (d - 2) - 3 * v[u, 14]
        out[u, 58] = v[u, 14] * (d - 3)


@nb.njit(cache=True, nogil=True)
def _neighbor_sum_kernel(g, v, te, c4e, k4e, e9, out):
    deg = g.deg
    for u in range(g.n):
        d = deg[u]
        s4 = s5 = s6 = s8 = s9 = s10 = s12 = s13 = s14 = 0
        s3 = s3w = s20 = s21 = s22 = 0
        s37 = s40 = s41 = s42 = s55 = s57 = s60 = s67 = 0
        for p in range(g.indptr[u], g.indptr[u + 1]):
            x = g.indices[p]
            e = g.slot_edge[p]
            dx = deg[x]
            t = te[e]
            back = e9[g.slot_rev[p]]
            s4 += v[x, 4]
            s5 += v[x, 5]
            s6 += v[x, 6]
            s8 += v[x, 8]
            s9 += v[x, 9]
            s10 += v[x, 10]
            s12 += v[x, 12]
            s13 += v[x, 13]
            s14 += v[x, 14]
            s3 += v[x, 3]
            s3w += (dx - 1) * v[x, 3]
            s20 += _c2(dx - 1)
            s21 += dx - 1
            s22 += _c3(dx - 1)
            s37 += c4e[e] * (dx - 2)
            s40 += back * (dx - 3)
            s41 += _c2(t) * (dx - 3)
            s42 += _c2(t)
            s55 += _c3(t)
            s57 += k4e[e] * (dx - 3)
            s60 += back * (t - 1)
            s67 += k4e[e] * (t - 2)
        out[u, 15] = s4 - v[u, 5] - 2 * v[u, 11] - 2 * v[u, 8]
        out[u, 18] = s6 - 3 * v[u, 7] - v[u, 10]
        out[u, 19] = s5 - v[u, 4] - v[u, 5] - v[u, 10]
        out[u, 20] = (d - 1) * s20 - v[u, 10]
        out[u, 21] = _c2(d - 1) * s21 - 2 * v[u, 11]
        out[u, 22] = s22
        out[u, 24] = s10 - v[u, 10] - 2 * v[u, 11] - 2 * v[u, 12]
        out[u, 27] = s9 - v[u, 11] - 2 * v[u, 13]
        out[u, 28] = (d - 1) * s3 - 2 * v[u, 3] - 2 * v[u, 11] - 2 * v[u, 12]
        out[u, 30] = v[u, 3] * s21 - 2 * v[u, 3] - v[u, 10] - 2 * v[u, 13]
        out[u, 31] = s3w - 2 * v[u, 9] - v[u, 10] - 2 * v[u, 3]
        out[u, 35] = s8 - 2 * v[u, 8] - v[u, 13]
        out[u, 37] = s37 - 2 * v[u, 12]
        out[u, 39] = s13 - v[u, 13] - 2 * v[u, 12]
        out[u, 40] = s40
        out[u, 41] = s41
        out[u, 42] = (d - 3) * s42
        out[u, 45] = s12 - 2 * v[u, 13] - 3 * v[u, 14]
        out[u, 55] = s55
        out[u, 56] = s14 - 3 * v[u, 14]
        out[u, 57] = s57
        out[u, 60] = s60 - 6 * v[u, 14]
        out[u, 67] = s67


@nb.njit(cache=True, nogil=True)
def _triangle_kernel(g, v, te, c4e, k4e, e7, e9, tri_v, tri_e, out):
    deg = g.deg
    for t in range(tri_v.shape[0]):
        for r in range(3):
            # u is the vertex receiving the count; (vu, xu) its two edges,
            # vx the opposite edge
            if r == 0:
                u, a, b = tri_v[t, 0], tri_v[t, 1], tri_v[t, 2]
                ua, ub, ab = tri_e[t, 0], tri_e[t, 2], tri_e[t, 1]
            elif r == 1:
                u, a, b = tri_v[t, 1], tri_v[t, 0], tri_v[t, 2]
                ua, ub, ab = tri_e[t, 0], tri_e[t, 1], tri_e[t, 2]
            else:
                u, a, b = tri_v[t, 2], tri_v[t, 0], tri_v[t, 1]
                ua, ub, ab = tri_e[t, 2], tri_e[t, 1], tri_e[t, 0]
            da2 = deg[a] - 2
            db2 = deg[b] - 2
            out[u, 25] += da2 * db2
            out[u, 26] += (deg[u] - 2) * (da2 + db2)
            out[u, 29] += v[a, 1] + v[b, 1]
            out[u, 32] += _c2(da2) + _c2(db2)
            out[u, 43] += v[a, 3] + v[b, 3] - 2
            out[u, 46] += e7[ab]
            out[u, 48] += (te[ua] - 1) * db2 + (te[ub] - 1) * da2
            out[u, 52] += c4e[ab]
            out[u, 53] += c4e[ua] + c4e[ub]
            out[u, 54] += _c2(te[ab] - 1)
            out[u, 59] += e9[g.edge_slots[ab, 0]] + e9[g.edge_slots[ab, 1]]
            out[u, 61] += (te[ua] - 1) * (te[ub] - 1)
            out[u, 65] += k4e[ab]
    for u in range(g.n):
        out[u, 25] -= v[u, 12]
        out[u, 26] -= 2 * v[u, 13]
        out[u, 29] -= 4 * v[u, 3] + v[u, 10] + 2 * v[u, 11] + 2 * v[u, 12] + 2 * v[u, 13]
        out[u, 43] -= 2 * v[u, 12] + 2 * v[u, 13]
        out[u, 46] -= v[u, 11] + 3 * v[u, 14]
        out[u, 48] -= 6 * v[u, 14]
        out[u, 52] -= 2 * v[u, 13]
        out[u, 53] -= 2 * v[u, 13] + 2 * v[u, 12]
        out[u, 59] -= 2 * v[u, 13] + 6 * v[u, 14]
        out[u, 61] -= 3 * v[u, 14]
        out[u, 65] -= 3 * v[u, 14]


@nb.njit(inline="always")
def _far_edge(g, e, s, pos, low, high):
    # edge joining the two vertices of triangle list entry ``pos`` of ``e`` other than ``s``
    return high[pos] if g.eu[e] == s else low[pos]


@nb.njit(cache=True, nogil=True)
def _pair_kernel(g, rank, r_idx, r_slot, v, te, ptr, third, low, high, pair, out, alt, with_alt):
    """Orbits 36, 49, 50, 51 (wedge pairs) and 62, 63, 64 (diamond plus a vertex).

    Both families are functions of the pair counts W(u, x) and D(u, x), the
    wedges and the diamonds with u and x off the chord. Each unordered pair
    is handled once, from its higher-ranked end: neighbour lists in ``r_idx``
    are sorted by rank, so the scan of N(a) stops at the first vertex ranked
    at or above u. Pair terms are credited to both ends. With ``with_alt``
    the second formulas of orbits 18 and 27 go to ``alt``.

    ``pair`` is zeroed ``(n, 8)`` scratch, one row per far end x: W, the two
    tailed-triangle sums, adjacency to u, D. Its dtype only has to hold
    twice the largest per-vertex triangle count.
    """
    n = g.n
    deg = g.deg
    touched = np.empty(n, dtype=np.int64)
    # d-2 and the per-vertex pair sums of orbits 36, 50, 51, 63
    row = np.zeros((n, 8), dtype=np.int64)
    for x in range(n):
        row[x, 0] = deg[x] - 2
    # sums scattered to common neighbours: orbits 49, 62, 64
    spread = np.zeros((n, 4), dtype=np.int64)
    if with_alt:
        for x in range(n):
            alt[x, 2] = _c2(deg[x] - 1)
            alt[x, 3] = v[x, 3]
    slot_rank = np.empty(2 * g.m, dtype=np.int64)
    slot_tri = np.empty(2 * g.m, dtype=np.int64)
    for q in range(2 * g.m):
        slot_rank[q] = rank[r_idx[q]]
        slot_tri[q] = te[g.slot_edge[r_slot[q]]]
    for u in range(n):
        ru = rank[u]
        for p in range(g.indptr[u], g.indptr[u + 1]):
            pair[g.indices[p], 3] = 1
        nt = 0
        for p in range(g.indptr[u], g.indptr[u + 1]):
            a = g.indices[p]
            t_ua = te[g.slot_edge[p]]
            for q in range(g.indptr[a], g.indptr[a + 1]):
                if slot_rank[q] >= ru:
                    break
                x = r_idx[q]
                if pair[x, 0] == 0:
                    touched[nt] = x
                    nt += 1
                pair[x, 0] += 1
                pair[x, 1] += slot_tri[q]
                pair[x, 2] += t_ua
        # diamonds with u off the chord: triangle (u, a, b), x on chord a-b
        for p in range(g.indptr[u], g.indptr[u + 1]):
            a = g.indices[p]
            e = g.slot_edge[p]
            for pos in range(ptr[e], ptr[e + 1]):
                b = third[pos]
                if b < a:
                    continue
                ab = _far_edge(g, e, u, pos, low, high)
                for pos2 in range(ptr[ab], ptr[ab + 1]):
                    x = third[pos2]
                    if rank[x] < ru:
                        pair[x, 4] += 1
                        extra = pair[x, 0] - 2
                        spread[a, 2] += extra
                        spread[b, 2] += extra
        if with_alt:
            a18 = a27 = 0
            for i in range(nt):
                x = touched[i]
                w = np.int64(pair[x, 0])
                a18 += w * alt[x, 2]
                a27 += w * alt[x, 3]
                alt[x, 4] += w * alt[u, 2]
                alt[x, 5] += w * alt[u, 3]
            alt[u, 4] += a18
            alt[u, 5] += a27
        # pair terms vanish for a single wedge, which is most pairs in a
        # sparse graph; those rows are cleared at once, the rest are kept
        # for the scatter below
        cu0 = row[u, 0]
        s36 = s50 = s51 = s63 = 0
        nk = 0
        for i in range(nt):
            x = touched[i]
            w = np.int64(pair[x, 0])
            if w >= 2:
                pairs = _c2(w)
                triples = _c3(w)
                adj = w * pair[x, 3]
                d63 = np.int64(pair[x, 4]) * (w - 2)
                s36 += pairs * row[x, 0]
                s50 += triples
                s51 += (np.int64(pair[x, 1]) - adj) * (w - 1)
                s63 += d63
                row[x, 1] += pairs * cu0
                row[x, 2] += triples
                row[x, 3] += (np.int64(pair[x, 2]) - adj) * (w - 1)
                row[x, 4] += d63
            if w >= 3 or pair[x, 4]:
                touched[nk] = x
                nk += 1
            else:
                pair[x, 0] = 0
                pair[x, 1] = 0
                pair[x, 2] = 0
        row[u, 1] += s36
        row[u, 2] += s50
        row[u, 3] += s51
        row[u, 4] += s63
        for p in range(g.indptr[u], g.indptr[u + 1]):
            pair[g.indices[p], 3] = 0
        # the kept pairs {u, x} scatter to each common neighbour
        for p in range(g.indptr[u], g.indptr[u + 1] if nk else g.indptr[u]):
            a = g.indices[p]
            s49 = s62 = 0
            for q in range(g.indptr[a], g.indptr[a + 1]):
                if slot_rank[q] >= ru:
                    break
                x = r_idx[q]
                s49 += _c2(np.int64(pair[x, 0]) - 1)
                s62 += pair[x, 4]
            spread[a, 0] += s49
            spread[a, 1] += s62
        for i in range(nk):
            x = touched[i]
            for k in range(5):
                pair[x, k] = 0
    for u in range(n):
        out[u, 36] = row[u, 1] - v[u, 13]
        out[u, 49] = spread[u, 0]
        out[u, 50] = row[u, 2]
        out[u, 51] = row[u, 3] - 2 * v[u, 12]
        out[u, 62] = spread[u, 1] - v[u, 13]
        out[u, 63] = row[u, 4]
        out[u, 64] = spread[u, 2]
    if with_alt:
        for u in range(n):
            alt[u, 0] = alt[u, 4] - v[u, 10]
            alt[u, 1] = alt[u, 5] - 2 * (v[u, 13] + v[u, 9] + v[u, 3])


@nb.njit(cache=True, nogil=True)
def _wheel_kernel(g, ptr, third, low, high, out):
    """Orbits 68 and 69 (4-wheel rim and hub).

    Hub h, rim vertex u, opposite rim vertex x, and the two rim vertices
    adjacent to h, u and x.
    """
    n = g.n
    common = np.zeros(n, dtype=np.int64)
    touched = np.empty(n, dtype=np.int64)
    rim = np.zeros(n, dtype=np.int64)
    for h in range(n):
        hub_total = 0
        for p in range(g.indptr[h], g.indptr[h + 1]):
            u = g.indices[p]
            e = g.slot_edge[p]
            nt = 0
            for pos in range(ptr[e], ptr[e + 1]):
                ha = _far_edge(g, e, u, pos, low, high)
                for pos2 in range(ptr[ha], ptr[ha + 1]):
                    x = third[pos2]
                    if x == u:
                        continue
                    if common[x] == 0:
                        touched[nt] = x
                        nt += 1
                    common[x] += 1
            total = 0
            for i in range(nt):
                total += _c2(common[touched[i]])
                common[touched[i]] = 0
            rim[u] += total
            hub_total += total
        out[h, 69] = hub_total // 4
    for u in range(n):
        out[u, 68] = rim[u]


@nb.njit(cache=True, nogil=True)
def _clique_kernel(g, te, tri_v, tri_e, ptr, third, k4_t, out):
    """Orbits 66, 70, 71 from the 4-cliques around each triangle."""
    for t in range(tri_v.shape[0]):
        k = k4_t[t]
        for r in range(3):
            out[tri_v[t, r], 71] += _c2(k)
        if k == 0:
            continue
        edge_tri = te[tri_e[t, 0]] + te[tri_e[t, 1]] + te[tri_e[t, 2]] - 6
        e = tri_e[t, 0]
        far = tri_v[t, 2]
        for pos in range(ptr[e], ptr[e + 1]):
            x = third[pos]
            if x != far and _adjacent(g, x, far):
                out[x, 70] += k - 1
                out[x, 66] += edge_tri


@nb.njit(inline="always")
def _adjacent(g, a, b):
    return find_edge(g, a, b) >= 0


@nb.njit(cache=True, nogil=True)
def _five_cycle_kernel(g, og, roles, out):
    """Orbit 34.

    Every 5-cycle splits uniquely into a path ``i <- j -> k -> l`` in the
    degree orientation and a wedge ``i - w - l`` whose centre is not entered
    by both of its edges. Paths and wedges are matched per source ``i``.
    """
    n = g.n
    rank = og.rank
    wedges = np.zeros(n, dtype=np.int64)
    paths = np.zeros(n, dtype=np.int64)
    touched = np.empty(n, dtype=np.int64)
    near_i = np.full(n, -1, dtype=np.int64)
    near_j = np.full(n, -1, dtype=np.int64)
    acc = np.zeros(n, dtype=np.int64)
    for i in range(n):
        ri = rank[i]
        nt = 0
        for p in range(g.indptr[i], g.indptr[i + 1]):
            w = g.indices[p]
            near_i[w] = i
            if rank[w] < ri:
                for q in range(g.indptr[w], g.indptr[w + 1]):
                    l = g.indices[q]
                    if l == i:
                        continue
                    if wedges[l] == 0 and paths[l] == 0:
                        touched[nt] = l
                        nt += 1
                    wedges[l] += 1
            else:
                for q in range(og.out_indptr[w], og.out_indptr[w + 1]):
                    l = og.out_indices[q]
                    if wedges[l] == 0 and paths[l] == 0:
                        touched[nt] = l
                        nt += 1
                    wedges[l] += 1
        found = 0
        for p in range(g.indptr[i], g.indptr[i + 1]):
            j = g.indices[p]
            if rank[j] > ri:
                continue
            for q in range(g.indptr[j], g.indptr[j + 1]):
                near_j[g.indices[q]] = j
            for q in range(og.out_indptr[j], og.out_indptr[j + 1]):
                k = og.out_indices[q]
                if k == i:
                    continue
                k_near = 1 if near_i[k] == i else 0
                for r in range(og.out_indptr[k], og.out_indptr[k + 1]):
                    l = og.out_indices[r]
                    if l == i:
                        continue
                    c = wedges[l] - k_near - (1 if near_j[l] == j else 0)
                    acc[i] += c
                    acc[j] += c
                    acc[k] += c
                    acc[l] += c
                    found += 1
                    if wedges[l] == 0 and paths[l] == 0:
                        touched[nt] = l
                        nt += 1
                    paths[l] += 1
            for q in range(g.indptr[j], g.indptr[j + 1]):
                near_j[g.indices[q]] = -1
        for p in range(g.indptr[i], g.indptr[i + 1] if found else g.indptr[i]):
            w = g.indices[p]
            t = 0
            if rank[w] < ri:
                for q in range(g.indptr[w], g.indptr[w + 1]):
                    l = g.indices[q]
                    if l != i:
                        t += paths[l]
            else:
                for q in range(og.out_indptr[w], og.out_indptr[w + 1]):
                    t += paths[og.out_indices[q]]
            acc[w] += t
        for t in range(nt):
            wedges[touched[t]] = 0
            paths[touched[t]] = 0
    # pass two also matched paths running through the wedge centre; those
    # are a triangle at w plus one more out-neighbour of w
    for w in range(n):
        dp = og.out_indptr[w + 1] - og.out_indptr[w]
        out[w, 34] = acc[w] - (roles[w, 0] * (dp - 2) + roles[w, 1] * (dp - 1) + roles[w, 2] * dp)


@nb.njit(cache=True, nogil=True)
def _five_clique_kernel(og, n, out):
    in_u = np.full(n, -1, dtype=np.int64)
    in_v = np.full(n, -1, dtype=np.int64)
    in_w = np.full(n, -1, dtype=np.int64)
    stamp_v = 0
    stamp_w = 0
    for u in range(n):
        for p in range(og.out_indptr[u], og.out_indptr[u + 1]):
            in_u[og.out_indices[p]] = u
        for p in range(og.out_indptr[u], og.out_indptr[u + 1]):
            v = og.out_indices[p]
            stamp_v += 1
            for q in range(og.out_indptr[v], og.out_indptr[v + 1]):
                if in_u[og.out_indices[q]] == u:
                    in_v[og.out_indices[q]] = stamp_v
            for q in range(og.out_indptr[v], og.out_indptr[v + 1]):
                w = og.out_indices[q]
                if in_v[w] != stamp_v:
                    continue
                stamp_w += 1
                for r in range(og.out_indptr[w], og.out_indptr[w + 1]):
                    if in_v[og.out_indices[r]] == stamp_v:
                        in_w[og.out_indices[r]] = stamp_w
                for r in range(og.out_indptr[w], og.out_indptr[w + 1]):
                    x = og.out_indices[r]
                    if in_w[x] != stamp_w:
                        continue
                    for s in range(og.out_indptr[x], og.out_indptr[x + 1]):
                        y = og.out_indices[s]
                        if in_w[y] == stamp_w:
                            out[u, 72] += 1
                            out[v, 72] += 1
                            out[w, 72] += 1
                            out[x, 72] += 1
                            out[y, 72] += 1


@dataclass
class Orbit5Inputs:
    g: Graph
    og: OrientedGraph
    lc: LocalCounts4
    v4: np.ndarray
    e7: np.ndarray
    e9: np.ndarray

    @classmethod
    def build(cls, g, og, lc, v4, e4: EdgeOrbitTable):
        return cls(g, og, lc, v4, np.ascontiguousarray(e4.forward[:, 7]), e4.directed(g, 9))


def count_group_closed_form(inp: Orbit5Inputs, out: np.ndarray) -> None:
    _closed_form_kernel(inp.g.degree, inp.v4, out)


def count_group_neighbor_sum(inp: Orbit5Inputs, out: np.ndarray) -> None:
    lc = inp.lc
    _neighbor_sum_kernel(inp.g.arrays, inp.v4, lc.tri_edge, lc.c4_edge, lc.k4_edge, inp.e9, out)


def count_group_triangle(inp: Orbit5Inputs, out: np.ndarray) -> None:
    lc = inp.lc
    _triangle_kernel(
        inp.g.arrays, inp.v4, lc.tri_edge, lc.c4_edge, lc.k4_edge, inp.e7, inp.e9,
        lc.tri_vertices, lc.tri_edges, out,
    )


def count_group_pairs(inp: Orbit5Inputs, out: np.ndarray, alt: np.ndarray | None = None) -> None:
    """Orbits 36, 49-51 and 62-64. ``alt``, if given, must be ``(n, 6)``;
    columns 0 and 1 receive the second formulas of orbits 18 and 27."""
    lc = inp.lc
    with_alt = alt is not None
    if alt is None:
        alt = np.zeros((0, 6), dtype=np.int64)
    # narrow scratch rows keep the random accesses in cache when they fit
    small = inp.g.n < 2**31 and 2 * int(inp.v4[:, 3].max(initial=0)) < 2**31
    pair = np.zeros((inp.g.n, 8), dtype=np.int32 if small else np.int64)
    _pair_kernel(
        inp.g.arrays, inp.og.rank, lc.ranked_indices, lc.ranked_slot, inp.v4, lc.tri_edge,
        lc.edge_tri_ptr, lc.edge_tri_third, lc.edge_tri_low, lc.edge_tri_high, pair, out, alt, with_alt,
    )


def count_group_wheel(inp: Orbit5Inputs, out: np.ndarray) -> None:
    lc = inp.lc
    _wheel_kernel(inp.g.arrays, lc.edge_tri_ptr, lc.edge_tri_third, lc.edge_tri_low, lc.edge_tri_high, out)


def count_group_clique(inp: Orbit5Inputs, out: np.ndarray) -> None:
    lc = inp.lc
    _clique_kernel(
        inp.g.arrays, lc.tri_edge, lc.tri_vertices, lc.tri_edges, lc.edge_tri_ptr,
        lc.edge_tri_third, lc.k4_triangle, out,
    )


def count_five_cycle_orbit(inp: Orbit5Inputs, out: np.ndarray) -> None:
    _five_cycle_kernel(inp.g.arrays, inp.og.arrays, inp.lc.tri_roles, out)


def count_five_clique_orbit(inp: Orbit5Inputs, out: np.ndarray) -> None:
    _five_clique_kernel(inp.og.arrays, inp.g.n, out)


def _local(inp, out):
    count_group_closed_form(inp, out)
    count_group_neighbor_sum(inp, out)
    count_group_triangle(inp, out)


def _cliques(inp, out):
    count_group_wheel(inp, out)
    count_group_clique(inp, out)
    count_five_clique_orbit(inp, out)


# Scheduling units, roughly ordered from most to least expensive.
GROUPS = (
    ("pairs", count_group_pairs),
    ("five_cycle", count_five_cycle_orbit),
    ("cliques", _cliques),
    ("local", _local),
)


@dataclass
class GroupTimings:
    seconds: dict = field(default_factory=dict)


def count_all_5voc(
    g: Graph,
    og: OrientedGraph,
    lc: LocalCounts4,
    v4: np.ndarray,
    e4: EdgeOrbitTable,
    n_threads: int = 1,
    timings: GroupTimings | None = None,
) -> np.ndarray:
    """Non-induced counts for all 73 orbits, shape ``(n, 73)``, signed int64.

    Groups write disjoint columns, so the result does not depend on
    ``n_threads`` or on the order in which groups finish.
    """
    inp = Orbit5Inputs.build(g, og, lc, v4, e4)
    out = np.zeros((g.n, N_ORBITS), dtype=np.int64)
    out[:, :15] = v4

    def run(item):
        name, fn = item
        start = time.perf_counter()
        fn(inp, out)
        return name, time.perf_counter() - start

    if n_threads <= 1:
        results = [run(item) for item in GROUPS]
    else:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            results = list(pool.map(run, GROUPS))
    if timings is not None:
        timings.seconds.update(dict(results))
    if g.n and out.min() < 0:
        bad = np.argwhere(out < 0)[0]
        raise AssertionError(f"negative count for vertex {bad[0]}, orbit {bad[1]}")
    return out
