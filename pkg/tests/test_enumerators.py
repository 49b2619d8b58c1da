import itertools

import numpy as np
from hypothesis import given, settings

from _corpus import named, small_graphs
from graphorbits.enumerators import (
    count_four_cycles,
    enumerate_triangles,
    for_each_diamond,
    for_each_directed_three_path,
    for_each_triangle,
    for_each_wedge,
    global_fundamental_counts,
    local_counts,
)
from graphorbits.graph import build_oriented, has_edge
from graphorbits.oracle import brute_force_voc


def _collect(visit, *args):
    seen = []
    visit(*args, lambda *item: seen.append(item))
    return seen


def _bipyramids_by_definition(g, og):
    out = [set(og.out_neighbors(v).tolist()) for v in range(g.n)]
    total = 0
    for u in range(g.n):
        for v in out[u]:
            for w in out[v] & out[u]:
                common = out[u] & out[v] & out[w]
                total += len(common) * (len(common) - 1) // 2
    return total


def test_k5_fundamental_counts():
    g = named("K5")
    fc = global_fundamental_counts(g, build_oriented(g))
    assert fc.wedges == 5 * 6
    assert fc.diamonds == 10 * 3
    assert fc.directed_three_paths == 5  # one per 4-subset, along the total order
    assert fc.directed_bipyramids == 1


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=12))
def test_fundamental_counts_match_python_visitors(g):
    og = build_oriented(g)
    lc = local_counts(g, og)
    fc = global_fundamental_counts(g, og)
    assert fc == global_fundamental_counts(g, og, lc)
    assert fc.wedges == len(_collect(for_each_wedge, g))
    assert fc.diamonds == len(_collect(for_each_diamond, g, lc))
    assert fc.directed_three_paths == len(_collect(for_each_directed_three_path, og))
    assert fc.directed_bipyramids == _bipyramids_by_definition(g, og)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=12))
def test_triangles_are_listed_once_in_degree_order(g):
    og = build_oriented(g)
    tri_v, tri_e, tv, te, roles, ptr, third, low, high = enumerate_triangles(g, og)
    listed = {tuple(sorted(t)) for t in tri_v.tolist()}
    brute = {t for t in itertools.combinations(range(g.n), 3)
             if all(has_edge(g, a, b) for a, b in itertools.combinations(t, 2))}
    assert listed == brute and len(listed) == len(tri_v)
    assert sorted(map(tuple, tri_v.tolist())) == sorted(_collect(for_each_triangle, g, og))
    for a, b, c in tri_v:
        assert og.rank[a] < og.rank[b] < og.rank[c]
    np.testing.assert_array_equal(roles.sum(axis=1), tv)
    # per-edge lists: the third vertex closes a triangle through both side edges
    for e in range(g.m):
        for pos in range(ptr[e], ptr[e + 1]):
            x = third[pos]
            assert {g.eu[low[pos]], g.ev[low[pos]]} == {g.eu[e], x}
            assert {g.eu[high[pos]], g.ev[high[pos]]} == {g.ev[e], x}
        assert ptr[e + 1] - ptr[e] == te[e]


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=11))
def test_local_counts_match_oracle_columns(g):
    og = build_oriented(g)
    lc = local_counts(g, og)
    non, _ = brute_force_voc(g)
    np.testing.assert_array_equal(lc.tri_vertex, non[:, 3])
    np.testing.assert_array_equal(lc.c4_vertex, non[:, 8])
    np.testing.assert_array_equal(lc.k4_vertex, non[:, 14])
    assert lc.n_triangles == non[:, 3].sum() // 3


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=11))
def test_four_cycles_per_edge(g):
    og = build_oriented(g)
    _, c4_e = count_four_cycles(g, og)
    for e in range(g.m):
        u, v = int(g.eu[e]), int(g.ev[e])
        expected = sum(
            1
            for a in g.neighbors(v) if a != u
            for b in g.neighbors(u) if b not in (v, a) and has_edge(g, int(a), int(b))
        )
        assert c4_e[e] == expected
