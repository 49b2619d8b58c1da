import numpy as np
import pytest
from hypothesis import given, settings

from _corpus import named, small_graphs
from graphorbits.oracle import (
    MAX_ORACLE_VERTICES,
    brute_force_edge_orbits,
    brute_force_voc,
    count_injective_matches,
    count_pattern_copies,
    random_graph,
    vertex_tables,
)
from graphorbits.patterns import load_catalog
from graphorbits.transform import transform_matrix


def test_copy_counts_on_cliques():
    k5 = named("K5")
    triangle, four_cycle, five_cycle = (load_catalog()[i] for i in (2, 5, 15))
    assert count_pattern_copies(k5, triangle) == 10
    assert count_pattern_copies(k5, four_cycle) == 15
    assert count_pattern_copies(k5, five_cycle) == 12
    assert count_pattern_copies(k5, five_cycle, induced=True) == 0
    assert count_pattern_copies(named("C5"), five_cycle, induced=True) == 1


def test_injective_matches_at_cycle_vertices():
    five_cycle = load_catalog()[15]
    # each vertex of C5 hosts pattern vertex 0 in both directions around the ring
    assert count_injective_matches(named("C5"), five_cycle, 0).tolist() == [2] * 5


def test_degree_and_triangle_columns():
    g = random_graph(9, 0.5, 4)
    non, ind = brute_force_voc(g)
    np.testing.assert_array_equal(non[:, 0], g.degree)
    np.testing.assert_array_equal(ind[:, 0], g.degree)
    adj = np.zeros((g.n, g.n), dtype=np.int64)
    adj[g.eu, g.ev] = adj[g.ev, g.eu] = 1
    np.testing.assert_array_equal(non[:, 3], np.diag(adj @ adj @ adj) // 2)


def test_star_counts():
    non, ind = brute_force_voc(named("star4"))
    assert ind[0, 7] == 1 and ind[0, 2] == 3
    assert ind[1:, 6].tolist() == [1, 1, 1]
    assert ind[1:, 1].tolist() == [2, 2, 2]


def test_tables_are_superset_sums():
    induced, noninduced = vertex_tables(3)
    full = (1 << 3) - 1
    # the triangle contains three wedges, one centred at each vertex
    assert noninduced[full, 0, 2] == 1
    assert noninduced[full, 0, 1] == 2
    assert induced[full, 0, 1] == 0


def test_edge_orbits_on_triangle_and_path():
    k3 = brute_force_edge_orbits(named("K3"))
    assert k3[0, 1, 1] == 1 and k3[1, 0, 1] == 1
    p5 = brute_force_edge_orbits(named("P5"))
    # E0: wedge edge from centre to end
    assert p5[1, 0, 0] == 1 and p5[0, 1, 0] == 0


def test_oracle_rejects_large_graphs():
    with pytest.raises(ValueError):
        brute_force_voc(random_graph(MAX_ORACLE_VERTICES + 1, 0.1, 0))


def test_random_graph_is_seeded():
    a, b = random_graph(12, 0.4, 99), random_graph(12, 0.4, 99)
    assert a == b
    with pytest.raises(ValueError):
        random_graph(5, 1.5, 0)


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=9))
def test_noninduced_is_transform_of_induced(g):
    non, ind = brute_force_voc(g)
    np.testing.assert_array_equal(non, ind @ transform_matrix().T)


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=9))
def test_edge_orbit_tables_respect_symmetry(g):
    edges = brute_force_edge_orbits(g)
    for j in (1, 3, 5, 7, 10, 11):
        np.testing.assert_array_equal(edges[:, :, j], edges[:, :, j].T)
    nonadjacent = np.ones((g.n, g.n), dtype=bool)
    nonadjacent[g.eu, g.ev] = nonadjacent[g.ev, g.eu] = False
    assert not edges[nonadjacent].any()
