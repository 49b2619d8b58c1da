import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from graphorbits.oracle import brute_force_voc, count_injective_matches, random_graph
from graphorbits.patterns import (
    N_ORBITS,
    ORBIT_BLOCKS,
    compute_automorphisms,
    compute_num_shrinkages,
    find_pattern,
    fragments,
    load_catalog,
    orbit_sizes,
    pattern_of_orbit,
    shrinkage_terms,
)


def test_catalog_covers_every_orbit_once():
    catalog = load_catalog()
    assert len(catalog) == 30
    assert sorted(o for p in catalog for o in p.orbits) == list(range(N_ORBITS))
    assert [p.id for p in catalog] == list(range(30))


@pytest.mark.parametrize("size", [2, 3, 4, 5])
def test_orbit_blocks_match_pattern_sizes(size):
    lo, hi = ORBIT_BLOCKS[size]
    assert all(pattern_of_orbit(o).n_vertices == size for o in range(lo, hi))


def test_automorphism_group_orders():
    orders = {p.id: p.n_automorphisms for p in load_catalog()}
    assert orders[0] == 2
    assert orders[2] == 6
    assert orders[8] == 24  # 4-clique
    assert orders[11] == 24  # 4-star
    assert orders[15] == 10  # 5-cycle
    assert orders[29] == 120  # 5-clique


def test_orbit_sizes_sum_to_vertex_counts():
    sizes = orbit_sizes()
    for p in load_catalog():
        assert sum(sizes[o] for o in p.orbits) == p.n_vertices


def test_representative_is_smallest_member():
    for p in load_catalog():
        for o in p.orbits:
            assert p.representative(o) == min(p.orbit_members(o))


def test_automorphisms_are_limited_to_five_vertices():
    with pytest.raises(ValueError):
        compute_automorphisms(6, [(0, 1)])


def test_find_pattern_recognises_a_relabelled_graphlet():
    # 5-cycle written in a scrambled order
    edges = [(3, 0), (0, 4), (4, 1), (1, 2), (2, 3)]
    pattern, mapping = find_pattern(5, edges)
    assert pattern.id == 15
    for a, b in edges:
        assert pattern.has_edge(mapping[a], mapping[b])


def test_find_pattern_rejects_disconnected_input():
    with pytest.raises(ValueError):
        find_pattern(4, [(0, 1), (2, 3)])


def test_triangle_cut_splits_two_tailed_triangle_in_two():
    tailed = load_catalog()[12]
    frags = fragments(tailed, frozenset({2, 3, 4}))
    assert sorted(sorted(f) for f in frags) == [[0, 2, 3, 4], [1, 2, 3, 4]]


def test_shrinkage_rejects_bad_cuts():
    tailed = load_catalog()[12]
    diamond = load_catalog()[7]
    with pytest.raises(ValueError):
        compute_num_shrinkages(tailed, {2, 4}, 3, diamond, 2)  # vertex outside cut
    with pytest.raises(ValueError):
        compute_num_shrinkages(tailed, {0, 1}, 0, diamond, 2)  # cut not connected
    with pytest.raises(ValueError):
        compute_num_shrinkages(tailed, set(range(5)), 0, diamond, 2)


def test_shrinkage_into_same_size_target_is_zero():
    p = load_catalog()[20]
    assert compute_num_shrinkages(p, {0, 3}, 0, load_catalog()[26], 0) == 0


def test_edge_cut_terms_for_tailed_four_cycle():
    tailed_cycle = load_catalog()[16]
    assert shrinkage_terms(tailed_cycle, {2, 4}, 2) == {8: 2, 12: 2}


# Cutting identity: injective matches of a pattern at v equal the product of
# per-fragment extension counts summed over cut matches, minus the
# shrinkage-weighted copies of smaller patterns at v.

def _connected_cuts(pattern, vertex):
    adj = pattern.adjacency()
    cuts = []
    others = [x for x in range(pattern.n_vertices) if x != vertex]
    for r in range(0, pattern.n_vertices - 1):
        for extra in itertools.combinations(others, r):
            cut = {vertex, *extra}
            seen, stack = {vertex}, [vertex]
            while stack:
                a = stack.pop()
                for b in adj[a] & cut:
                    if b not in seen:
                        seen.add(b)
                        stack.append(b)
            if seen == cut:
                cuts.append(frozenset(cut))
    return cuts


def _extension_count(pattern, adj, fixed, free):
    count = 0
    used = set(fixed.values())
    candidates = [v for v in range(len(adj)) if v not in used]
    for image in itertools.permutations(candidates, len(free)):
        full = dict(fixed)
        full.update(zip(free, image))
        if all(adj[full[a]][full[b]] for a, b in pattern.edges if a in full and b in full):
            count += 1
    return count


def _fragment_product_sum(graph, pattern, cut, vertex, host):
    adj = np.zeros((graph.n, graph.n), dtype=bool)
    adj[graph.eu, graph.ev] = adj[graph.ev, graph.eu] = True
    cut_rest = sorted(cut - {vertex})
    frags = fragments(pattern, cut)
    total = 0
    for image in itertools.permutations([x for x in range(graph.n) if x != host], len(cut_rest)):
        sigma = {vertex: host, **dict(zip(cut_rest, image))}
        if not all(adj[sigma[a]][sigma[b]] for a, b in pattern.edges if a in cut and b in cut):
            continue
        product = 1
        for frag in frags:
            product *= _extension_count(pattern, adj, sigma, sorted(frag - cut))
        total += product
    return total


@st.composite
def _cut_case(draw):
    pattern = load_catalog()[draw(st.integers(9, 29))]
    vertex = draw(st.integers(0, 4))
    cut = draw(st.sampled_from(_connected_cuts(pattern, vertex)))
    n = draw(st.integers(5, 7))
    p = draw(st.sampled_from([0.4, 0.6, 0.8]))
    seed = draw(st.integers(0, 10_000))
    return pattern, vertex, cut, random_graph(n, p, seed)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(_cut_case())
def test_cut_identity_against_direct_matching(case):
    pattern, vertex, cut, graph = case
    matches = count_injective_matches(graph, pattern, vertex)
    noninduced, _ = brute_force_voc(graph)
    terms = shrinkage_terms(pattern, cut, vertex)
    for host in range(graph.n):
        product_sum = _fragment_product_sum(graph, pattern, cut, vertex, host)
        correction = sum(c * noninduced[host, orbit] for orbit, c in terms.items())
        assert matches[host] == product_sum - correction
