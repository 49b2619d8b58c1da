"""Exhaustive orbit counters for small graphs.

Every vertex subset of size 2 to 5 is visited. The edge pattern of the
subset indexes a precomputed table holding, for each subset position, the
orbit counts contributed by all graphlet copies living on that subset.
Tables are built by trying every bijection from every catalog pattern, so
they share nothing with the fast counting code.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .patterns import (
    EDGE_ORBIT_REPRESENTATIVES,
    N_EDGE_ORBITS,
    N_ORBITS,
    load_catalog,
)

MAX_ORACLE_VERTICES = 40


def _pairs(k):
    return list(itertools.combinations(range(k), 2))


def _mask_of(edges, k):
    index = {p: i for i, p in enumerate(_pairs(k))}
    mask = 0
    for a, b in edges:
        mask |= 1 << index[(min(a, b), max(a, b))]
    return mask


def _superset_sums(exact, n_bits):
    """``out[m] = sum of exact[s] over all s contained in m``."""
    out = exact.copy()
    for bit in range(n_bits):
        step = 1 << bit
        for m in range(1 << n_bits):
            if m & step:
                out[m] += out[m ^ step]
    return out


@lru_cache(maxsize=None)
def vertex_tables(k: int) -> tuple[np.ndarray, np.ndarray]:
    """Induced and non-induced orbit tables for ``k``-vertex subsets.

    Both arrays have shape ``(2**C(k,2), k, 73)``.
    """
    n_bits = len(_pairs(k))
    exact = np.zeros((1 << n_bits, k, N_ORBITS), dtype=np.int64)
    for p in load_catalog():
        if p.n_vertices != k:
            continue
        for perm in itertools.permutations(range(k)):
            # perm[a] is the subset position hosting pattern vertex a
            mask = _mask_of([(perm[a], perm[b]) for a, b in p.edges], k)
            for a in range(k):
                exact[mask, perm[a], p.orbit_of[a]] += 1
    # each copy was produced once per automorphism
    exact = _divide_by_automorphisms(exact, k)
    return exact, _superset_sums(exact, n_bits)


def _divide_by_automorphisms(table, k):
    out = table.copy()
    for p in load_catalog():
        if p.n_vertices != k:
            continue
        cols = list(p.orbits)
        if np.any(out[:, :, cols] % p.n_automorphisms):
            raise AssertionError("bijection counts not divisible by |Aut|")
        out[:, :, cols] //= p.n_automorphisms
    return out


@lru_cache(maxsize=None)
def edge_tables(k: int) -> tuple[np.ndarray, np.ndarray]:
    """Induced and non-induced edge-orbit tables, shape ``(masks, k, k, 12)``.

    Entry ``[mask, a, b, j]`` counts copies in which the ordered pair of
    subset positions ``(a, b)`` plays edge orbit ``j`` with ``a`` first.
    """
    n_bits = len(_pairs(k))
    exact = np.zeros((1 << n_bits, k, k, N_EDGE_ORBITS), dtype=np.int64)
    catalog = load_catalog()
    for j, (pid, (a0, b0)) in enumerate(EDGE_ORBIT_REPRESENTATIVES):
        p = catalog[pid]
        if p.n_vertices != k:
            continue
        directed = p.directed_edge_orbit(a0, b0)
        for perm in itertools.permutations(range(k)):
            mask = _mask_of([(perm[a], perm[b]) for a, b in p.edges], k)
            for a, b in directed:
                exact[mask, perm[a], perm[b], j] += 1
        cols = [j]
        if np.any(exact[:, :, :, cols] % p.n_automorphisms):
            raise AssertionError("bijection counts not divisible by |Aut|")
        exact[:, :, :, cols] //= p.n_automorphisms
    return exact, _superset_sums(exact, n_bits)


def _dense_adjacency(graph) -> np.ndarray:
    n = graph.n
    if n > MAX_ORACLE_VERTICES:
        raise ValueError(f"oracle refuses graphs with more than {MAX_ORACLE_VERTICES} vertices")
    adj = np.zeros((n, n), dtype=bool)
    adj[graph.eu, graph.ev] = True
    adj[graph.ev, graph.eu] = True
    return adj


def _subset_masks(adj, subsets, k):
    masks = np.zeros(len(subsets), dtype=np.int64)
    for bit, (a, b) in enumerate(_pairs(k)):
        masks |= adj[subsets[:, a], subsets[:, b]].astype(np.int64) << bit
    return masks


def _subsets(n, k):
    if n < k:
        return np.zeros((0, k), dtype=np.int64)
    return np.array(list(itertools.combinations(range(n), k)), dtype=np.int64).reshape(-1, k)


def brute_force_voc(graph) -> tuple[np.ndarray, np.ndarray]:
    """Exact non-induced and induced per-vertex orbit counts, each ``(n, 73)``."""
    adj = _dense_adjacency(graph)
    n = graph.n
    noninduced = np.zeros((n, N_ORBITS), dtype=np.int64)
    induced = np.zeros((n, N_ORBITS), dtype=np.int64)
    for k in range(2, 6):
        subsets = _subsets(n, k)
        if not len(subsets):
            continue
        masks = _subset_masks(adj, subsets, k)
        ind_table, non_table = vertex_tables(k)
        for pos in range(k):
            np.add.at(induced, subsets[:, pos], ind_table[masks, pos])
            np.add.at(noninduced, subsets[:, pos], non_table[masks, pos])
    return noninduced, induced


def brute_force_edge_orbits(graph) -> np.ndarray:
    """Exact non-induced edge-orbit counts per ordered vertex pair, ``(n, n, 12)``."""
    adj = _dense_adjacency(graph)
    n = graph.n
    out = np.zeros((n, n, N_EDGE_ORBITS), dtype=np.int64)
    for k in (3, 4):
        subsets = _subsets(n, k)
        if not len(subsets):
            continue
        masks = _subset_masks(adj, subsets, k)
        table = edge_tables(k)[1]
        for a in range(k):
            for b in range(k):
                if a != b:
                    np.add.at(out, (subsets[:, a], subsets[:, b]), table[masks, a, b])
    return out


def count_pattern_copies(graph, pattern, induced: bool = False) -> int:
    """Number of distinct copies of ``pattern`` found by direct subset search."""
    adj = _dense_adjacency(graph)
    k = pattern.n_vertices
    total = 0
    for subset in itertools.combinations(range(graph.n), k):
        for perm in itertools.permutations(subset):
            if all(adj[perm[a], perm[b]] for a, b in pattern.edges):
                if induced and sum(
                    adj[subset[i], subset[j]] for i, j in _pairs(k)
                ) != len(pattern.edges):
                    continue
                total += 1
    return total // pattern.n_automorphisms


def count_injective_matches(graph, pattern, vertex: int) -> np.ndarray:
    """Edge-preserving injections of ``pattern`` per graph vertex hosting ``vertex``."""
    adj = _dense_adjacency(graph)
    out = np.zeros(graph.n, dtype=np.int64)
    for image in itertools.permutations(range(graph.n), pattern.n_vertices):
        if all(adj[image[a], image[b]] for a, b in pattern.edges):
            out[image[vertex]] += 1
    return out


def random_graph(n: int, p: float, seed):
    """Erdős–Rényi sample on vertices ``0..n-1``; the same seed gives the same graph."""
    from .graph import build_graph

    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    edges = np.stack([iu[keep], ju[keep]], axis=1)
    return build_graph(edges, n_vertices=n)
