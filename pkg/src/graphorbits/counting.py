"""End-to-end orbit counting on a built graph."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .enumerators import LocalCounts4, local_counts
from .graph import Graph, OrientedGraph, build_oriented, relabel_by_degree
from .orbit4 import EdgeOrbitTable, count_edge_orbits4, count_voc4
from .orbit5 import GroupTimings, count_all_5voc
from .transform import inverse_transform_matrix, to_induced

# Rough guard: 5-vertex counts at a vertex grow like the square of its
# 2-path count or the fourth power of its degree. Refuse graphs where these
# approach the int64 range instead of silently wrapping.
_SAFE_BOUND = 2**60


@dataclass
class OrbitCounts:
    """Per-vertex orbit counts; tables are ``uint64`` with one row per vertex."""

    noninduced: np.ndarray
    induced: np.ndarray | None
    edge_orbits: EdgeOrbitTable | None
    timings: dict = field(default_factory=dict)


@dataclass
class Prepared:
    g: Graph
    og: OrientedGraph
    lc: LocalCounts4
    v4: np.ndarray
    e4: EdgeOrbitTable


def check_count_range(g: Graph) -> None:
    """Refuse graphs whose counts could overflow signed 64-bit accumulation."""
    if g.m == 0:
        return
    src = np.repeat(np.arange(g.n), g.degree)
    two_paths = np.bincount(src, weights=g.degree[g.indices] - 1, minlength=g.n)
    d_max = int(g.degree.max())
    worst = int(two_paths.max()) ** 2 + d_max**4
    if worst > _SAFE_BOUND:
        raise OverflowError(
            f"counts may exceed the 64-bit range (max degree {d_max}, "
            f"max 2-path count {int(two_paths.max())})"
        )


def prepare(g: Graph, timings: dict | None = None) -> Prepared:
    """Orientation, triangle/4-cycle/4-clique incidences and all 4-vertex orbits."""
    t = time.perf_counter()
    og = build_oriented(g)
    lc = local_counts(g, og)
    v4 = count_voc4(g, lc)
    e4 = count_edge_orbits4(g, lc, v4)
    if timings is not None:
        timings["four_vertex"] = time.perf_counter() - t
    return Prepared(g, og, lc, v4, e4)


def _finalise(table: np.ndarray) -> np.ndarray:
    if table.size and table.min() < 0:
        v, j = np.argwhere(table < 0)[0]
        raise AssertionError(f"negative count at vertex {v}, orbit {j}")
    return table.view(np.uint64)


def count_orbits(
    g: Graph,
    graphlet_size: int = 5,
    induced: bool = True,
    n_threads: int = 1,
    keep_edge_orbits: bool = False,
) -> OrbitCounts:
    """Count orbits of all connected graphlets with up to ``graphlet_size`` vertices.

    Returns 15 columns for ``graphlet_size=4`` and 73 for ``5``.
    """
    if graphlet_size not in (4, 5):
        raise ValueError("graphlet_size must be 4 or 5")
    timings: dict = {}
    if graphlet_size == 5:
        check_count_range(g)
    # work on a copy numbered in degree order: rank tests become id tests
    # and the busiest vertices share cache lines
    t = time.perf_counter()
    h, rank, edge_map, swapped = relabel_by_degree(g)
    timings["relabel"] = time.perf_counter() - t
    prep = prepare(h, timings)
    if graphlet_size == 4:
        table = prep.v4
    else:
        group_times = GroupTimings()
        table = count_all_5voc(prep.g, prep.og, prep.lc, prep.v4, prep.e4, n_threads, group_times)
        timings.update(group_times.seconds)
    table = table[rank]
    ind = None
    if induced:
        t = time.perf_counter()
        ind = _finalise(to_induced(table, inverse_transform_matrix()))
        timings["transform"] = time.perf_counter() - t
    edges = _restore_edge_order(prep.e4, edge_map, swapped) if keep_edge_orbits else None
    return OrbitCounts(_finalise(table), ind, edges, timings)


def _restore_edge_order(table: EdgeOrbitTable, edge_map, swapped) -> EdgeOrbitTable:
    flip = swapped[:, None]
    forward = np.empty_like(table.forward)
    backward = np.empty_like(table.backward)
    forward[edge_map] = np.where(flip, table.backward, table.forward)
    backward[edge_map] = np.where(flip, table.forward, table.backward)
    return EdgeOrbitTable(forward, backward)


def count_edge_orbits(g: Graph) -> EdgeOrbitTable:
    return prepare(g).e4


def ccd(column) -> list[tuple[int, float]]:
    """Complementary cumulative distribution of one orbit column.

    For each distinct value ``x`` in ascending order, the fraction of
    vertices whose count is at least ``x``.
    """
    column = np.asarray(column)
    if column.size == 0:
        return []
    values, counts = np.unique(column, return_counts=True)
    at_least = np.cumsum(counts[::-1])[::-1]
    return [(int(x), float(c) / column.size) for x, c in zip(values, at_least)]
