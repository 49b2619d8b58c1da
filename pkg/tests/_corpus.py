"""Shared graph corpus and helpers for the test modules."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st
from numba import njit

from graphorbits.counting import count_orbits, prepare
from graphorbits.graph import build_graph
from graphorbits.oracle import random_graph

SIZES = range(6, 13)
PROBABILITIES = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7)
SEEDS_PER_CELL = 5


def corpus():
    """245 seeded random graphs: every (n, p) cell, five seeds each."""
    for n in SIZES:
        for i, p in enumerate(PROBABILITIES):
            for s in range(SEEDS_PER_CELL):
                seed = 10_000 * n + 100 * i + s
                yield (n, p, seed), random_graph(n, p, seed)


@st.composite
def small_graphs(draw, min_n=0, max_n=10):
    """Hypothesis strategy: seeded random graphs small enough for the oracle."""
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from((0.0, 0.15, 0.3, 0.5, 0.7, 0.9, 1.0)))
    return random_graph(n, p, draw(st.integers(0, 2**32 - 1)))


def fast_tables(g, n_threads=1):
    res = count_orbits(g, graphlet_size=5, induced=True, n_threads=n_threads)
    return res.noninduced.astype(np.int64), res.induced.astype(np.int64)


def dense_edge_orbits(g, table=None):
    """EdgeOrbitTable spread into an ``(n, n, 12)`` array of ordered pairs."""
    if table is None:
        table = prepare(g).e4
    out = np.zeros((g.n, g.n, 12), dtype=np.int64)
    out[g.eu, g.ev] = table.forward
    out[g.ev, g.eu] = table.backward
    return out


def named(name):
    edges, n = NAMED[name]
    return build_graph(np.array(edges, dtype=np.int64).reshape(-1, 2), n_vertices=n)


def _cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def _complete(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


_PETERSEN = (
    _cycle(5)
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
)

NAMED = {
    "K3": (_complete(3), 3),
    "K4": (_complete(4), 4),
    "K5": (_complete(5), 5),
    "K6": (_complete(6), 6),
    "C4": (_cycle(4), 4),
    "C5": (_cycle(5), 5),
    "P5": ([(0, 1), (1, 2), (2, 3), (3, 4)], 5),
    "star4": ([(0, 1), (0, 2), (0, 3)], 4),
    "diamond": ([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4),
    "petersen": (_PETERSEN, 10),
}


def chung_lu_edges(n, m, exponent=2.5, seed=0):
    """Heavy-tailed random edge list with about ``m`` distinct edges."""
    rng = np.random.default_rng(seed)
    weights = (np.arange(1, n + 1) / n) ** (-1.0 / (exponent - 1.0))
    prob = weights / weights.sum()
    draw = int(m * 1.15)
    src = rng.choice(n, size=draw, p=prob)
    dst = rng.choice(n, size=draw, p=prob)
    keep = src != dst
    lo = np.minimum(src[keep], dst[keep])
    hi = np.maximum(src[keep], dst[keep])
    keys = np.unique(lo * n + hi)[:m]
    rng.shuffle(keys)
    return np.stack([keys // n, keys % n], axis=1)


@njit(cache=True)
def _grow_clustered(n, k, p_triad, seed):
    np.random.seed(seed)
    m_max = n * k
    src = np.empty(m_max, dtype=np.int64)
    dst = np.empty(m_max, dtype=np.int64)
    ends = np.empty(2 * m_max, dtype=np.int64)  # endpoint multiset for degree-biased picks
    # growable per-vertex neighbour lists carved out of one pool
    pool = np.empty(8 * m_max + 16 * n, dtype=np.int64)
    start = np.zeros(n, dtype=np.int64)
    cap = np.zeros(n, dtype=np.int64)
    size = np.zeros(n, dtype=np.int64)
    top = 0
    m = 0
    n_ends = 0
    chosen = np.empty(k, dtype=np.int64)

    for v in range(n):
        if v <= k:
            targets = v
        else:
            targets = k
        n_chosen = 0
        anchor = -1
        attempts = 0
        while n_chosen < targets and attempts < 50 * k:
            attempts += 1
            if v <= k:
                w = n_chosen  # seed clique on the first k + 1 vertices
            elif anchor >= 0 and size[anchor] > 0 and np.random.random() < p_triad:
                w = pool[start[anchor] + np.random.randint(size[anchor])]
            else:
                w = ends[np.random.randint(n_ends)]
                anchor = w
            dup = w == v
            for j in range(n_chosen):
                if chosen[j] == w:
                    dup = True
            if dup:
                anchor = -1
                continue
            chosen[n_chosen] = w
            n_chosen += 1
            src[m] = w
            dst[m] = v
            m += 1
            ends[n_ends] = w
            ends[n_ends + 1] = v
            n_ends += 2
            for a, b in ((v, w), (w, v)):
                if size[a] == cap[a]:
                    new_cap = max(8, 2 * cap[a])
                    pool[top : top + size[a]] = pool[start[a] : start[a] + size[a]]
                    start[a] = top
                    cap[a] = new_cap
                    top += new_cap
                pool[start[a] + size[a]] = b
                size[a] += 1
    return src[:m], dst[:m]


def clustered_power_law_edges(n, k=4, p_triad=0.5, seed=0):
    """Preferential attachment with triad closure (Holme-Kim growth).

    Each new vertex adds ``k`` edges, so there are about ``n * k`` edges
    with a heavy-tailed degree sequence and high clustering.
    """
    src, dst = _grow_clustered(n, k, p_triad, seed)
    return np.stack([src, dst], axis=1)
