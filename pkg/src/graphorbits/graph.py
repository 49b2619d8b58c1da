"""Simple undirected graphs in CSR form, degree orientation and edge hashing."""

from __future__ import annotations

import io
import os
from collections import namedtuple
from dataclasses import dataclass
from pathlib import Path

import numba as nb
import numpy as np

CACHE_MAGIC = b"GORBCSR1"

# Array bundle handed to compiled kernels. Slots are positions in
# ``indices``; ``slot_edge`` maps a slot to its undirected edge id and
# ``slot_rev`` to the slot of the opposite direction.
GraphArrays = namedtuple(
    "GraphArrays",
    "n m indptr indices slot_edge slot_rev eu ev edge_slots deg hash_keys hash_vals hash_shift",
)
OrientedArrays = namedtuple("OrientedArrays", "rank out_indptr out_indices out_edge")


class EdgeListError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(stream) -> np.ndarray:
    """Read whitespace-separated vertex pairs, one edge per line.

    Lines starting with ``#`` or ``%`` are comments. Columns after the
    second are ignored. Returns an ``(k, 2)`` int64 array in input order.
    """
    text = stream.read() if hasattr(stream, "read") else stream
    if isinstance(text, bytes):
        text = text.decode()
    tokens: list[str] = []
    line_numbers: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0][0] in "#%":
            continue
        if len(parts) < 2:
            raise EdgeListError(lineno, "expected two vertex ids")
        tokens.append(parts[0])
        tokens.append(parts[1])
        line_numbers.append(lineno)
    try:
        values = np.fromiter(map(int, tokens), dtype=np.int64, count=len(tokens))
    except ValueError:
        for i, tok in enumerate(tokens):
            try:
                int(tok)
            except ValueError:
                raise EdgeListError(line_numbers[i // 2], f"not an integer: {tok!r}") from None
        raise
    edges = values.reshape(-1, 2)
    negative = np.flatnonzero((edges < 0).any(axis=1))
    if len(negative):
        raise EdgeListError(line_numbers[negative[0]], "negative vertex id")
    return edges


def read_edge_list(path) -> np.ndarray:
    with open(path, "r") as fh:
        return parse_edge_list(fh)


@nb.njit(cache=True)
def _hash_slot(key, shift):
    h = np.uint64(key) * np.uint64(0x9E3779B97F4A7C15)
    return np.int64(h >> np.uint64(shift))


@nb.njit(cache=True)
def _build_hash(eu, ev, n, bits):
    size = 1 << bits
    shift = 64 - bits
    keys = np.full(size, -1, dtype=np.int64)
    vals = np.zeros(size, dtype=np.int64)
    mask = size - 1
    for e in range(eu.shape[0]):
        key = eu[e] * n + ev[e]
        h = _hash_slot(key, shift)
        while keys[h] != -1:
            h = (h + 1) & mask
        keys[h] = key
        vals[h] = e
    return keys, vals


@nb.njit(cache=True, nogil=True)
def find_edge(g, a, b):
    """Edge id of ``{a, b}`` or -1. Compiled; takes ``GraphArrays``."""
    if a == b:
        return -1
    if a > b:
        a, b = b, a
    key = a * g.n + b
    mask = g.hash_keys.shape[0] - 1
    h = _hash_slot(key, g.hash_shift)
    while True:
        k = g.hash_keys[h]
        if k == key:
            return g.hash_vals[h]
        if k == -1:
            return -1
        h = (h + 1) & mask


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``indptr``/``indices`` hold strictly ascending neighbour lists. Edges are
    numbered in lexicographic order of ``(eu, ev)`` with ``eu < ev``.
    ``labels`` maps each vertex back to its input id.
    """

    n: int
    m: int
    indptr: np.ndarray
    indices: np.ndarray
    slot_edge: np.ndarray
    slot_rev: np.ndarray
    eu: np.ndarray
    ev: np.ndarray
    edge_slots: np.ndarray
    labels: np.ndarray
    arrays: GraphArrays

    @property
    def degree(self) -> np.ndarray:
        return self.arrays.deg

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def edges(self) -> np.ndarray:
        return np.stack([self.eu, self.ev], axis=1)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None


@nb.njit(cache=True, nogil=True)
def _fill_csr(eu, ev, n, indptr, indices, slot_edge, edge_slots):
    # edges arrive sorted by (eu, ev): a row lists its smaller neighbours
    # (edges where it is ev) before its larger ones (edges where it is eu),
    # both already ascending, so one counting pass in that order suffices
    m = eu.shape[0]
    for e in range(m):
        indptr[eu[e] + 1] += 1
        indptr[ev[e] + 1] += 1
    for v in range(n):
        indptr[v + 1] += indptr[v]
    fill = indptr[:-1].copy()
    for e in range(m):
        v = ev[e]
        indices[fill[v]] = eu[e]
        slot_edge[fill[v]] = e
        edge_slots[e, 1] = fill[v]
        fill[v] += 1
    for e in range(m):
        u = eu[e]
        indices[fill[u]] = ev[e]
        slot_edge[fill[u]] = e
        edge_slots[e, 0] = fill[u]
        fill[u] += 1


def _from_canonical(eu: np.ndarray, ev: np.ndarray, n: int, labels=None) -> Graph:
    eu = np.ascontiguousarray(eu, dtype=np.int64)
    ev = np.ascontiguousarray(ev, dtype=np.int64)
    m = len(eu)
    indptr = np.zeros(n + 1, dtype=np.int64)
    indices = np.empty(2 * m, dtype=np.int64)
    slot_edge = np.empty(2 * m, dtype=np.int64)
    edge_slots = np.empty((m, 2), dtype=np.int64)
    _fill_csr(eu, ev, n, indptr, indices, slot_edge, edge_slots)
    slot_rev = np.empty(2 * m, dtype=np.int64)
    slot_rev[edge_slots[:, 0]] = edge_slots[:, 1]
    slot_rev[edge_slots[:, 1]] = edge_slots[:, 0]
    deg = np.diff(indptr)
    bits = max(2, int(2 * max(m, 1) - 1).bit_length() + 1)
    keys, vals = _build_hash(eu, ev, n, bits)
    if labels is None:
        labels = np.arange(n, dtype=np.int64)
    arrays = GraphArrays(
        n, m, indptr, indices, slot_edge, slot_rev, eu, ev, edge_slots, deg, keys, vals, 64 - bits
    )
    return Graph(n, m, indptr, indices, slot_edge, slot_rev, eu, ev, edge_slots, labels, arrays)


def build_graph(raw, n_vertices: int | None = None, compact: bool = False) -> Graph:
    """Canonical simple graph from a raw pair list.

    Self-loops and repeated edges are dropped. By default the vertex set is
    ``0..max id`` so isolated ids stay as zero-degree rows. With
    ``compact=True`` ids are renumbered in order of first appearance and
    ``labels`` records the original ids.
    """
    raw = np.asarray(raw, dtype=np.int64).reshape(-1, 2)
    if len(raw) and raw.min() < 0:
        raise ValueError("vertex ids must be non-negative")
    labels = None
    if compact:
        flat = raw.ravel()
        uniq, first = np.unique(flat, return_index=True)
        labels = uniq[np.argsort(first, kind="stable")]
        relabel = np.empty(len(uniq), dtype=np.int64)
        relabel[np.argsort(first, kind="stable")] = np.arange(len(uniq))
        raw = relabel[np.searchsorted(uniq, flat)].reshape(-1, 2)
        n = len(uniq)
    else:
        n = int(raw.max()) + 1 if len(raw) else 0
    if n_vertices is not None:
        if n_vertices < n:
            raise ValueError("n_vertices is smaller than the largest vertex id")
        n = n_vertices
    a = np.minimum(raw[:, 0], raw[:, 1])
    b = np.maximum(raw[:, 0], raw[:, 1])
    keep = a != b
    keys = np.unique(a[keep] * max(n, 1) + b[keep])
    return _from_canonical(keys // max(n, 1), keys % max(n, 1), n, labels)


def relabel_by_degree(g: Graph) -> tuple[Graph, np.ndarray, np.ndarray, np.ndarray]:
    """Copy of ``g`` with vertex ``v`` renamed to its degree rank.

    Returns ``(h, rank, edge_map, swapped)``: edge ``i`` of ``h`` is edge
    ``edge_map[i]`` of ``g``, with endpoints in the opposite order where
    ``swapped[i]``. Labels follow the vertices.
    """
    rank = degree_rank(g)
    a, b = rank[g.eu], rank[g.ev]
    swapped = a > b
    lo, hi = np.where(swapped, b, a), np.where(swapped, a, b)
    edge_map = np.argsort(lo * max(g.n, 1) + hi, kind="stable")
    labels = np.empty(g.n, dtype=np.int64)
    labels[rank] = g.labels
    h = _from_canonical(lo[edge_map], hi[edge_map], g.n, labels)
    return h, rank, edge_map, swapped[edge_map]


def has_edge(g: Graph, u: int, v: int) -> bool:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError(f"vertex id out of range for a graph with {g.n} vertices")
    return bool(find_edge(g.arrays, np.int64(u), np.int64(v)) >= 0)


def edge_id(g: Graph, u: int, v: int) -> int:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError(f"vertex id out of range for a graph with {g.n} vertices")
    return int(find_edge(g.arrays, np.int64(u), np.int64(v)))


@dataclass(frozen=True, eq=False)
class OrientedGraph:
    """Edges directed from the lower to the higher endpoint in degree order."""

    rank: np.ndarray
    out_indptr: np.ndarray
    out_indices: np.ndarray
    out_edge: np.ndarray
    arrays: OrientedArrays

    @property
    def out_degree(self) -> np.ndarray:
        return np.diff(self.out_indptr)

    def out_neighbors(self, v: int) -> np.ndarray:
        return self.out_indices[self.out_indptr[v] : self.out_indptr[v + 1]]


def degree_rank(g: Graph) -> np.ndarray:
    """Position of each vertex when sorted by (degree, id)."""
    order = np.lexsort((np.arange(g.n), g.degree))
    rank = np.empty(g.n, dtype=np.int64)
    rank[order] = np.arange(g.n)
    return rank


def build_oriented(g: Graph) -> OrientedGraph:
    rank = degree_rank(g)
    src = np.repeat(np.arange(g.n, dtype=np.int64), g.degree)
    keep = rank[src] < rank[g.indices]
    out_indices = np.ascontiguousarray(g.indices[keep])
    out_edge = np.ascontiguousarray(g.slot_edge[keep])
    out_indptr = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src[keep], minlength=g.n), out=out_indptr[1:])
    arrays = OrientedArrays(rank, out_indptr, out_indices, out_edge)
    return OrientedGraph(rank, out_indptr, out_indices, out_edge, arrays)


def rank_sorted_adjacency(g: Graph, og: OrientedGraph) -> tuple[np.ndarray, np.ndarray]:
    """Neighbour lists re-sorted by rank: ``(indices, slots)``.

    ``slots[p]`` is the position in ``g.indices`` of entry ``p``. A graph
    numbered in degree order is already sorted and costs nothing to convert.
    """
    if np.array_equal(og.rank, np.arange(g.n)):
        slots = np.arange(2 * g.m, dtype=np.int64)
        return g.indices, slots
    src = np.repeat(np.arange(g.n, dtype=np.int64), g.degree)
    slots = np.lexsort((og.rank[g.indices], src)).astype(np.int64)
    return g.indices[slots], slots


def write_edge_list(g: Graph, stream) -> None:
    buf = io.StringIO()
    np.savetxt(buf, g.edges(), fmt="%d")
    stream.write(buf.getvalue())


def write_binary_cache(g: Graph, path) -> None:
    """Store the canonical graph: magic, n, m, degrees, adjacency (int64 LE)."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(CACHE_MAGIC)
        np.array([g.n, g.m], dtype="<i8").tofile(fh)
        g.degree.astype("<i8").tofile(fh)
        g.indices.astype("<i8").tofile(fh)
    os.replace(tmp, path)


def read_binary_cache(path) -> Graph:
    with open(path, "rb") as fh:
        if fh.read(len(CACHE_MAGIC)) != CACHE_MAGIC:
            raise ValueError(f"{path}: not a graph cache file")
        header = np.fromfile(fh, dtype="<i8", count=2)
        if len(header) != 2:
            raise ValueError(f"{path}: truncated cache header")
        n, m = (int(x) for x in header)
        deg = np.fromfile(fh, dtype="<i8", count=n).astype(np.int64)
        indices = np.fromfile(fh, dtype="<i8", count=2 * m).astype(np.int64)
    if len(deg) != n or len(indices) != 2 * m or deg.sum() != 2 * m:
        raise ValueError(f"{path}: truncated or inconsistent cache")
    src = np.repeat(np.arange(n, dtype=np.int64), deg)
    upper = src < indices
    return _from_canonical(src[upper], indices[upper], n)


def load_graph(path, compact: bool = False) -> Graph:
    """Load an edge-list text file or a binary cache written by ``write_binary_cache``."""
    with open(path, "rb") as fh:
        head = fh.read(len(CACHE_MAGIC))
    if head == CACHE_MAGIC:
        return read_binary_cache(path)
    return build_graph(read_edge_list(path), compact=compact)
