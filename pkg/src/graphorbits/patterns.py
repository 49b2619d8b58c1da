"""Catalog of connected graphlets on 2 to 5 vertices and their orbits.

The catalog is read from ``data/patterns.txt``. Automorphism groups and
orbits are recomputed from the edge lists on load and checked against
the orbit ids stored in the file, so a corrupted catalog fails loudly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

N_ORBITS = 73
N_EDGE_ORBITS = 12
# First global orbit id of each graphlet size (2, 3, 4, 5 vertices).
ORBIT_BLOCKS = {2: (0, 1), 3: (1, 4), 4: (4, 15), 5: (15, 73)}

# Edge orbits of 3- and 4-vertex graphlets as (pattern id, directed edge).
# For an asymmetric orbit the first endpoint is the one in the higher
# vertex orbit, e.g. the centre of a 3-path.
EDGE_ORBIT_REPRESENTATIVES = (
    (1, (2, 0)),  # 3-path, centre -> end
    (2, (0, 1)),  # triangle
    (3, (3, 0)),  # 4-path end edge, middle -> end
    (3, (2, 3)),  # 4-path middle edge
    (4, (3, 0)),  # 3-star, centre -> leaf
    (5, (0, 1)),  # 4-cycle
    (6, (3, 0)),  # paw tail, degree-3 vertex -> tail
    (6, (1, 2)),  # paw edge opposite the degree-3 vertex
    (6, (3, 1)),  # paw triangle edge, degree-3 vertex -> degree-2 vertex
    (7, (2, 0)),  # diamond rim edge, chord end -> rim vertex
    (7, (2, 3)),  # diamond chord
    (8, (0, 1)),  # 4-clique
)


@dataclass(frozen=True)
class Pattern:
    """One connected graphlet with vertices labelled by orbit order."""

    id: int
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    orbit_of: tuple[int, ...]
    automorphisms: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def n_automorphisms(self) -> int:
        return len(self.automorphisms)

    @property
    def orbits(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.orbit_of)))

    def orbit_members(self, orbit: int) -> tuple[int, ...]:
        return tuple(v for v, o in enumerate(self.orbit_of) if o == orbit)

    def orbit_size(self, orbit: int) -> int:
        return len(self.orbit_members(orbit))

    def representative(self, orbit: int) -> int:
        """Smallest vertex id in the orbit."""
        return self.orbit_members(orbit)[0]

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edge_set

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n_vertices)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def edge_orbits(self) -> list[frozenset[tuple[int, int]]]:
        """Classes of undirected edges under the automorphism group."""
        return _classes(self.edges, self.automorphisms, directed=False)

    def directed_edge_orbit(self, a: int, b: int) -> frozenset[tuple[int, int]]:
        return frozenset((p[a], p[b]) for p in self.automorphisms)


def compute_automorphisms(n_vertices: int, edges) -> tuple[tuple[int, ...], ...]:
    """All vertex permutations that map the edge set onto itself."""
    if n_vertices > 5:
        raise ValueError("automorphism search is limited to 5 vertices")
    edge_set = {(min(a, b), max(a, b)) for a, b in edges}
    found = []
    for perm in itertools.permutations(range(n_vertices)):
        if all((min(perm[a], perm[b]), max(perm[a], perm[b])) in edge_set for a, b in edge_set):
            found.append(perm)
    return tuple(found)


def vertex_orbits(n_vertices: int, automorphisms) -> list[frozenset[int]]:
    return _classes(range(n_vertices), automorphisms, directed=None)


def _classes(items, automorphisms, directed):
    seen = set()
    out = []
    for item in items:
        if item in seen:
            continue
        if directed is None:
            cls = frozenset(p[item] for p in automorphisms)
        else:
            a, b = item
            cls = frozenset((min(p[a], p[b]), max(p[a], p[b])) for p in automorphisms)
        seen |= cls
        out.append(cls)
    return out


def _parse_catalog(text: str) -> tuple[Pattern, ...]:
    patterns = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, edge_part, orbit_part = (s.strip() for s in line.split("|"))
        name, size = head.split()
        n = int(size)
        edges = tuple(
            tuple(sorted(int(x) for x in tok.split("-"))) for tok in edge_part.split()
        )
        orbit_of = [-1] * n
        for tok in orbit_part.split():
            orbit, members = tok.split(":")
            for v in members.split(","):
                orbit_of[int(v)] = int(orbit)
        autos = compute_automorphisms(n, edges)
        pattern = Pattern(int(name[1:]), n, edges, tuple(orbit_of), autos)
        _check_pattern(pattern)
        patterns.append(pattern)
    return tuple(patterns)


def _check_pattern(p: Pattern) -> None:
    computed = {frozenset(c) for c in vertex_orbits(p.n_vertices, p.automorphisms)}
    stored = {frozenset(p.orbit_members(o)) for o in p.orbits}
    if computed != stored or -1 in p.orbit_of:
        raise ValueError(f"catalog orbits of H{p.id} disagree with its automorphisms")
    if list(p.orbit_of) != sorted(p.orbit_of):
        raise ValueError(f"H{p.id} vertices are not labelled in orbit order")


@lru_cache(maxsize=None)
def load_catalog() -> tuple[Pattern, ...]:
    """The 30 connected graphlets ordered by their smallest orbit id."""
    text = resources.files("graphorbits").joinpath("data/patterns.txt").read_text()
    patterns = _parse_catalog(text)
    orbit_ids = sorted(o for p in patterns for o in p.orbits)
    if orbit_ids != list(range(N_ORBITS)):
        raise ValueError("catalog does not cover orbits 0..72 exactly once")
    return patterns


@lru_cache(maxsize=None)
def orbit_pattern() -> tuple[int, ...]:
    """Pattern id owning each global orbit."""
    owner = [0] * N_ORBITS
    for p in load_catalog():
        for o in p.orbits:
            owner[o] = p.id
    return tuple(owner)


def pattern_of_orbit(orbit: int) -> Pattern:
    return load_catalog()[orbit_pattern()[orbit]]


def orbit_sizes() -> tuple[int, ...]:
    return tuple(pattern_of_orbit(o).orbit_size(o) for o in range(N_ORBITS))


def find_pattern(n_vertices: int, edges) -> tuple[Pattern, tuple[int, ...]]:
    """Catalog pattern isomorphic to the given graph and a vertex map onto it.

    The returned map sends each input vertex to its pattern vertex.
    """
    edge_set = {(min(a, b), max(a, b)) for a, b in edges}
    for p in load_catalog():
        if p.n_vertices != n_vertices or len(p.edges) != len(edge_set):
            continue
        for perm in itertools.permutations(range(n_vertices)):
            if all((min(perm[a], perm[b]), max(perm[a], perm[b])) in p.edge_set for a, b in edge_set):
                return p, perm
    raise ValueError("graph is not a connected graphlet on 2 to 5 vertices")


def _is_connected(vertices, adj) -> bool:
    vertices = set(vertices)
    if not vertices:
        return True
    start = next(iter(vertices))
    stack, seen = [start], {start}
    while stack:
        a = stack.pop()
        for b in adj[a] & vertices:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return seen == vertices


def fragments(pattern: Pattern, cut: frozenset[int]) -> list[frozenset[int]]:
    """Vertex sets ``cut | component`` for each component left after removing ``cut``."""
    adj = pattern.adjacency()
    rest = set(range(pattern.n_vertices)) - set(cut)
    out = []
    while rest:
        start = rest.pop()
        comp, stack = {start}, [start]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b in rest:
                    rest.discard(b)
                    comp.add(b)
                    stack.append(b)
        out.append(frozenset(cut) | comp)
    return out


def _extensions(pattern, target_adj, n_target, fixed: dict, free: list):
    """Injective edge-preserving maps of ``free`` vertices extending ``fixed``."""
    if not free:
        yield dict(fixed)
        return
    a, rest = free[0], free[1:]
    used = set(fixed.values())
    for image in range(n_target):
        if image in used:
            continue
        if all(
            (fixed[b] in target_adj[image]) for b in fixed if pattern.has_edge(a, b)
        ):
            fixed[a] = image
            yield from _extensions(pattern, target_adj, n_target, fixed, rest)
            del fixed[a]


def compute_num_shrinkages(pattern: Pattern, cut, vertex: int, target: Pattern, target_vertex: int) -> int:
    """Number of shrinkages of ``pattern`` into ``target`` through the cut set ``cut``.

    A shrinkage maps the cut injectively into ``target`` with ``vertex`` sent to
    ``target_vertex``, extends it injectively over every fragment, and the
    fragment images together cover every edge of ``target``. Only targets with
    fewer vertices than ``pattern`` count; an equal-size cover is a copy of the
    pattern itself.
    """
    cut = frozenset(cut)
    adj = pattern.adjacency()
    if not cut or len(cut) >= pattern.n_vertices or not cut <= set(range(pattern.n_vertices)):
        raise ValueError("cut set must be a non-empty proper subset of the pattern vertices")
    if vertex not in cut:
        raise ValueError("the orbit representative must lie in the cut set")
    if not _is_connected(cut, adj):
        raise ValueError("cut set must induce a connected subgraph")
    if target.n_vertices >= pattern.n_vertices:
        return 0
    target_adj = target.adjacency()
    frags = fragments(pattern, cut)
    cut_order = [vertex] + sorted(cut - {vertex})
    total = 0
    for tau in _extensions(pattern, target_adj, target.n_vertices, {vertex: target_vertex}, cut_order[1:]):
        per_frag = []
        for frag in frags:
            free = sorted(frag - cut)
            maps = []
            for ext in _extensions(pattern, target_adj, target.n_vertices, dict(tau), free):
                covered = frozenset(
                    (min(ext[a], ext[b]), max(ext[a], ext[b]))
                    for a, b in pattern.edges
                    if a in frag and b in frag
                )
                maps.append(covered)
            per_frag.append(maps)
        for combo in itertools.product(*per_frag):
            if frozenset().union(*combo) == target.edge_set:
                total += 1
    return total


def shrinkage_terms(pattern: Pattern, cut, vertex: int) -> dict[int, int]:
    """Correction coefficient per global orbit for a cut-set equation at ``vertex``."""
    terms = {}
    for target in load_catalog():
        for orbit in target.orbits:
            c = compute_num_shrinkages(pattern, cut, vertex, target, target.representative(orbit))
            if c:
                terms[orbit] = c
    return terms
