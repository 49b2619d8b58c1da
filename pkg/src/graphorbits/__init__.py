"""Exact graphlet orbit counts."""

from .counting import OrbitCounts, ccd, count_edge_orbits, count_orbits
from .estimator import OrbitCountTransformer
from .graph import Graph, build_graph, build_oriented, load_graph, parse_edge_list, read_edge_list
from .patterns import N_EDGE_ORBITS, N_ORBITS, load_catalog
from .transform import inverse_transform_matrix, to_induced, to_noninduced, transform_matrix

__all__ = [
    "Graph",
    "N_EDGE_ORBITS",
    "N_ORBITS",
    "OrbitCountTransformer",
    "OrbitCounts",
    "build_graph",
    "build_oriented",
    "ccd",
    "count_edge_orbits",
    "count_orbits",
    "inverse_transform_matrix",
    "load_catalog",
    "load_graph",
    "parse_edge_list",
    "read_edge_list",
    "to_induced",
    "to_noninduced",
    "transform_matrix",
]
