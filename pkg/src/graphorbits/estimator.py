"""scikit-learn style transformer producing per-vertex orbit features."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .counting import count_orbits
from .graph import build_graph
from .transform import inverse_transform_matrix
from .validation import check_edge_array, check_graphlet_size, check_threads


class OrbitCountTransformer(TransformerMixin, BaseEstimator):
    """Map a graph to its per-vertex graphlet orbit counts.

    ``X`` is an edge list of shape ``(m, 2)`` or a square adjacency matrix.
    ``transform`` returns an ``(n_vertices, n_orbits)`` int64 array, one row
    per vertex id ``0..max id`` (or per adjacency row).

    Parameters
    ----------
    graphlet_size : {4, 5}
        Largest graphlet size; gives 15 or 73 orbit columns.
    induced : bool
        Induced counts (ORCA convention) if True, otherwise non-induced.
    n_threads : int
        Threads used for the independent 5-vertex orbit groups.
    """

    def __init__(self, graphlet_size=5, induced=True, n_threads=1):
        self.graphlet_size = graphlet_size
        self.induced = induced
        self.n_threads = n_threads

    def fit(self, X, y=None):
        check_edge_array(X)
        k = check_graphlet_size(self.graphlet_size)
        check_threads(self.n_threads)
        self.n_orbits_ = 73 if k == 5 else 15
        self.inverse_transform_matrix_ = inverse_transform_matrix()[: self.n_orbits_, : self.n_orbits_]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_orbits_")
        edges, n_vertices = check_edge_array(X)
        g = build_graph(edges, n_vertices=n_vertices)
        result = count_orbits(
            g,
            graphlet_size=check_graphlet_size(self.graphlet_size),
            induced=bool(self.induced),
            n_threads=check_threads(self.n_threads),
        )
        table = result.induced if self.induced else result.noninduced
        return table.astype(np.int64)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_orbits_")
        return np.array([f"orbit{j}" for j in range(self.n_orbits_)], dtype=object)
