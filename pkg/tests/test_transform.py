import numpy as np
import pytest
from hypothesis import given, settings

from _corpus import named, small_graphs
from graphorbits.oracle import brute_force_voc
from graphorbits.patterns import ORBIT_BLOCKS
from graphorbits.transform import (
    build_transform_matrix,
    format_matrix,
    invert_unit_triangular,
    inverse_transform_matrix,
    to_induced,
    to_noninduced,
    transform_matrix,
)


def test_matrix_is_unit_upper_triangular_and_block_diagonal():
    A = transform_matrix()
    assert np.all(np.diag(A) == 1)
    assert not np.tril(A, -1).any()
    for size, (lo, hi) in ORBIT_BLOCKS.items():
        assert not A[lo:hi, hi:].any()
    assert A.min() >= 0


def test_matrices_are_read_only():
    with pytest.raises(ValueError):
        transform_matrix()[0, 0] = 5
    with pytest.raises(ValueError):
        inverse_transform_matrix()[0, 0] = 5


def test_three_vertex_block():
    # a triangle vertex is the end of two wedges and the centre of one
    np.testing.assert_array_equal(build_transform_matrix(1, 4), [[1, 0, 2], [0, 1, 1], [0, 0, 1]])


def test_path_middle_count_inside_diamond():
    # the chord end of a diamond is a middle vertex of exactly four 4-paths:
    # with chord end 2 they are 0-2-1-3, 0-2-3-1, 1-2-0-3, 1-2-3-0
    A = transform_matrix()
    assert A[5, 13] == 4
    non, _ = brute_force_voc(named("diamond"))
    assert non[2, 5] == 4
    assert inverse_transform_matrix()[5, 13:15].tolist() == [4, -6]


def test_misprinted_entry_would_break_induced_counts():
    A = transform_matrix().copy()
    A[5, 13] = 2
    wrong = invert_unit_triangular(A)
    g = named("diamond")
    non, ind = brute_force_voc(g)
    assert not np.array_equal(non @ wrong.T, ind)
    np.testing.assert_array_equal(to_induced(non), ind)


def test_inverse_is_exact():
    A, Ainv = transform_matrix(), inverse_transform_matrix()
    np.testing.assert_array_equal(A @ Ainv, np.eye(73, dtype=np.int64))
    np.testing.assert_array_equal(Ainv @ A, np.eye(73, dtype=np.int64))


def test_inverting_rejects_non_unit_triangular():
    with pytest.raises(ValueError):
        invert_unit_triangular(np.array([[2, 0], [0, 1]]))
    with pytest.raises(ValueError):
        invert_unit_triangular(np.array([[1, 0], [1, 1]]))


def test_invalid_noninduced_table_is_rejected():
    table = np.zeros((1, 15), dtype=np.int64)
    table[0, 3] = 1  # a triangle without the wedges it implies
    with pytest.raises(ValueError):
        to_induced(table)


def test_fifteen_column_tables():
    non, ind = brute_force_voc(named("diamond"))
    np.testing.assert_array_equal(to_induced(non[:, :15]), ind[:, :15])
    np.testing.assert_array_equal(to_noninduced(ind[:, :15]), non[:, :15])


def test_format_matrix():
    assert format_matrix(np.array([[1, -2], [0, 1]])) == "1 -2\n0 1\n"


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=11))
def test_round_trip_on_oracle_tables(g):
    non, ind = brute_force_voc(g)
    np.testing.assert_array_equal(to_induced(non), ind)
    np.testing.assert_array_equal(to_noninduced(ind), non)
