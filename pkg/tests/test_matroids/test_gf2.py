import pytest

from matroidpairs.errors import UnsupportedSizeError
from matroidpairs.matroids.gf2 import (
    Gf2Matrix,
    bits,
    coordinates,
    fully_reduce,
    insert_vector,
    masks_by_size,
    popcount,
)


class TestVectors:
    def test_popcount_and_bits(self):
        assert popcount(0b1011) == 3
        assert bits(0b10110) == [1, 2, 4]
        assert bits(0) == []

    def test_masks_by_size(self):
        assert masks_by_size(3) == ((0,), (1, 2, 4), (3, 5, 6), (7,))

    def test_insert_vector_reports_rank_increase(self):
        pivots = [0, 0, 0]
        assert insert_vector(0b011, pivots)
        assert insert_vector(0b101, pivots)
        assert not insert_vector(0b110, pivots)

    def test_fully_reduce_is_constant_on_cosets(self):
        pivots = [0, 0, 0]
        insert_vector(0b011, pivots)
        assert fully_reduce(0b100, pivots) == fully_reduce(0b111, pivots)

    def test_coordinates_use_greedy_basis(self):
        rank, coords, basis = coordinates([3, 5, 6])
        assert rank == 2
        assert coords == (1, 2, 3)
        assert basis == (0, 1)

    def test_coordinates_keep_zero_columns(self):
        rank, coords, basis = coordinates([0, 4, 4])
        assert rank == 1
        assert coords == (0, 1, 1)
        assert basis == (1,)


class TestGf2Matrix:
    def test_from_rows_packs_columns(self):
        matrix = Gf2Matrix.from_rows([[1, 0], [1, 1]])
        assert matrix.data == (3, 2)
        assert matrix.to_rows() == [[1, 0], [1, 1]]

    def test_stack_and_augment(self):
        matrix = Gf2Matrix.from_rows([[1, 0]]).stack(Gf2Matrix.from_rows([[0, 1]]))
        assert matrix.to_rows() == [[1, 0], [0, 1]]
        assert matrix.augment([1, 1]).to_rows() == [[1, 0, 1], [0, 1, 1]]

    def test_dimension_limit(self):
        with pytest.raises(UnsupportedSizeError):
            Gf2Matrix(16, 1, (0,))

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            Gf2Matrix.from_rows([[1, 0], [1]])
