import pytest
from sympy import Matrix

from meshroots.core.exceptions import NotAComplexException, SizeLimitExceededException
from meshroots.domain.entities.linalg import SparseIntMatrix
from meshroots.services import exactla


class TestRank:
    """Test suite for exact rank over ℚ"""

    @pytest.mark.parametrize("rows", [
        [[1, 2], [2, 4]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 0], [0, 0]],
        [[3, -1, 4, 1], [5, 9, -2, 6], [8, 8, 2, 7]],
        [[1, -1, 1]],
        [[1, 1, 0], [1, 0, 1], [0, 1, 1]],
        [[2, 1, 0], [4, 2, 3], [0, 3, 6]],
        [[2, 0], [0, 3]],
    ])
    def test_rank_matches_dense_rank(self, rows):
        """Test sparse rank against sympy's dense Matrix.rank"""
        assert exactla.rank(SparseIntMatrix.from_dense(rows)) == Matrix(rows).rank()

    def test_empty_shape(self):
        """Test a 0 x 3 matrix has rank 0"""
        assert exactla.rank(SparseIntMatrix(0, 3)) == 0

    def test_cutoff_raises_error(self):
        """Test matrices over the entry cutoff are refused"""
        matrix = SparseIntMatrix.from_dense([[1, 1, 1]])

        with pytest.raises(SizeLimitExceededException) as exc_info:
            exactla.rank(matrix, cutoff=2)

        assert exc_info.value.exit_status == 3
        assert exc_info.value.details["required"] == 3


class TestComposesToZero:
    """Test suite for d∘d checks"""

    def test_zero_composition(self):
        """Test [1, -1]·[1, 1]ᵀ = 0"""
        left = SparseIntMatrix.from_dense([[1, -1]])
        right = SparseIntMatrix.from_dense([[1], [1]])

        assert exactla.composes_to_zero(left, right) is True

    def test_nonzero_composition(self):
        """Test [1, 1]·[1, 1]ᵀ != 0"""
        left = SparseIntMatrix.from_dense([[1, 1]])
        right = SparseIntMatrix.from_dense([[1], [1]])

        assert exactla.composes_to_zero(left, right) is False

    def test_shape_mismatch_raises_error(self):
        """Test incompatible shapes are rejected"""
        with pytest.raises(ValueError, match="Cannot compose"):
            exactla.composes_to_zero(SparseIntMatrix(1, 2), SparseIntMatrix(3, 1))


class TestHomologyDims:
    """Test suite for homology of finite complexes"""

    def test_surjection_onto_degree_zero(self):
        """Test ℚ² → ℚ by [1, 0] leaves H_1 = 1 and H_0 = 0"""
        dims = exactla.homology_dims((1, 2), [SparseIntMatrix.from_dense([[1, 0]])])

        assert dims.homology == (0, 1)
        assert dims.ranks == (1,)

    def test_single_degree(self):
        """Test a complex with no differentials"""
        dims = exactla.homology_dims((3,), [])

        assert dims.homology == (3,)

    def test_exact_complex(self):
        """Test 0 → ℚ → ℚ² → ℚ → 0 exact"""
        d1 = SparseIntMatrix.from_dense([[1, 1]])
        d2 = SparseIntMatrix.from_dense([[1], [-1]])

        dims = exactla.homology_dims((1, 2, 1), [d1, d2])

        assert dims.homology == (0, 0, 0)
        assert dims.euler_characteristic == dims.homology_euler_characteristic == 0

    def test_not_a_complex_raises_error(self):
        """Test d_1 ∘ d_2 != 0 is reported"""
        one = SparseIntMatrix.from_dense([[1]])

        with pytest.raises(NotAComplexException) as exc_info:
            exactla.homology_dims((1, 1, 1), [one, one])

        assert exc_info.value.code == "LA_002"
        assert exc_info.value.details == {"degree": 1}

    def test_wrong_shape_raises_error(self):
        """Test d_k must have shape (dim C_{k-1}, dim C_k)"""
        with pytest.raises(ValueError, match="expected"):
            exactla.homology_dims((1, 2), [SparseIntMatrix.from_dense([[1], [0]])])

    def test_wrong_count_raises_error(self):
        """Test one differential per pair of consecutive degrees"""
        with pytest.raises(ValueError, match="one differential"):
            exactla.homology_dims((1, 2), [])

    def test_non_unit_remainder(self):
        """Test ℚ →(2) ℚ is exact: the remainder goes to DomainMatrix"""
        dims = exactla.homology_dims((1, 1), [SparseIntMatrix.from_dense([[2]])])

        assert dims.homology == (0, 0)
        assert dims.ranks == (1,)

    def test_homology_survives_reduction(self):
        """Test ℚ³ →([1, 1, 0]) ℚ keeps a two-dimensional H_1"""
        dims = exactla.homology_dims((1, 3), [SparseIntMatrix.from_dense([[1, 1, 0]])])

        assert dims.homology == (0, 2)


class TestEliminationMatrix:
    """Test suite for unit-pivot elimination"""

    def test_pivot_takes_schur_complement(self):
        """Test pivoting [[1, 2], [3, 4]] at (0, 0) leaves 4 − 3·2 = −2"""
        matrix = exactla.EliminationMatrix(SparseIntMatrix.from_dense([[1, 2], [3, 4]]))

        matrix.pivot(0, 0)

        assert matrix.rows == {1: {1: -2}}
        assert matrix.cols == {1: {1: -2}}

    def test_cancellation_removes_zero_entries(self):
        """Test fill-in that cancels to zero is not stored"""
        matrix = exactla.EliminationMatrix(SparseIntMatrix.from_dense([[1, 1], [1, 1]]))

        assert matrix.eliminate_units() == 1
        assert matrix.nnz == 0
        assert matrix.remainder_rank() == 0

    def test_only_unit_pivots(self):
        """Test entries other than ±1 are left for the exact rank"""
        matrix = exactla.EliminationMatrix(SparseIntMatrix.from_dense([[2, 0], [0, -1]]))

        assert matrix.eliminate_units() == 1
        assert matrix.rows == {0: {0: 2}}
        assert matrix.remainder_rank() == 1

    def test_reduce_complex_cancels_neighbours(self):
        """Test 0 → ℚ → ℚ² → ℚ → 0 reduces to nothing"""
        d1 = SparseIntMatrix.from_dense([[1, 1]])
        d2 = SparseIntMatrix.from_dense([[1], [-1]])

        reduced, pivots = exactla.reduce_complex([d1, d2])

        assert pivots == [1, 1]
        assert [matrix.nnz for matrix in reduced] == [0, 0]
