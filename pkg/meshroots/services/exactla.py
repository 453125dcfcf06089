"""
Exact linear algebra over ℚ.

Complexes are first shrunk by cancelling ±1 entries of their differentials
(Gaussian elimination on the complex, which preserves homology). Whatever
survives is ranked with sympy's sparse ``DomainMatrix`` over ``QQ``;
nothing here touches floating point.
"""
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import structlog
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from meshroots.config import settings
from meshroots.core.exceptions import NotAComplexException, SizeLimitExceededException
from meshroots.domain.entities.linalg import ComplexDims, SparseIntMatrix

logger = structlog.get_logger(__name__)

UNITS = (1, -1)


class EliminationMatrix:
    """
    Mutable row/column index over an integer matrix.

    Only unit pivots are eliminated, so every entry stays an integer.
    """

    def __init__(self, matrix: SparseIntMatrix):
        self.shape = matrix.shape
        self.rows: Dict[int, Dict[int, int]] = {}
        self.cols: Dict[int, Dict[int, int]] = {}
        for (row, col), value in matrix.entries.items():
            self._set(row, col, value)

    @property
    def nnz(self) -> int:
        return sum(len(entries) for entries in self.rows.values())

    def drop_row(self, row: int):
        for col in self.rows.pop(row, {}):
            column = self.cols[col]
            del column[row]
            if not column:
                del self.cols[col]

    def drop_col(self, col: int):
        for row in self.cols.pop(col, {}):
            entries = self.rows[row]
            del entries[col]
            if not entries:
                del self.rows[row]

    def pivot(self, row: int, col: int):
        """Schur complement on the unit entry (row, col); row and col are removed."""
        unit = self.rows[row][col]
        pivot_row = dict(self.rows[row])
        pivot_col = dict(self.cols[col])
        self.drop_row(row)
        self.drop_col(col)
        for other_row, scale in pivot_col.items():
            if other_row == row:
                continue
            factor = scale * unit
            for other_col, value in pivot_row.items():
                if other_col == col:
                    continue
                current = self.rows.get(other_row, {}).get(other_col, 0)
                self._set(other_row, other_col, current - factor * value)

    def eliminate_units(self, on_pivot: Optional[Callable[[int, int], None]] = None) -> int:
        """
        Pivot on ±1 entries until none is left.

        Columns are visited shortest first and the shortest eligible row is
        taken, which keeps fill-in low on path complexes.

        Returns:
            Number of pivots performed (each one contributes 1 to the rank)
        """
        pivots = 0
        progress = True
        while progress:
            progress = False
            for col in sorted(self.cols, key=lambda c: (len(self.cols[c]), c)):
                column = self.cols.get(col)
                if not column:
                    continue
                units = [row for row, value in column.items() if value in UNITS]
                if not units:
                    continue
                row = min(units, key=lambda r: (len(self.rows[r]), r))
                self.pivot(row, col)
                if on_pivot is not None:
                    on_pivot(row, col)
                pivots += 1
                progress = True
        return pivots

    def remainder_rank(self) -> int:
        if not self.rows:
            return 0
        dod = {
            row: {col: QQ(value) for col, value in entries.items()}
            for row, entries in self.rows.items()
        }
        return DomainMatrix(dod, self.shape, QQ).rank()

    def _set(self, row: int, col: int, value: int):
        if value:
            self.rows.setdefault(row, {})[col] = value
            self.cols.setdefault(col, {})[row] = value
            return
        entries = self.rows.get(row)
        if entries is None or col not in entries:
            return
        del entries[col]
        if not entries:
            del self.rows[row]
        column = self.cols[col]
        del column[row]
        if not column:
            del self.cols[col]


def to_domain_matrix(matrix: SparseIntMatrix) -> DomainMatrix:
    dod = {
        row: {col: QQ(value) for col, value in cols.items()}
        for row, cols in matrix.to_dod().items()
    }
    return DomainMatrix(dod, matrix.shape, QQ)


def _check_cutoff(matrix: SparseIntMatrix, cutoff: Optional[int]):
    limit = cutoff if cutoff is not None else settings.MATRIX_ENTRY_CUTOFF
    if matrix.nnz > limit:
        raise SizeLimitExceededException("matrix entries", matrix.nnz, limit)


def rank(matrix: SparseIntMatrix, cutoff: Optional[int] = None) -> int:
    """
    Rank over ℚ.

    Raises:
        SizeLimitExceededException: If the matrix stores more nonzero
            entries than the cutoff (MATRIX_ENTRY_CUTOFF by default)
    """
    _check_cutoff(matrix, cutoff)
    if matrix.nnz == 0:
        return 0
    working = EliminationMatrix(matrix)
    return working.eliminate_units() + working.remainder_rank()


def composes_to_zero(left: SparseIntMatrix, right: SparseIntMatrix) -> bool:
    """True iff left · right is the zero matrix."""
    if left.cols != right.rows:
        raise ValueError(f"Cannot compose {left.shape} with {right.shape}")
    if left.nnz == 0 or right.nnz == 0:
        return True
    product = to_domain_matrix(left).matmul(to_domain_matrix(right))
    return product.is_zero_matrix


def reduce_complex(differentials: Sequence[SparseIntMatrix]) -> Tuple[List[EliminationMatrix], List[int]]:
    """
    Cancel unit entries of every d_k.

    A pivot of d_k at (a, b) removes the pair b ∈ C_k, a ∈ C_{k-1}: row b
    leaves d_{k+1} and column a leaves d_{k-1}. Ranks of the neighbours are
    unchanged and rank d_k drops by one per pivot.

    Returns:
        The reduced differentials and the pivot count of each
    """
    matrices = [EliminationMatrix(matrix) for matrix in differentials]
    pivots = [0] * len(matrices)

    for index, matrix in enumerate(matrices):
        def cancel(row: int, col: int, index: int = index):
            if index + 1 < len(matrices):
                matrices[index + 1].drop_row(col)
            if index > 0:
                matrices[index - 1].drop_col(row)

        pivots[index] = matrix.eliminate_units(cancel)
    return matrices, pivots


def homology_dims(
    chain_dims: Sequence[int],
    differentials: Sequence[SparseIntMatrix],
    cutoff: Optional[int] = None,
) -> ComplexDims:
    """
    Homology of C_K → ... → C_1 → C_0.

    Args:
        chain_dims: dim C_k for k = 0..K
        differentials: d_k : C_k → C_{k-1} for k = 1..K, each of shape
            (dim C_{k-1}, dim C_k)
        cutoff: Per-matrix nonzero-entry cutoff

    Returns:
        ComplexDims with H_k = dim C_k − rank d_k − rank d_{k+1}

    Raises:
        NotAComplexException: If some d_k ∘ d_{k+1} is nonzero
    """
    dims = tuple(chain_dims)
    if len(differentials) != max(len(dims) - 1, 0):
        raise ValueError("Expected one differential between consecutive degrees")
    for k, matrix in enumerate(differentials, start=1):
        if matrix.shape != (dims[k - 1], dims[k]):
            raise ValueError(f"d_{k} has shape {matrix.shape}, expected {(dims[k - 1], dims[k])}")
        _check_cutoff(matrix, cutoff)

    for k in range(1, len(differentials)):
        if not composes_to_zero(differentials[k - 1], differentials[k]):
            logger.error("Differential does not square to zero", degree=k)
            raise NotAComplexException(k)

    reduced, pivots = reduce_complex(differentials)
    ranks = tuple(count + matrix.remainder_rank() for count, matrix in zip(pivots, reduced))
    logger.debug(
        "Complex reduced",
        chain_dims=list(dims),
        pivots=pivots,
        remainder_nnz=[matrix.nnz for matrix in reduced],
    )

    homology = []
    for k, dim in enumerate(dims):
        outgoing = ranks[k - 1] if k >= 1 else 0
        incoming = ranks[k] if k < len(ranks) else 0
        homology.append(dim - outgoing - incoming)
    return ComplexDims(chain_dims=dims, homology=tuple(homology), ranks=ranks)
