from dataclasses import dataclass, field
from typing import Dict, List, Tuple


@dataclass(frozen=True)
class SparseIntMatrix:
    """Integer matrix stored as (row, col) → nonzero entry."""
    rows: int
    cols: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Matrix shape must be nonnegative")
        for (row, col), value in self.entries.items():
            if not (0 <= row < self.rows and 0 <= col < self.cols):
                raise ValueError(f"Entry ({row}, {col}) out of range")
            if value == 0:
                raise ValueError("Zero entries are not stored")

    @classmethod
    def from_dense(cls, rows: List[List[int]], cols: int | None = None) -> "SparseIntMatrix":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {
            (r, c): value
            for r, row in enumerate(rows)
            for c, value in enumerate(row)
            if value != 0
        }
        return cls(len(rows), width, entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(
            self.cols,
            self.rows,
            {(col, row): value for (row, col), value in self.entries.items()},
        )

    def to_dod(self) -> Dict[int, Dict[int, int]]:
        """Dict-of-dicts form: {row: {col: value}}."""
        dod: Dict[int, Dict[int, int]] = {}
        for (row, col), value in self.entries.items():
            dod.setdefault(row, {})[col] = value
        return dod

    def to_triplets(self) -> List[List[int]]:
        return [[row, col, value] for (row, col), value in sorted(self.entries.items())]


@dataclass(frozen=True)
class ComplexDims:
    """Chain dimensions and homology dimensions of a finite complex."""
    chain_dims: Tuple[int, ...]
    homology: Tuple[int, ...]
    ranks: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.chain_dims) != len(self.homology):
            raise ValueError("One homology dimension per chain degree")
        if any(value < 0 for value in self.homology):
            raise ValueError("Homology dimensions are nonnegative")

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * dim for k, dim in enumerate(self.chain_dims))

    @property
    def homology_euler_characteristic(self) -> int:
        return sum((-1) ** k * dim for k, dim in enumerate(self.homology))

    def h(self, k: int) -> int:
        """dim H_k, zero outside the stored range."""
        return self.homology[k] if 0 <= k < len(self.homology) else 0

    @property
    def nonzero_degrees(self) -> Tuple[int, ...]:
        return tuple(k for k, dim in enumerate(self.homology) if dim)
