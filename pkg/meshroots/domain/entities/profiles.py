from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Tuple, Union

from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph
from meshroots.domain.entities.quiver import HatVertex

IntMatrix = Tuple[Tuple[int, ...], ...]


class HomMethod(str, Enum):
    """How a HomTable was computed."""
    QUOTIENT = "quotient"
    KNITTING = "knitting"
    ORACLE = "oracle"


@dataclass(frozen=True)
class RHomProfile:
    """(hom, ext1) between X_q and X_q′ in the 2-periodic category."""
    source: HatVertex
    target: HatVertex
    hom: int
    ext1: int

    def __post_init__(self):
        if self.hom < 0 or self.ext1 < 0:
            raise ValueError("Dimensions are nonnegative")

    @property
    def euler(self) -> int:
        return self.hom - self.ext1

    @classmethod
    def from_euler(cls, source: HatVertex, target: HatVertex, euler: int) -> "RHomProfile":
        """Split an Euler value by sign (single-degree concentration)."""
        return cls(source, target, max(euler, 0), max(-euler, 0))


@dataclass(frozen=True)
class HomTable:
    """RHomProfile for every ordered pair of vertices of Γ̂_cyc."""
    diagram: Union[DynkinDiagram, TreeGraph]
    method: HomMethod
    vertices: Tuple[HatVertex, ...]
    profiles: Dict[Tuple[HatVertex, HatVertex], RHomProfile] = field(hash=False)

    def __post_init__(self):
        expected = len(self.vertices) ** 2
        if len(self.profiles) != expected:
            raise ValueError(f"Table must be total: {len(self.profiles)} of {expected} pairs")

    def get(self, source: HatVertex, target: HatVertex) -> RHomProfile:
        return self.profiles[(source, target)]

    def hom(self, source: HatVertex, target: HatVertex) -> int:
        return self.profiles[(source, target)].hom

    def ext1(self, source: HatVertex, target: HatVertex) -> int:
        return self.profiles[(source, target)].ext1

    def rows(self):
        """Profiles in (source, target) vertex order."""
        for source in self.vertices:
            for target in self.vertices:
                yield self.profiles[(source, target)]


@dataclass(frozen=True)
class RootClass:
    """Grothendieck-group class in the simple-module basis."""
    vector: Tuple[int, ...]

    def __neg__(self) -> "RootClass":
        return RootClass(tuple(-value for value in self.vector))

    def __str__(self) -> str:
        return "(" + ",".join(str(value) for value in self.vector) + ")"


@dataclass(frozen=True)
class BilinearForms:
    """Euler form of (Γ, Ω_𝐡) and its symmetrization."""
    euler_matrix: IntMatrix
    sym_matrix: IntMatrix

    def euler(self, x: Tuple[int, ...], y: Tuple[int, ...]) -> int:
        return _pair(self.euler_matrix, x, y)

    def sym(self, x: Tuple[int, ...], y: Tuple[int, ...]) -> int:
        return _pair(self.sym_matrix, x, y)


@dataclass(frozen=True)
class RootSystemOracle:
    """Root system produced by reflection closure of the simple roots."""
    roots: FrozenSet[Tuple[int, ...]]
    positive_roots: FrozenSet[Tuple[int, ...]]
    reflections: Tuple[IntMatrix, ...]
    longest_element: IntMatrix

    def __post_init__(self):
        if 2 * len(self.positive_roots) != len(self.roots):
            raise ValueError("Exactly half of the roots are positive")


@dataclass(frozen=True)
class CoxeterElement:
    """Matrix C with C·c(q) = c(τq), and its multiplicative order."""
    matrix: IntMatrix
    order: int


def _pair(matrix: IntMatrix, x: Tuple[int, ...], y: Tuple[int, ...]) -> int:
    return sum(
        x[row] * matrix[row][col] * y[col]
        for row in range(len(x))
        for col in range(len(y))
        if matrix[row][col]
    )


@dataclass(frozen=True)
class PeriodicityRow:
    """Homology of A_{i,j;l} next to that of A_{i,j;l+2h}."""
    i: int
    j: int
    l: int
    lower: Tuple[int, ...]
    upper: Tuple[int, ...]
    holds: bool


@dataclass(frozen=True)
class PeriodicityReport:
    rows: Tuple[PeriodicityRow, ...]
    skipped: Tuple[Tuple[int, int, int], ...] = ()

    @property
    def passed(self) -> bool:
        return all(row.holds for row in self.rows)

    @property
    def failures(self) -> Tuple[PeriodicityRow, ...]:
        return tuple(row for row in self.rows if not row.holds)
