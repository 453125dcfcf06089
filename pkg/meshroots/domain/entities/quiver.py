from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional, Tuple, Union

from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph


class QuiverMode(str, Enum):
    """Finite window of Γ̂ or its cyclic quotient Γ̂_cyc."""
    WINDOW = "window"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class HatVertex:
    """Vertex (i, n) of Γ̂; in cyclic mode n is a residue mod 2h."""
    node: int
    level: int

    def __post_init__(self):
        if self.node < 1:
            raise ValueError("Nodes are numbered from 1")

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (self.level, self.node)

    def as_pair(self) -> Tuple[int, int]:
        return (self.node, self.level)

    def __str__(self) -> str:
        return f"{self.node}_{self.level}"


@dataclass(frozen=True)
class HeightFunction:
    """
    Height function 𝐡: node → ℤ, stored as values[i - 1] = 𝐡(i).

    Edge and parity conditions depend on the graph and are checked by
    hatquiver.validate_height.
    """
    values: Tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("Height function needs at least one node")

    def __call__(self, node: int) -> int:
        return self.values[node - 1]

    def shifted(self, amount: int) -> "HeightFunction":
        return HeightFunction(tuple(value + amount for value in self.values))

    def with_value(self, node: int, value: int) -> "HeightFunction":
        values = list(self.values)
        values[node - 1] = value
        return HeightFunction(tuple(values))


@dataclass(frozen=True)
class Slice:
    """Slice {(i, 𝐡(i))} with its induced orientation Ω_𝐡."""
    height: HeightFunction
    vertices: Tuple[HatVertex, ...]
    orientation: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        nodes = [vertex.node for vertex in self.vertices]
        if len(set(nodes)) != len(nodes):
            raise ValueError("A slice has one vertex per node")

    def vertex_of(self, node: int) -> HatVertex:
        return self.vertices[node - 1]


@dataclass(frozen=True)
class HatQuiver:
    """
    Γ̂ restricted to a level window, or Γ̂_cyc.

    Arrows are ((i, n), (j, n+1)) pairs, one per edge of Γ and source level.
    """
    diagram: Union[DynkinDiagram, TreeGraph]
    mode: QuiverMode
    vertices: Tuple[HatVertex, ...]
    arrows: Tuple[Tuple[HatVertex, HatVertex], ...]
    lo: Optional[int] = None
    hi: Optional[int] = None
    period: Optional[int] = None

    def __post_init__(self):
        if self.mode == QuiverMode.WINDOW:
            if self.lo is None or self.hi is None or self.lo > self.hi:
                raise ValueError("Window mode needs lo <= hi")
        elif not self.period:
            raise ValueError("Cyclic mode needs a period")

    @property
    def is_cyclic(self) -> bool:
        return self.mode == QuiverMode.CYCLIC

    def contains(self, vertex: HatVertex) -> bool:
        return vertex in self._vertex_set

    @cached_property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def successors(self, vertex: HatVertex) -> Tuple[HatVertex, ...]:
        return tuple(target for source, target in self.arrows if source == vertex)

    def predecessors(self, vertex: HatVertex) -> Tuple[HatVertex, ...]:
        return tuple(source for source, target in self.arrows if target == vertex)
