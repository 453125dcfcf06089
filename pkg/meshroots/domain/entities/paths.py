from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple, Union

from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph
from meshroots.domain.entities.linalg import SparseIntMatrix


class StepKind(str, Enum):
    EDGE = "e"
    JUMP = "j"


@dataclass(frozen=True)
class Step:
    """
    One step of a path with jumps.

    An edge a→b raises the level by 1; a jump l_i stays at node i and
    raises the level by 2.
    """
    kind: StepKind
    start: int
    end: int

    def __post_init__(self):
        if self.kind == StepKind.JUMP and self.start != self.end:
            raise ValueError("A jump fixes its node")
        if self.kind == StepKind.EDGE and self.start == self.end:
            raise ValueError("An edge joins two distinct nodes")

    @classmethod
    def edge(cls, start: int, end: int) -> "Step":
        return cls(StepKind.EDGE, start, end)

    @classmethod
    def jump(cls, node: int) -> "Step":
        return cls(StepKind.JUMP, node, node)

    @property
    def is_jump(self) -> bool:
        return self.kind == StepKind.JUMP

    @property
    def length(self) -> int:
        return 2 if self.is_jump else 1

    @property
    def sort_key(self) -> Tuple[int, int]:
        """Canonical step order: edges by target node, then the jump."""
        return (1, self.start) if self.is_jump else (0, self.end)

    def __str__(self) -> str:
        if self.is_jump:
            return f"j({self.start})"
        return f"e({self.start}-{self.end})"


@dataclass(frozen=True)
class JumpPath:
    """Basis element of A: a source node followed by composable steps."""
    source: int
    steps: Tuple[Step, ...] = ()

    def __post_init__(self):
        current = self.source
        for step in self.steps:
            if step.start != current:
                raise ValueError(f"Step {step} does not start at node {current}")
            current = step.end

    @property
    def target(self) -> int:
        return self.steps[-1].end if self.steps else self.source

    @property
    def length(self) -> int:
        return sum(step.length for step in self.steps)

    @property
    def jump_count(self) -> int:
        return sum(1 for step in self.steps if step.is_jump)

    @property
    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(step.sort_key for step in self.steps)

    def jump_positions(self) -> Tuple[int, ...]:
        """Indices into steps of the jumps, in path order."""
        return tuple(index for index, step in enumerate(self.steps) if step.is_jump)

    def __str__(self) -> str:
        if not self.steps:
            return f"id({self.source})"
        return ";".join(str(step) for step in self.steps)


@dataclass(frozen=True)
class EpsilonChoice:
    """Sign function ε on oriented edges with ε(e) + ε(ē) = 0."""
    signs: Dict[Tuple[int, int], int] = field(hash=False)

    def __post_init__(self):
        for (a, b), sign in self.signs.items():
            if sign not in (1, -1):
                raise ValueError(f"ε({a}→{b}) must be ±1")
            if self.signs.get((b, a)) != -sign:
                raise ValueError(f"ε({a}→{b}) + ε({b}→{a}) must vanish")

    def __call__(self, start: int, end: int) -> int:
        return self.signs[(start, end)]

    def flipped(self, a: int, b: int) -> "EpsilonChoice":
        """Same choice with the sign of the edge {a, b} reversed."""
        signs = dict(self.signs)
        signs[(a, b)] = -signs[(a, b)]
        signs[(b, a)] = -signs[(b, a)]
        return EpsilonChoice(signs)

    @property
    def key(self) -> Tuple[Tuple[Tuple[int, int], int], ...]:
        return tuple(sorted(self.signs.items()))


@dataclass(frozen=True)
class GradedComponent:
    """
    Chain complex A_{i,j;l} = ⊕_k A^{-k}_{i,j;l}.

    bases[k] is the ordered basis with k jumps; differentials[k - 1] is
    d_k: span(bases[k]) → span(bases[k - 1]).
    """
    diagram: Union[DynkinDiagram, TreeGraph]
    i: int
    j: int
    l: int
    bases: Tuple[Tuple[JumpPath, ...], ...]
    differentials: Tuple[SparseIntMatrix, ...]

    @property
    def chain_dims(self) -> Tuple[int, ...]:
        return tuple(len(basis) for basis in self.bases)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * dim for k, dim in enumerate(self.chain_dims))
