from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Tuple


class DiagramFamily(str, Enum):
    """Simply-laced Dynkin families."""
    A = "A"
    D = "D"
    E = "E"


@dataclass(frozen=True)
class TreeGraph:
    """
    Finite tree Γ with nodes 1..n.

    Used directly for non-Dynkin runs (e.g. the 4-star D̃_4); Dynkin
    diagrams extend it with Cartan/Coxeter data.
    """
    nodes: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    label: str = "tree"

    def __post_init__(self):
        """Validate tree structure."""
        self._validate()

    def _validate(self):
        if tuple(self.nodes) != tuple(range(1, len(self.nodes) + 1)):
            raise ValueError("Nodes must be 1..n")
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"Loop at node {a}")
            if a not in self.nodes or b not in self.nodes:
                raise ValueError(f"Edge {a}-{b} uses an unknown node")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"Multiple edge {key[0]}-{key[1]}")
            seen.add(key)
        if len(self.edges) != len(self.nodes) - 1:
            raise ValueError("A tree on n nodes has n-1 edges")
        if self.nodes and len(self._component_of(1)) != len(self.nodes):
            raise ValueError("Graph is not connected")

    def _component_of(self, start: int) -> set:
        reached = {start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for other in self.neighbors(node):
                if other not in reached:
                    reached.add(other)
                    queue.append(other)
        return reached

    @property
    def rank(self) -> int:
        return len(self.nodes)

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        neighbors = {node: [] for node in self.nodes}
        for a, b in self.edges:
            neighbors[a].append(b)
            neighbors[b].append(a)
        return {node: tuple(sorted(values)) for node, values in neighbors.items()}

    def neighbors(self, node: int) -> Tuple[int, ...]:
        return self.adjacency[node]

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency.get(a, ())

    @cached_property
    def sorted_edges(self) -> Tuple[Tuple[int, int], ...]:
        """Global edge order: sorted unordered node pairs."""
        return tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))

    @cached_property
    def parity(self) -> Dict[int, int]:
        """Proper 2-coloring by BFS from node 1, normalized to p(1) = 0."""
        colors = {1: 0}
        queue = deque([1])
        while queue:
            node = queue.popleft()
            for other in self.neighbors(node):
                if other not in colors:
                    colors[other] = 1 - colors[node]
                    queue.append(other)
        return colors

    @cached_property
    def cartan(self) -> Tuple[Tuple[int, ...], ...]:
        """(Generalized) Cartan matrix, rows/cols indexed by node-1."""
        return tuple(
            tuple(
                2 if i == j else (-1 if self.has_edge(i, j) else 0)
                for j in self.nodes
            )
            for i in self.nodes
        )

    @property
    def is_dynkin(self) -> bool:
        return False


@dataclass(frozen=True, kw_only=True)
class DynkinDiagram(TreeGraph):
    """
    Simply-laced Dynkin diagram with standard labeling.

    A_n: path 1-2-...-n
    D_n: path 1..n-2, with n-1 and n attached to n-2
    E_n: path 1..n-1, with n attached to node 3
    """
    family: DiagramFamily
    coxeter_number: int
    involution: Tuple[int, ...] = field(default=())

    def _validate(self):
        super()._validate()
        if self.coxeter_number <= 0:
            raise ValueError("Coxeter number must be positive")
        if len(self.involution) != self.rank:
            raise ValueError("Involution must map every node")
        for node in self.nodes:
            image = self.check(node)
            if self.check(image) != node:
                raise ValueError("Involution must have order at most 2")
        for a, b in self.edges:
            if not self.has_edge(self.check(a), self.check(b)):
                raise ValueError("Involution must preserve edges")

    def check(self, node: int) -> int:
        """The involution i ↦ ǐ."""
        return self.involution[node - 1]

    @property
    def is_dynkin(self) -> bool:
        return True

    @property
    def spec(self) -> str:
        return f"{self.family.value}{self.rank}"
