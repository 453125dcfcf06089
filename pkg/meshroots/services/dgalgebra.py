"""
The dg-preprojective algebra A as paths with jumps.

A basis path from i to j of length l with k jumps lives in the graded
component A^{-k}_{i,j;l}. The differential replaces the a-th jump l_u
by (−1)^{a+1} θ_u, where θ_u = Σ_{u~w} ε(u→w)·(u→w→u).
"""
from functools import cache
from typing import Dict, List, Optional, Tuple, Union

import structlog

from meshroots.config import settings
from meshroots.core.exceptions import SizeLimitExceededException, WindowExceededException
from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph
from meshroots.domain.entities.linalg import ComplexDims, SparseIntMatrix
from meshroots.domain.entities.paths import EpsilonChoice, GradedComponent, JumpPath, Step
from meshroots.domain.entities.quiver import HatQuiver, HatVertex
from meshroots.domain.mappers.component_mapper import ComponentMapper
from meshroots.schemas.documents import ComponentDocument
from meshroots.services import exactla

logger = structlog.get_logger(__name__)

Graph = Union[DynkinDiagram, TreeGraph]
FormalSum = Dict[JumpPath, int]


# ==================== SIGNS AND MESH ELEMENTS ====================

def default_epsilon(graph: Graph) -> EpsilonChoice:
    """ε = +1 from the parity-0 end of each edge, −1 on the reversal."""
    signs = {}
    for a, b in graph.sorted_edges:
        low, high = (a, b) if graph.parity[a] == 0 else (b, a)
        signs[(low, high)] = 1
        signs[(high, low)] = -1
    return EpsilonChoice(signs)


def theta(graph: Graph, eps: EpsilonChoice, node: int) -> FormalSum:
    """θ_i = Σ_{i~w} ε(i→w)·(i→w→i), an element of A⁰_{i,i;2}."""
    return {
        JumpPath(node, (Step.edge(node, other), Step.edge(other, node))): eps(node, other)
        for other in graph.neighbors(node)
    }


# ==================== COUNTING ====================

@cache
def count_paths(graph: Graph, i: int, j: int, l: int, k: int) -> int:
    """
    #paths with jumps from i to j of length l with k jumps.

    N(i→j, l, k) = Σ_{m~j} N(i→m, l−1, k) + N(i→j, l−2, k−1)
    """
    if l < 0 or k < 0 or 2 * k > l:
        return 0
    if l == 0:
        return 1 if i == j and k == 0 else 0
    total = sum(count_paths(graph, i, m, l - 1, k) for m in graph.neighbors(j))
    return total + count_paths(graph, i, j, l - 2, k - 1)


def component_size(graph: Graph, i: int, j: int, l: int) -> int:
    return sum(count_paths(graph, i, j, l, k) for k in range(l // 2 + 1))


def generator_counts(graph: Graph, i: int, j: int, l: int, k: int) -> int:
    """
    Paths with k ≥ 1 jumps counted by splitting at the last jump:
    Σ_{m, l′} N_{k−1}(i→m, l′−2) · N_0(m→j, l−l′).

    Equals count_paths(graph, i, j, l, k); the two sides agreeing is the
    free-generation statement for the projectives X_q^k.
    """
    if k < 1:
        return count_paths(graph, i, j, l, 0)
    return sum(
        count_paths(graph, i, m, split - 2, k - 1) * count_paths(graph, m, j, l - split, 0)
        for m in graph.nodes
        for split in range(2, l + 1)
    )


# ==================== BASES ====================

def enumerate_basis(
    graph: Graph,
    i: int,
    j: int,
    l: int,
    k: int,
    cutoff: Optional[int] = None,
) -> List[JumpPath]:
    """
    All paths with jumps i → j of length l and exactly k jumps.

    Order is lexicographic on steps; at each node edges come first by
    target node, then the jump.

    Raises:
        SizeLimitExceededException: If the count exceeds the cutoff
    """
    if l < 0 or k < 0 or 2 * k > l:
        raise ValueError(f"Need l >= 0 and 0 <= 2k <= l, got l={l}, k={k}")
    limit = cutoff if cutoff is not None else settings.CUTOFF
    total = count_paths(graph, i, j, l, k)
    if total > limit:
        raise SizeLimitExceededException(f"basis of A^-{k}_{{{i},{j};{l}}}", total, limit)

    paths: List[JumpPath] = []

    def extend(node: int, steps: Tuple[Step, ...], length: int, jumps: int):
        if length == 0 and jumps == 0:
            if node == j:
                paths.append(JumpPath(i, steps))
            return
        options = [Step.edge(node, other) for other in graph.neighbors(node)]
        options.append(Step.jump(node))
        for step in sorted(options, key=lambda s: s.sort_key):
            rest_length = length - step.length
            rest_jumps = jumps - (1 if step.is_jump else 0)
            if count_paths(graph, step.end, j, rest_length, rest_jumps):
                extend(step.end, steps + (step,), rest_length, rest_jumps)

    if total:
        extend(i, (), l, k)
    return paths


def multiply(p: JumpPath, q: JumpPath) -> Optional[JumpPath]:
    """p·q: q followed by p if q ends where p starts, else zero (None)."""
    if q.target != p.source:
        return None
    return JumpPath(q.source, q.steps + p.steps)


# ==================== DIFFERENTIAL ====================

def apply_differential(graph: Graph, eps: EpsilonChoice, path: JumpPath) -> FormalSum:
    """d(p) = Σ_a (−1)^{a+1} p_1 l … p_a θ_{i_a} p_{a+1} …"""
    result: FormalSum = {}
    for a, position in enumerate(path.jump_positions(), start=1):
        node = path.steps[position].start
        sign = 1 if a % 2 == 1 else -1
        prefix = path.steps[:position]
        suffix = path.steps[position + 1:]
        for term, coefficient in theta(graph, eps, node).items():
            image = JumpPath(path.source, prefix + term.steps + suffix)
            result[image] = result.get(image, 0) + sign * coefficient
    return {image: value for image, value in result.items() if value}


def build_component(
    graph: Graph,
    i: int,
    j: int,
    l: int,
    eps: Optional[EpsilonChoice] = None,
    cutoff: Optional[int] = None,
) -> GradedComponent:
    """
    Bases and differentials of A_{i,j;l}.

    Raises:
        SizeLimitExceededException: If the total basis exceeds the cutoff
    """
    limit = cutoff if cutoff is not None else settings.CUTOFF
    total = component_size(graph, i, j, l)
    if total > limit:
        raise SizeLimitExceededException(f"component A_{{{i},{j};{l}}}", total, limit)
    eps = eps or default_epsilon(graph)

    bases = tuple(
        tuple(enumerate_basis(graph, i, j, l, k, cutoff=limit))
        for k in range(l // 2 + 1)
    )
    differentials = tuple(
        _differential_matrix(graph, eps, bases[k], bases[k - 1])
        for k in range(1, len(bases))
    )
    logger.debug(
        "Component built",
        i=i,
        j=j,
        l=l,
        chain_dims=[len(basis) for basis in bases],
    )
    return GradedComponent(
        diagram=graph,
        i=i,
        j=j,
        l=l,
        bases=bases,
        differentials=differentials,
    )


def differential(component: GradedComponent) -> Tuple[SparseIntMatrix, ...]:
    """Matrices d_k : C_k → C_{k−1} in the canonical bases, k = 1..K."""
    return component.differentials


def _differential_matrix(
    graph: Graph,
    eps: EpsilonChoice,
    domain_basis: Tuple[JumpPath, ...],
    codomain_basis: Tuple[JumpPath, ...],
) -> SparseIntMatrix:
    index = {path: row for row, path in enumerate(codomain_basis)}
    entries = {}
    for col, path in enumerate(domain_basis):
        for image, value in apply_differential(graph, eps, path).items():
            entries[(index[image], col)] = value
    return SparseIntMatrix(len(codomain_basis), len(domain_basis), entries)


# ==================== HOMOLOGY ====================

def component_homology(
    graph: Graph,
    i: int,
    j: int,
    l: int,
    eps: Optional[EpsilonChoice] = None,
    cutoff: Optional[int] = None,
    matrix_cutoff: Optional[int] = None,
) -> ComplexDims:
    """dim H_k(A_{i,j;l}) for every jump degree k."""
    component = build_component(graph, i, j, l, eps=eps, cutoff=cutoff)
    return exactla.homology_dims(
        component.chain_dims,
        component.differentials,
        cutoff=matrix_cutoff,
    )


def path_algebra_quotient_dims(graph: Graph, i: int, j: int, l_max: int) -> List[int]:
    """dim e_i Π e_j in each length 0..l_max, read off as H₀ of components."""
    return [component_homology(graph, i, j, l).h(0) for l in range(l_max + 1)]


def projective_rank_data(quiver: HatQuiver, q: HatVertex, k: int) -> Dict[HatVertex, int]:
    """
    X_q^k(v) = #paths with k jumps from q to v, for v in the window.

    Raises:
        WindowExceededException: If q is outside the window
    """
    if quiver.is_cyclic:
        raise ValueError("Projective rank data needs a window quiver")
    if not quiver.contains(q):
        raise WindowExceededException(q.level, quiver.lo, quiver.hi)
    return {
        vertex: count_paths(quiver.diagram, q.node, vertex.node, vertex.level - q.level, k)
        for vertex in sorted(quiver.vertices, key=lambda v: v.sort_key)
    }


def component_to_document(
    component: GradedComponent,
    dims: Optional[ComplexDims] = None,
) -> ComponentDocument:
    return ComponentMapper.to_document(component, dims)
