import re
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

import structlog

from meshroots.config import settings
from meshroots.core.exceptions import (
    InvalidTreeException,
    UnsupportedDiagramException,
)
from meshroots.domain.entities.diagram import DiagramFamily, DynkinDiagram, TreeGraph
from meshroots.services import weyl

logger = structlog.get_logger(__name__)

DIAGRAM_SPEC = re.compile(r"^([ADE])([0-9]+)$")


def parse_diagram_spec(text: str) -> Tuple[DiagramFamily, int]:
    """
    Parse a diagram spec string like "A4", "D5" or "E8".

    Raises:
        UnsupportedDiagramException: If the text does not match /^[ADE][0-9]+$/
            or names a diagram outside the ADE list
    """
    match = DIAGRAM_SPEC.match(text or "")
    if not match:
        raise UnsupportedDiagramException(text)
    family = DiagramFamily(match.group(1))
    rank = int(match.group(2))
    _check_supported(family, rank)
    return family, rank


def diagram_from_spec(text: str) -> DynkinDiagram:
    family, rank = parse_diagram_spec(text)
    return build_diagram(family, rank)


@lru_cache(maxsize=None)
def build_diagram(family: DiagramFamily | str, rank: int) -> DynkinDiagram:
    """
    Build the Dynkin diagram of the given family and rank.

    Labeling:
        A_n: path 1-2-...-n
        D_n: path 1..n-2, with n-1 and n attached to n-2
        E_n: path 1..n-1, with n attached to node 3

    The Coxeter number is the order of s_1 s_2 ... s_n, computed here and
    not read from a table.

    Raises:
        UnsupportedDiagramException: For (family, rank) outside
            A_n (n>=1), D_n (n>=4), E_6, E_7, E_8
    """
    try:
        family = DiagramFamily(family)
    except ValueError:
        raise UnsupportedDiagramException(f"{family}{rank}")
    _check_supported(family, rank)

    edges = standard_edges(family, rank)
    graph = TreeGraph(nodes=tuple(range(1, rank + 1)), edges=edges)
    product = weyl.reflection_product(graph.cartan, range(rank))
    coxeter_number = weyl.matrix_order(product, limit=settings.ROOT_CLOSURE_LIMIT)
    if coxeter_number is None:
        raise UnsupportedDiagramException(f"{family.value}{rank}")

    diagram = DynkinDiagram(
        nodes=graph.nodes,
        edges=edges,
        label=f"{family.value}{rank}",
        family=family,
        coxeter_number=coxeter_number,
        involution=standard_involution(family, rank),
    )
    logger.debug(
        "Diagram built",
        diagram=diagram.spec,
        coxeter_number=coxeter_number,
    )
    return diagram


def standard_edges(family: DiagramFamily, rank: int) -> Tuple[Tuple[int, int], ...]:
    if family == DiagramFamily.A:
        return tuple((i, i + 1) for i in range(1, rank))
    if family == DiagramFamily.D:
        path = [(i, i + 1) for i in range(1, rank - 2)]
        return tuple(path + [(rank - 2, rank - 1), (rank - 2, rank)])
    path = [(i, i + 1) for i in range(1, rank - 1)]
    return tuple(path + [(3, rank)])


def standard_involution(family: DiagramFamily, rank: int) -> Tuple[int, ...]:
    """Table of ǐ in the standard labeling, checked by involution_check."""
    identity = list(range(1, rank + 1))
    if family == DiagramFamily.A:
        return tuple(rank + 1 - i for i in identity)
    if family == DiagramFamily.D and rank % 2 == 1:
        identity[rank - 2], identity[rank - 1] = rank, rank - 1
        return tuple(identity)
    if family == DiagramFamily.E and rank == 6:
        return (5, 4, 3, 2, 1, 6)
    return tuple(identity)


def parity(diagram: TreeGraph, node: int) -> int:
    return diagram.parity[node]


def involution_check(diagram: DynkinDiagram) -> bool:
    """True iff −α_i = w₀(α_ǐ) for every node, w₀ computed by greedy descent."""
    longest = weyl.longest_element(diagram.cartan, limit=settings.ROOT_CLOSURE_LIMIT)
    computed = weyl.involution_from_longest(longest)
    stored = {node: diagram.check(node) for node in diagram.nodes}
    if computed != stored:
        logger.warning(
            "Involution mismatch",
            diagram=diagram.spec,
            stored=stored,
            computed=computed,
        )
        return False
    return True


def build_tree(node_count: int, edges: Iterable[Sequence[int]], label: str = "tree") -> TreeGraph:
    """
    Build a custom tree for non-Dynkin runs.

    Raises:
        InvalidTreeException: If the edge list is not a tree on 1..node_count
    """
    edge_list: List[Tuple[int, int]] = []
    for edge in edges:
        if len(edge) != 2:
            raise InvalidTreeException(f"edge {list(edge)} must have two endpoints")
        edge_list.append((int(edge[0]), int(edge[1])))
    try:
        return TreeGraph(
            nodes=tuple(range(1, node_count + 1)),
            edges=tuple(edge_list),
            label=label,
        )
    except ValueError as e:
        raise InvalidTreeException(str(e))


def _check_supported(family: DiagramFamily, rank: int):
    supported = (
        (family == DiagramFamily.A and rank >= 1)
        or (family == DiagramFamily.D and rank >= 4)
        or (family == DiagramFamily.E and rank in (6, 7, 8))
    )
    if not supported:
        raise UnsupportedDiagramException(f"{family.value}{rank}")
