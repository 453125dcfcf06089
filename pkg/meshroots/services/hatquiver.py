from functools import lru_cache
from typing import Dict, List, Mapping, Tuple, Union

import structlog

from meshroots.core.exceptions import (
    InvalidHeightException,
    InvalidVertexException,
    KnittingInconsistencyException,
    NotSourceOrSinkException,
    UnsupportedDiagramException,
    WindowExceededException,
)
from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph
from meshroots.domain.entities.quiver import (
    HatQuiver,
    HatVertex,
    HeightFunction,
    QuiverMode,
    Slice,
)
from meshroots.domain.mappers.quiver_mapper import QuiverMapper

logger = structlog.get_logger(__name__)

Graph = Union[DynkinDiagram, TreeGraph]


# ==================== VERTICES AND QUIVERS ====================

def is_hat_vertex(graph: Graph, node: int, level: int) -> bool:
    """(i, n) lies on Γ̂ iff n + p(i) is even."""
    return node in graph.parity and (level + graph.parity[node]) % 2 == 0


def hat_vertex(graph: Graph, node: int, level: int) -> HatVertex:
    if not is_hat_vertex(graph, node, level):
        raise InvalidVertexException(node, level)
    return HatVertex(node, level)


def window_quiver(graph: Graph, lo: int, hi: int) -> HatQuiver:
    """Full subquiver of Γ̂ on levels lo..hi."""
    if lo > hi:
        raise WindowExceededException(hi, lo, hi)
    vertices = tuple(
        HatVertex(node, level)
        for level in range(lo, hi + 1)
        for node in graph.nodes
        if is_hat_vertex(graph, node, level)
    )
    arrows = tuple(
        (HatVertex(a, level), HatVertex(b, level + 1))
        for level in range(lo, hi)
        for a in graph.nodes
        if is_hat_vertex(graph, a, level)
        for b in graph.neighbors(a)
    )
    return HatQuiver(
        diagram=graph,
        mode=QuiverMode.WINDOW,
        vertices=vertices,
        arrows=tuple(sorted(arrows, key=_arrow_key)),
        lo=lo,
        hi=hi,
    )


@lru_cache(maxsize=None)
def cyclic_quiver(diagram: DynkinDiagram) -> HatQuiver:
    """Γ̂_cyc: levels mod 2h, n·h vertices."""
    if not diagram.is_dynkin:
        raise UnsupportedDiagramException(diagram.label)
    period = 2 * diagram.coxeter_number
    vertices = tuple(
        HatVertex(node, level)
        for level in range(period)
        for node in diagram.nodes
        if is_hat_vertex(diagram, node, level)
    )
    arrows = tuple(
        (vertex, HatVertex(other, (vertex.level + 1) % period))
        for vertex in vertices
        for other in diagram.neighbors(vertex.node)
    )
    return HatQuiver(
        diagram=diagram,
        mode=QuiverMode.CYCLIC,
        vertices=vertices,
        arrows=tuple(sorted(arrows, key=_arrow_key)),
        period=period,
    )


def place(quiver: HatQuiver, node: int, level: int) -> HatVertex:
    """Vertex (node, level) of the quiver, reducing levels in cyclic mode."""
    if quiver.is_cyclic:
        level %= quiver.period
    elif not quiver.lo <= level <= quiver.hi:
        raise WindowExceededException(level, quiver.lo, quiver.hi)
    return hat_vertex(quiver.diagram, node, level)


def tau(quiver: HatQuiver, q: HatVertex, k: int = 1) -> HatVertex:
    """τ^k(i, n) = (i, n + 2k)."""
    return place(quiver, q.node, q.level + 2 * k)


def nakayama(quiver: HatQuiver, q: HatVertex) -> HatVertex:
    """ν(i, n) = (ǐ, n + h − 2)."""
    diagram = _dynkin(quiver)
    return place(quiver, diagram.check(q.node), q.level + diagram.coxeter_number - 2)


def twisted_nakayama(quiver: HatQuiver, q: HatVertex) -> HatVertex:
    """γ(i, n) = (ǐ, n + h) = τν(i, n)."""
    diagram = _dynkin(quiver)
    return place(quiver, diagram.check(q.node), q.level + diagram.coxeter_number)


def emit_quiver(quiver: HatQuiver, fmt: str = "dot") -> str:
    """Deterministic DOT or JSON text, vertices sorted by (level, node)."""
    if fmt == "json":
        return QuiverMapper.to_document(quiver).model_dump_json(indent=2) + "\n"
    if fmt != "dot":
        raise ValueError(f"Unknown quiver format: {fmt}")

    lines = [f'digraph "{quiver.diagram.label}" {{']
    for vertex in sorted(quiver.vertices, key=lambda v: v.sort_key):
        lines.append(f'  "{vertex}";')
    for source, target in quiver.arrows:
        lines.append(f'  "{source}" -> "{target}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ==================== HEIGHT FUNCTIONS AND SLICES ====================

def bipartite_height(graph: Graph, shift: int = 0) -> HeightFunction:
    """𝐡(i) = p(i) + shift; shift must be even."""
    if shift % 2:
        raise InvalidHeightException(f"shift {shift} breaks the parity condition")
    return HeightFunction(tuple(graph.parity[node] + shift for node in graph.nodes))


def height_from_spec(graph: Graph, spec: str) -> HeightFunction:
    """
    Parse "bipartite", "bipartite+2k" or explicit values "h1,h2,...".

    Raises:
        InvalidHeightException: If the result is not a height function
    """
    text = spec.replace(" ", "")
    if text.startswith("bipartite"):
        shift = text[len("bipartite"):]
        return bipartite_height(graph, int(shift) if shift else 0)
    try:
        values = tuple(int(value) for value in text.split(","))
    except ValueError:
        raise InvalidHeightException(f"cannot parse {spec!r}")
    return validate_height(graph, HeightFunction(values))


def validate_height(graph: Graph, height: HeightFunction) -> HeightFunction:
    if len(height.values) != graph.rank:
        raise InvalidHeightException(f"expected {graph.rank} values, got {len(height.values)}")
    for node in graph.nodes:
        if (height(node) - graph.parity[node]) % 2:
            raise InvalidHeightException(f"h({node}) = {height(node)} has the wrong parity")
    for a, b in graph.edges:
        if abs(height(a) - height(b)) != 1:
            raise InvalidHeightException(f"|h({a}) - h({b})| must be 1")
    return height


def orientation(graph: Graph, height: HeightFunction) -> Tuple[Tuple[int, int], ...]:
    """Ω_𝐡: i → j iff 𝐡(j) = 𝐡(i) + 1."""
    arrows = []
    for a, b in graph.sorted_edges:
        arrows.append((a, b) if height(b) == height(a) + 1 else (b, a))
    return tuple(sorted(arrows))


def sources(graph: Graph, height: HeightFunction) -> Tuple[int, ...]:
    return tuple(
        node for node in graph.nodes
        if all(height(other) == height(node) + 1 for other in graph.neighbors(node))
    )


def sinks(graph: Graph, height: HeightFunction) -> Tuple[int, ...]:
    return tuple(
        node for node in graph.nodes
        if all(height(other) == height(node) - 1 for other in graph.neighbors(node))
    )


def reachable_nodes(graph: Graph, height: HeightFunction, start: int) -> Tuple[int, ...]:
    """Nodes reached from start by directed paths of Ω_𝐡, start included."""
    reached = {start}
    frontier = [start]
    while frontier:
        node = frontier.pop()
        for other in graph.neighbors(node):
            if height(other) == height(node) + 1 and other not in reached:
                reached.add(other)
                frontier.append(other)
    return tuple(sorted(reached))


def slice_of(graph: Graph, height: HeightFunction) -> Slice:
    validate_height(graph, height)
    return Slice(
        height=height,
        vertices=tuple(HatVertex(node, height(node)) for node in graph.nodes),
        orientation=orientation(graph, height),
    )


def reflect_height(graph: Graph, height: HeightFunction, node: int, sign: int) -> HeightFunction:
    """
    s_i^+ (sign=+1) raises a source by 2; s_i^- (sign=-1) lowers a sink by 2.

    Raises:
        NotSourceOrSinkException: If node is not a source (resp. sink)
    """
    validate_height(graph, height)
    if sign > 0:
        if node not in sources(graph, height):
            raise NotSourceOrSinkException(node, "source")
        return height.with_value(node, height(node) + 2)
    if node not in sinks(graph, height):
        raise NotSourceOrSinkException(node, "sink")
    return height.with_value(node, height(node) - 2)


def reflection_sequence(
    graph: Graph,
    height: HeightFunction,
    target: HeightFunction,
) -> List[Tuple[int, int]]:
    """
    Moves (node, sign) turning height into target, of length Σ|𝐡 − target|/2.

    The lowest node still below its target is always a source and the
    highest node still above it is always a sink.
    """
    validate_height(graph, height)
    validate_height(graph, target)
    moves = []
    current = height
    while current != target:
        below = [node for node in graph.nodes if current(node) < target(node)]
        if below:
            node = min(below, key=lambda i: (current(i), i))
            sign = 1
        else:
            above = [node for node in graph.nodes if current(node) > target(node)]
            node = max(above, key=lambda i: (current(i), -i))
            sign = -1
        current = reflect_height(graph, current, node, sign)
        moves.append((node, sign))
    return moves


# ==================== KNITTING ====================

def knit(
    graph: Graph,
    height: HeightFunction,
    seed: Mapping[int, int],
    span: int,
) -> Dict[HatVertex, int]:
    """
    Propagate slice values upward by the mesh relation.

    val(τq) = Σ_{q→q″} val(q″) − val(q), applied at the lowest source of
    the current slice until every node sits at least span levels above
    its starting height.
    """
    validate_height(graph, height)
    current = {node: height(node) for node in graph.nodes}
    values = {HatVertex(node, current[node]): seed[node] for node in graph.nodes}

    while any(current[node] < height(node) + span for node in graph.nodes):
        node = min(graph.nodes, key=lambda i: (current[i], i))
        level = current[node]
        middle = sum(values[HatVertex(other, level + 1)] for other in graph.neighbors(node))
        values[HatVertex(node, level + 2)] = middle - values[HatVertex(node, level)]
        current[node] = level + 2
    return values


def check_tau_periodic(values: Mapping[HatVertex, int], shift: int, sign: int = 1):
    """
    Assert val(i, n + shift) = sign · val(i, n) wherever both are knitted.

    Raises:
        KnittingInconsistencyException: On the first violation
    """
    for vertex, value in values.items():
        image = HatVertex(vertex.node, vertex.level + shift)
        if image in values and values[image] != sign * value:
            raise KnittingInconsistencyException(
                f"value at {image} is not {sign} x value at {vertex}",
                details={"vertex": vertex.as_pair(), "image": image.as_pair()},
            )


def _dynkin(quiver: HatQuiver) -> DynkinDiagram:
    if not quiver.diagram.is_dynkin:
        raise UnsupportedDiagramException(quiver.diagram.label)
    return quiver.diagram


def _arrow_key(arrow: Tuple[HatVertex, HatVertex]):
    return (arrow[0].sort_key, arrow[1].sort_key)
