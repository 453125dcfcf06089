"""
Grothendieck-group classes of the indecomposables and the root-system oracle.

Classes are coordinatized in the simple-module basis of (Γ, Ω_𝐡); the
oracle works in the simple-root basis. The two bases are identified, so
knitted classes and oracle roots are compared as plain integer vectors.
"""
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import structlog
from sympy import Matrix

from meshroots.config import settings
from meshroots.core.exceptions import (
    KnittingInconsistencyException,
    NotWellDefinedException,
    RootMismatchException,
)
from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph
from meshroots.domain.entities.profiles import (
    BilinearForms,
    CoxeterElement,
    HomMethod,
    HomTable,
    RHomProfile,
    RootClass,
    RootSystemOracle,
)
from meshroots.domain.entities.quiver import HatVertex, HeightFunction
from meshroots.services import hatquiver, weyl

logger = structlog.get_logger(__name__)

Vector = Tuple[int, ...]


# ==================== ORACLE ====================

@lru_cache(maxsize=None)
def oracle_roots(diagram: DynkinDiagram, limit: Optional[int] = None) -> RootSystemOracle:
    """
    Roots as the reflection closure of the simple roots.

    Raises:
        NonFiniteTypeException: If the closure exceeds the safety bound
    """
    bound = limit if limit is not None else settings.ROOT_CLOSURE_LIMIT
    roots = weyl.reflection_closure(diagram.cartan, bound)
    positive = frozenset(root for root in roots if all(value >= 0 for value in root))
    reflections = tuple(weyl.to_int_matrix(s) for s in weyl.simple_reflections(diagram.cartan))
    longest = weyl.to_int_matrix(weyl.longest_element(diagram.cartan, bound))
    logger.debug("Oracle roots computed", count=len(roots), positive=len(positive))
    return RootSystemOracle(
        roots=roots,
        positive_roots=positive,
        reflections=reflections,
        longest_element=longest,
    )


def weyl_longest_element(diagram: DynkinDiagram) -> Tuple[Tuple[int, ...], ...]:
    return weyl.to_int_matrix(weyl.longest_element(diagram.cartan, settings.ROOT_CLOSURE_LIMIT))


# ==================== FORMS ====================

def bilinear_forms(graph: TreeGraph, height: HeightFunction) -> BilinearForms:
    """⟨e_i, e_j⟩ = δ_ij − #{arrows i→j in Ω_𝐡}; sym = euler + transpose."""
    arrows = set(hatquiver.orientation(graph, height))
    euler = tuple(
        tuple(
            (1 if i == j else 0) - (1 if (i, j) in arrows else 0)
            for j in graph.nodes
        )
        for i in graph.nodes
    )
    sym = tuple(
        tuple(euler[row][col] + euler[col][row] for col in range(graph.rank))
        for row in range(graph.rank)
    )
    return BilinearForms(euler_matrix=euler, sym_matrix=sym)


def projective_dims(graph: TreeGraph, height: HeightFunction) -> Dict[int, Vector]:
    """dim P_i: P_i(j) = 1 iff Ω_𝐡 has a directed path i → j."""
    dims = {}
    for node in graph.nodes:
        reached = set(hatquiver.reachable_nodes(graph, height, node))
        dims[node] = tuple(1 if other in reached else 0 for other in graph.nodes)
    return dims


# ==================== CLASS KNITTING ====================

def knit_classes(diagram: DynkinDiagram, height: HeightFunction) -> Dict[HatVertex, Vector]:
    """
    Classes on Γ̂ from the slice of height upward over 4h levels.

    Slice vertex (i, 𝐡(i)) carries dim P_i; every coordinate is knitted
    separately since the mesh recursion is linear.

    Raises:
        KnittingInconsistencyException: If c(τ^h q) ≠ c(q) or c(γq) ≠ −c(q)
    """
    hatquiver.validate_height(diagram, height)
    h = diagram.coxeter_number
    seeds = projective_dims(diagram, height)
    coordinates = []
    for index in range(diagram.rank):
        values = hatquiver.knit(
            diagram,
            height,
            {node: seeds[node][index] for node in diagram.nodes},
            span=4 * h,
        )
        hatquiver.check_tau_periodic(values, shift=2 * h)
        coordinates.append(values)

    classes = {
        vertex: tuple(values[vertex] for values in coordinates)
        for vertex in coordinates[0]
    }
    for vertex, vector in classes.items():
        image = HatVertex(diagram.check(vertex.node), vertex.level + h)
        if image in classes and classes[image] != tuple(-value for value in vector):
            raise KnittingInconsistencyException(
                f"class at {image} is not minus the class at {vertex}",
                details={"vertex": vertex.as_pair(), "image": image.as_pair()},
            )
    return classes


def class_knitting(diagram: DynkinDiagram, height: Optional[HeightFunction] = None) -> Dict[HatVertex, RootClass]:
    """Class of X_q for every q of Γ̂_cyc, in the simple-module basis of Ω_𝐡."""
    height = height or hatquiver.bipartite_height(diagram)
    unrolled = knit_classes(diagram, height)
    return {
        vertex: RootClass(unrolled[_representative(diagram, height, vertex)])
        for vertex in hatquiver.cyclic_quiver(diagram).vertices
    }


def realize_root_system(diagram: DynkinDiagram, height: Optional[HeightFunction] = None) -> Dict[HatVertex, RootClass]:
    """
    Bijection Γ̂_cyc → R, q ↦ c(q), checked against the oracle.

    Raises:
        RootMismatchException: If the class set differs from the oracle roots
    """
    classes = class_knitting(diagram, height)
    oracle = oracle_roots(diagram)
    vectors = {root_class.vector for root_class in classes.values()}
    if vectors != oracle.roots or len(vectors) != len(classes):
        missing = sorted(list(v) for v in oracle.roots - vectors)
        extra = sorted(list(v) for v in vectors - oracle.roots)
        logger.error(
            "Class set does not match the oracle",
            diagram=diagram.label,
            classes=len(classes),
            distinct=len(vectors),
            roots=len(oracle.roots),
        )
        raise RootMismatchException(missing, extra)
    logger.info("Root system realized", diagram=diagram.label, count=len(classes))
    return classes


def shift_antiperiodicity(diagram: DynkinDiagram, height: Optional[HeightFunction] = None) -> bool:
    """c(γq) = −c(q) on Γ̂_cyc."""
    classes = class_knitting(diagram, height)
    period = 2 * diagram.coxeter_number
    for vertex, root_class in classes.items():
        image = HatVertex(diagram.check(vertex.node), (vertex.level + diagram.coxeter_number) % period)
        if classes[image] != -root_class:
            return False
    return True


def gram_matrix(classes: Dict[HatVertex, RootClass], forms: BilinearForms) -> Tuple[Tuple[int, ...], ...]:
    """(c(q), c(q′)) over vertices in (level, node) order."""
    ordered = sorted(classes, key=lambda v: v.sort_key)
    return tuple(
        tuple(forms.sym(classes[row].vector, classes[col].vector) for col in ordered)
        for row in ordered
    )


# ==================== COXETER ELEMENT ====================

def coxeter_element(diagram: DynkinDiagram, height: Optional[HeightFunction] = None) -> CoxeterElement:
    """
    The matrix C with C·c(q) = c(τq) for all q of Γ̂_cyc.

    C is solved from the slice classes (the projectives, which form a
    basis) and then checked on every vertex.

    Raises:
        NotWellDefinedException: If C is not integral or misses some class
    """
    height = height or hatquiver.bipartite_height(diagram)
    classes = class_knitting(diagram, height)
    period = 2 * diagram.coxeter_number

    def tau_of(vertex: HatVertex) -> HatVertex:
        return HatVertex(vertex.node, (vertex.level + 2) % period)

    slice_vertices = [HatVertex(node, height(node) % period) for node in diagram.nodes]
    before = Matrix.hstack(*[Matrix(classes[v].vector) for v in slice_vertices])
    after = Matrix.hstack(*[Matrix(classes[tau_of(v)].vector) for v in slice_vertices])
    matrix = after * before.inv()
    if any(not value.is_integer for value in matrix):
        raise NotWellDefinedException("Coxeter matrix has non-integral entries")

    for vertex, root_class in classes.items():
        if matrix * Matrix(root_class.vector) != Matrix(classes[tau_of(vertex)].vector):
            raise NotWellDefinedException(f"C·c(q) != c(τq) at q = {vertex}")

    order = weyl.matrix_order(matrix, limit=settings.ROOT_CLOSURE_LIMIT) or 0
    logger.debug("Coxeter element solved", diagram=diagram.label, order=order)
    return CoxeterElement(matrix=weyl.to_int_matrix(matrix), order=order)


def bipartite_coxeter_product(diagram: DynkinDiagram) -> Tuple[Tuple[int, ...], ...]:
    """(∏_{p(i)=0} s_i)(∏_{p(i)=1} s_i): the parity-1 batch acts first."""
    even = [node - 1 for node in diagram.nodes if diagram.parity[node] == 0]
    odd = [node - 1 for node in diagram.nodes if diagram.parity[node] == 1]
    return weyl.to_int_matrix(weyl.reflection_product(diagram.cartan, even + odd))


def preserves_form(matrix: Tuple[Tuple[int, ...], ...], form: Tuple[Tuple[int, ...], ...]) -> bool:
    """Cᵀ·form·C = form."""
    c = Matrix(matrix)
    sym = Matrix(form)
    return c.T * sym * c == sym


def is_bipartite_height(graph: TreeGraph, height: HeightFunction) -> bool:
    """𝐡 − p is constant, so parity-0 nodes are the sources."""
    return len({height(node) - graph.parity[node] for node in graph.nodes}) == 1


# ==================== BGP ====================

def bgp_compatibility(diagram: DynkinDiagram, height: HeightFunction, node: int, sign: int = 1) -> bool:
    """
    Classes knitted from s_i^±𝐡 equal s_i applied to classes knitted from 𝐡.

    Raises:
        NotSourceOrSinkException: If node is not a source (sign=+1) or
            sink (sign=-1) of Ω_𝐡
    """
    reflected = hatquiver.reflect_height(diagram, height, node, sign)
    before = class_knitting(diagram, height)
    after = class_knitting(diagram, reflected)
    for vertex, root_class in before.items():
        image = weyl.reflect_vector(diagram.cartan, root_class.vector, node - 1)
        if after[vertex].vector != image:
            logger.warning(
                "Reflection functor mismatch",
                diagram=diagram.label,
                node=node,
                vertex=vertex.as_pair(),
            )
            return False
    return True


# ==================== ORACLE HOM TABLE ====================

def oracle_hom_table(diagram: DynkinDiagram, height: Optional[HeightFunction] = None) -> HomTable:
    """euler(q, q′) = ⟨c(q), c(q′)⟩, split into (hom, ext1) by sign."""
    height = height or hatquiver.bipartite_height(diagram)
    classes = class_knitting(diagram, height)
    forms = bilinear_forms(diagram, height)
    vertices = hatquiver.cyclic_quiver(diagram).vertices
    profiles = {
        (source, target): RHomProfile.from_euler(
            source,
            target,
            forms.euler(classes[source].vector, classes[target].vector),
        )
        for source in vertices
        for target in vertices
    }
    return HomTable(
        diagram=diagram,
        method=HomMethod.ORACLE,
        vertices=vertices,
        profiles=profiles,
    )


def root_norms(classes: Dict[HatVertex, RootClass], forms: BilinearForms) -> List[Tuple[HatVertex, int]]:
    """Vertices whose class does not have (c, c) = 2."""
    return [
        (vertex, forms.sym(root_class.vector, root_class.vector))
        for vertex, root_class in sorted(classes.items(), key=lambda item: item[0].sort_key)
        if forms.sym(root_class.vector, root_class.vector) != 2
    ]


def _representative(diagram: DynkinDiagram, height: HeightFunction, vertex: HatVertex) -> HatVertex:
    """Unrolled vertex (i, n) with n ≡ level mod 2h and 𝐡(i) ≤ n < 𝐡(i) + 2h."""
    period = 2 * diagram.coxeter_number
    start = height(vertex.node)
    return HatVertex(vertex.node, start + (vertex.level - start) % period)
