from typing import Dict, List, Optional, Tuple, Union

import structlog

from meshroots.config import settings
from meshroots.core.exceptions import SizeLimitExceededException
from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph
from meshroots.domain.entities.linalg import ComplexDims
from meshroots.domain.entities.paths import EpsilonChoice
from meshroots.domain.entities.profiles import (
    HomMethod,
    HomTable,
    PeriodicityReport,
    PeriodicityRow,
    RHomProfile,
)
from meshroots.domain.entities.quiver import HatVertex
from meshroots.repositories.component_repository import ComponentRepository
from meshroots.services import dgalgebra, hatquiver, roots

logger = structlog.get_logger(__name__)

Graph = Union[DynkinDiagram, TreeGraph]
Pair = Tuple[HatVertex, HatVertex]


def knit_euler(diagram: DynkinDiagram, target: HatVertex) -> Dict[HatVertex, int]:
    """
    E(q) = hom(q, q′) − ext1(q, q′) for every q of Γ̂_cyc, with q′ = target.

    The slice is the bipartite height shifted through q′; on it E(p) = 1
    iff Ω_𝐡 has a directed path node(q′) → node(p). Values are knitted
    upward and must close up: E(τ^h q) = E(q).

    Raises:
        KnittingInconsistencyException: If the closure check fails
    """
    hatquiver.hat_vertex(diagram, target.node, target.level)
    height = hatquiver.bipartite_height(
        diagram,
        target.level - diagram.parity[target.node],
    )
    reached = set(hatquiver.reachable_nodes(diagram, height, target.node))
    seed = {node: 1 if node in reached else 0 for node in diagram.nodes}
    h = diagram.coxeter_number
    values = hatquiver.knit(diagram, height, seed, span=4 * h)
    hatquiver.check_tau_periodic(values, shift=2 * h)

    period = 2 * h
    euler = {}
    for vertex in hatquiver.cyclic_quiver(diagram).vertices:
        start = height(vertex.node)
        euler[vertex] = values[HatVertex(vertex.node, start + (vertex.level - start) % period)]
    return euler


class MeshCategoryService:
    """
    Hom/Ext dimensions between the indecomposables X_q.

    Responsibilities:
    - Explicit homology of path components (quotient method)
    - Euler knitting and oracle tables
    - Serre duality, shift, τ-equivariance and periodicity verdicts

    Component homology is cached in a ComponentRepository.
    """

    def __init__(
        self,
        component_repo: Optional[ComponentRepository] = None,
        cutoff: Optional[int] = None,
        matrix_cutoff: Optional[int] = None,
        eps: Optional[EpsilonChoice] = None,
    ):
        self.component_repo = component_repo or ComponentRepository()
        self.cutoff = cutoff if cutoff is not None else settings.CUTOFF
        self.matrix_cutoff = matrix_cutoff if matrix_cutoff is not None else settings.MATRIX_ENTRY_CUTOFF
        self.eps = eps

    def component_homology(self, graph: Graph, i: int, j: int, l: int) -> ComplexDims:
        """dim H_k(A_{i,j;l}), cached."""
        key = ComponentRepository.key(graph, i, j, l, self.eps)
        return self.component_repo.get_or_compute(
            key,
            lambda: dgalgebra.component_homology(
                graph,
                i,
                j,
                l,
                eps=self.eps,
                cutoff=self.cutoff,
                matrix_cutoff=self.matrix_cutoff,
            ),
        )

    # ==================== HOM BY EXPLICIT HOMOLOGY ====================

    def mesh_quotient_dim(self, graph: Graph, source: HatVertex, target: HatVertex) -> Tuple[int, Tuple[int, ...]]:
        """
        Paths source → target modulo the mesh ideal, plus higher homology.

        With i = node(source), j = node(target), l = level(target) −
        level(source): returns (dim H₀, (dim H_0, dim H_1, ...)) of
        A_{i,j;l}. Here source plays q′ and target plays q in
        Hom(X_q, X_q′) = Path(q′, q)/J. Negative l gives (0, ()).
        """
        l = target.level - source.level
        if l < 0:
            return 0, ()
        dims = self.component_homology(graph, source.node, target.node, l)
        return dims.h(0), dims.homology

    def cyclic_profile(self, diagram: DynkinDiagram, q: HatVertex, q_prime: HatVertex) -> RHomProfile:
        """
        (hom, ext1)(X_q, X_q′) on Γ̂_cyc from the window representative.

        hom = dim H₀ and ext1 = dim H₁ of A_{i,j;l₀} with i = node(q′),
        j = node(q), l₀ = (level(q) − level(q′)) mod 2h.
        """
        period = 2 * diagram.coxeter_number
        l0 = (q.level - q_prime.level) % period
        dims = self.component_homology(diagram, q_prime.node, q.node, l0)
        return RHomProfile(q, q_prime, dims.h(0), dims.h(1))

    def concentration_violations(self, diagram: DynkinDiagram) -> List[Tuple[int, int, int]]:
        """(i, j, l₀) with l₀ < 2h where more than one H_k is nonzero."""
        period = 2 * diagram.coxeter_number
        return [
            (i, j, l)
            for i in diagram.nodes
            for j in diagram.nodes
            for l in range(period)
            if (l + diagram.parity[i] + diagram.parity[j]) % 2 == 0
            and len(self.component_homology(diagram, i, j, l).nonzero_degrees) > 1
        ]

    # ==================== TABLES ====================

    def profile(self, diagram: DynkinDiagram, q: HatVertex, q_prime: HatVertex, method: HomMethod | str) -> RHomProfile:
        """(hom, ext1)(X_q, X_q′) for a single pair by the chosen method."""
        method = HomMethod(method)
        if method == HomMethod.QUOTIENT:
            return self.cyclic_profile(diagram, q, q_prime)
        if method == HomMethod.KNITTING:
            return RHomProfile.from_euler(q, q_prime, knit_euler(diagram, q_prime)[q])
        height = hatquiver.bipartite_height(diagram)
        classes = roots.class_knitting(diagram, height)
        forms = roots.bilinear_forms(diagram, height)
        return RHomProfile.from_euler(q, q_prime, forms.euler(classes[q].vector, classes[q_prime].vector))

    def hom_table(self, diagram: DynkinDiagram, method: HomMethod | str) -> HomTable:
        method = HomMethod(method)
        vertices = hatquiver.cyclic_quiver(diagram).vertices
        if method == HomMethod.ORACLE:
            return roots.oracle_hom_table(diagram)

        profiles: Dict[Pair, RHomProfile] = {}
        if method == HomMethod.KNITTING:
            for q_prime in vertices:
                euler = knit_euler(diagram, q_prime)
                for q in vertices:
                    profiles[(q, q_prime)] = RHomProfile.from_euler(q, q_prime, euler[q])
        else:
            for q in vertices:
                for q_prime in vertices:
                    profiles[(q, q_prime)] = self.cyclic_profile(diagram, q, q_prime)

        logger.info(
            "Hom table built",
            diagram=diagram.label,
            method=method.value,
            pairs=len(profiles),
        )
        return HomTable(diagram=diagram, method=method, vertices=vertices, profiles=profiles)

    @staticmethod
    def table_differences(left: HomTable, right: HomTable) -> List[Pair]:
        """Pairs where the two tables disagree on hom or ext1."""
        return [
            pair
            for pair, profile in left.profiles.items()
            if (profile.hom, profile.ext1)
            != (right.profiles[pair].hom, right.profiles[pair].ext1)
        ]

    # ==================== DUALITIES ====================

    @staticmethod
    def serre_check(table: HomTable) -> Tuple[bool, List[Pair]]:
        """hom(q, q′) = ext1(q′, τq) for all pairs; violating pairs returned."""
        period = 2 * table.diagram.coxeter_number
        violations = []
        for (q, q_prime), profile in table.profiles.items():
            tau_q = HatVertex(q.node, (q.level + 2) % period)
            if profile.hom != table.ext1(q_prime, tau_q):
                violations.append((q, q_prime))
        return not violations, violations

    @staticmethod
    def shift_check(table: HomTable) -> Tuple[bool, List[Pair]]:
        """hom(q, q′) = ext1(q, γq′): the shift [1] acts on vertices as γ."""
        diagram = table.diagram
        period = 2 * diagram.coxeter_number
        violations = []
        for (q, q_prime), profile in table.profiles.items():
            gamma = HatVertex(diagram.check(q_prime.node), (q_prime.level + diagram.coxeter_number) % period)
            if profile.hom != table.ext1(q, gamma):
                violations.append((q, q_prime))
        return not violations, violations

    @staticmethod
    def tau_equivariance(table: HomTable) -> Tuple[bool, List[Pair]]:
        """(hom, ext1)(τq, τq′) = (hom, ext1)(q, q′)."""
        period = 2 * table.diagram.coxeter_number
        violations = []
        for (q, q_prime), profile in table.profiles.items():
            shifted = table.get(
                HatVertex(q.node, (q.level + 2) % period),
                HatVertex(q_prime.node, (q_prime.level + 2) % period),
            )
            if (shifted.hom, shifted.ext1) != (profile.hom, profile.ext1):
                violations.append((q, q_prime))
        return not violations, violations

    @staticmethod
    def diagonal_violations(table: HomTable) -> List[HatVertex]:
        """Vertices with (hom, ext1)(q, q) ≠ (1, 0)."""
        return [
            q for q in table.vertices
            if (table.hom(q, q), table.ext1(q, q)) != (1, 0)
        ]

    # ==================== PERIODICITY ====================

    def periodicity_check(self, diagram: DynkinDiagram, l_max: int) -> PeriodicityReport:
        """
        dim H_k(A_{i,j;l}) = dim H_{k+2}(A_{i,j;l+2h}) and H_0 = H_1 = 0 on
        A_{i,j;l+2h}, for all i, j and 0 ≤ l ≤ l_max.

        Components beyond the cutoff are reported as skipped.
        """
        shift = 2 * diagram.coxeter_number
        rows = []
        skipped = []
        for i in diagram.nodes:
            for j in diagram.nodes:
                for l in range(l_max + 1):
                    try:
                        lower = self.component_homology(diagram, i, j, l)
                        upper = self.component_homology(diagram, i, j, l + shift)
                    except SizeLimitExceededException as e:
                        logger.warning("Periodicity component skipped", i=i, j=j, l=l, error=e.message)
                        skipped.append((i, j, l))
                        continue
                    degrees = max(len(lower.homology), len(upper.homology) - 2)
                    holds = (
                        upper.h(0) == 0
                        and upper.h(1) == 0
                        and all(upper.h(k + 2) == lower.h(k) for k in range(degrees))
                    )
                    rows.append(PeriodicityRow(i, j, l, lower.homology, upper.homology, holds))
        report = PeriodicityReport(rows=tuple(rows), skipped=tuple(skipped))
        logger.info(
            "Periodicity checked",
            diagram=diagram.label,
            rows=len(rows),
            skipped=len(skipped),
            passed=report.passed,
        )
        return report
