from typing import Callable, Dict, List, Optional, Sequence

import structlog
from sympy import Matrix

from meshroots.core.exceptions import DomainException, SizeLimitExceededException
from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph
from meshroots.domain.entities.profiles import HomMethod
from meshroots.schemas.documents import CheckDocument, VerificationReportDocument
from meshroots.services import dgalgebra, dynkin, hatquiver, roots, weyl
from meshroots.services.meshcat import MeshCategoryService

logger = structlog.get_logger(__name__)

FOUR_STAR_EDGES = [[1, 2], [1, 3], [1, 4], [1, 5]]


def four_star() -> TreeGraph:
    """The 4-star tree D̃_4: node 1 joined to four leaves."""
    return dynkin.build_tree(5, FOUR_STAR_EDGES, label="dtilde4")


class VerificationService:
    """
    Runs the verification suites and collects per-check verdicts.

    Each suite appends CheckDocuments; a SizeLimitExceeded inside a check
    marks the report as resource limited instead of failing the claim.
    """

    def __init__(self, meshcat: Optional[MeshCategoryService] = None):
        self.meshcat = meshcat or MeshCategoryService()
        self.checks: List[CheckDocument] = []
        self.resource_limited = False

    def run(
        self,
        suites: Sequence[str],
        diagram: Optional[DynkinDiagram] = None,
        tree: Optional[TreeGraph] = None,
        l_max: int = 2,
    ) -> VerificationReportDocument:
        self.checks = []
        self.resource_limited = False
        runners: Dict[str, Callable[[], None]] = {
            "cartan": lambda: self.verify_cartan(diagram),
            "roots": lambda: self.verify_roots(diagram),
            "coxeter": lambda: self.verify_coxeter(diagram),
            "serre": lambda: self.verify_serre(diagram),
            "periodicity": lambda: self.verify_periodicity(diagram, l_max),
            "bgp": lambda: self.verify_bgp(diagram),
            "nondynkin": lambda: self.verify_nondynkin(tree or four_star(), l_max),
            "agreement": lambda: self.verify_agreement(diagram),
            "dg": lambda: self.verify_dg(diagram, l_max),
        }
        for suite in suites:
            logger.info("Running suite", suite=suite)
            runners[suite]()

        label = diagram.label if diagram else (tree or four_star()).label
        report = VerificationReportDocument(
            diagram=label,
            suites=list(suites),
            passed=all(check.passed for check in self.checks),
            resource_limited=self.resource_limited,
            checks=self.checks,
        )
        logger.info(
            "Verification finished",
            passed=report.passed,
            checks=len(self.checks),
            resource_limited=self.resource_limited,
        )
        return report

    def _check(self, suite: str, name: str, claim: str, compute: Callable[[], tuple]):
        """
        Run compute() -> (passed, details, counterexamples) and record it.

        Domain errors become failed checks. Cutoff errors, or a
        "resource_limited" flag in details, mark the check and the report
        as resource limited.
        """
        try:
            passed, details, counterexamples = compute()
        except SizeLimitExceededException as e:
            passed, details, counterexamples = False, {"error": e.to_dict(), "resource_limited": True}, []
        except DomainException as e:
            passed, details, counterexamples = False, {"error": e.to_dict()}, []
        limited = bool(details.pop("resource_limited", False))
        self.resource_limited = self.resource_limited or limited
        if not passed:
            logger.warning("Check failed", suite=suite, check=name)
        self.checks.append(CheckDocument(
            suite=suite,
            name=name,
            claim=claim,
            passed=passed,
            resource_limited=limited,
            details=details,
            counterexamples=counterexamples[:20],
        ))

    # ==================== CARTAN ====================

    def verify_cartan(self, diagram: DynkinDiagram):
        heights = _nearby_heights(diagram)

        def sym_is_cartan():
            failures = []
            for height in heights:
                forms = roots.bilinear_forms(diagram, height)
                if forms.sym_matrix != diagram.cartan:
                    failures.append(list(height.values))
            return not failures, {"heights": len(heights)}, failures

        def parity_proper():
            bad = [[a, b] for a, b in diagram.edges if diagram.parity[a] + diagram.parity[b] != 1]
            return not bad and diagram.parity[1] == 0, {}, bad

        def involution():
            return dynkin.involution_check(diagram), {
                "involution": list(diagram.involution),
            }, []

        self._check("cartan", "sym_equals_cartan", "Symmetrized Euler form equals the Cartan matrix", sym_is_cartan)
        self._check("cartan", "parity", "Parity is a proper 2-coloring with p(1) = 0", parity_proper)
        self._check("cartan", "involution", "−α_i = w₀(α_ǐ) for the stored involution", involution)

    # ==================== ROOTS ====================

    def verify_roots(self, diagram: DynkinDiagram):
        h = diagram.coxeter_number

        def oracle_count():
            oracle = roots.oracle_roots(diagram)
            return (
                len(oracle.roots) == diagram.rank * h and 2 * len(oracle.positive_roots) == len(oracle.roots),
                {"roots": len(oracle.roots), "n_times_h": diagram.rank * h},
                [],
            )

        def bijection():
            classes = roots.realize_root_system(diagram)
            return len(classes) == diagram.rank * h, {"classes": len(classes)}, []

        def norms():
            height = hatquiver.bipartite_height(diagram)
            classes = roots.class_knitting(diagram, height)
            forms = roots.bilinear_forms(diagram, height)
            bad = roots.root_norms(classes, forms)
            gram = roots.gram_matrix(classes, forms)
            out_of_range = sorted({value for row in gram for value in row if not -2 <= value <= 2})
            return (
                not bad and not out_of_range,
                {"out_of_range": out_of_range},
                [[list(v.as_pair()), norm] for v, norm in bad],
            )

        def antiperiodic():
            return roots.shift_antiperiodicity(diagram), {}, []

        def other_heights():
            heights = _nearby_heights(diagram)
            failures = []
            for height in heights:
                try:
                    roots.realize_root_system(diagram, height)
                except DomainException:
                    failures.append(list(height.values))
            return not failures, {"heights": len(heights)}, failures

        self._check("roots", "oracle_count", "The reflection closure has n·h roots, half of them positive", oracle_count)
        self._check("roots", "bijection", "Classes of the X_q over Γ̂_cyc are exactly the roots", bijection)
        self._check("roots", "norms", "(c, c) = 2 for every class and pairings lie in [−2, 2]", norms)
        self._check("roots", "shift_sign", "[X[1]] = −[X]: c(γq) = −c(q)", antiperiodic)
        self._check("roots", "height_independence", "The bijection holds for heights within 3 moves of bipartite", other_heights)

    # ==================== COXETER ====================

    def verify_coxeter(self, diagram: DynkinDiagram):
        height = hatquiver.bipartite_height(diagram)

        def order():
            element = roots.coxeter_element(diagram, height)
            return element.order == diagram.coxeter_number, {"order": element.order}, []

        def form():
            element = roots.coxeter_element(diagram, height)
            return roots.preserves_form(element.matrix, diagram.cartan), {}, []

        def factorization():
            element = roots.coxeter_element(diagram, height)
            product = roots.bipartite_coxeter_product(diagram)
            even = [n - 1 for n in diagram.nodes if diagram.parity[n] == 0]
            odd = [n - 1 for n in diagram.nodes if diagram.parity[n] == 1]
            reverse = weyl.reflection_product(diagram.cartan, odd + even)
            inverse_matches = weyl.to_int_matrix(reverse) == weyl.to_int_matrix(
                Matrix(element.matrix).inv()
            )
            return (
                element.matrix == product and inverse_matches,
                {"matrix": [list(row) for row in element.matrix]},
                [],
            )

        self._check("coxeter", "order", "C is a Coxeter element of order exactly h", order)
        self._check("coxeter", "form", "Cᵀ·(Cartan)·C = Cartan", form)
        self._check("coxeter", "bipartite_factorization", "C = (∏_{p=0} s_i)(∏_{p=1} s_i); the reverse order is C⁻¹", factorization)

    # ==================== SERRE ====================

    def verify_serre(self, diagram: DynkinDiagram):
        tables = {}

        def knitted():
            if "table" not in tables:
                tables["table"] = self.meshcat.hom_table(diagram, HomMethod.KNITTING)
            return tables["table"]

        def serre():
            table = knitted()
            passed, violations = MeshCategoryService.serre_check(table)
            return passed, {"pairs": len(table.profiles)}, _pairs(violations)

        def shift():
            table = knitted()
            passed, violations = MeshCategoryService.shift_check(table)
            return passed, {}, _pairs(violations)

        def equivariance():
            table = knitted()
            passed, violations = MeshCategoryService.tau_equivariance(table)
            return passed, {}, _pairs(violations)

        def diagonal():
            table = knitted()
            bad = MeshCategoryService.diagonal_violations(table)
            return not bad, {}, [list(q.as_pair()) for q in bad]

        self._check("serre", "serre_duality", "Serre duality: Hom(X_q, X_q′) ≅ Ext¹(X_q′, X_{τq})*", serre)
        self._check("serre", "shift", "Hom(X_q, X_q′) = Ext¹(X_q, X_{γq′})", shift)
        self._check("serre", "tau_equivariance", "τ is an autoequivalence on Hom and Ext¹", equivariance)
        self._check("serre", "diagonal", "End(X_q) is the ground field and Ext¹(X_q, X_q) = 0", diagonal)

    # ==================== PERIODICITY ====================

    def verify_periodicity(self, diagram: DynkinDiagram, l_max: int):
        def periodic():
            report = self.meshcat.periodicity_check(diagram, l_max)
            return (
                report.passed and not report.skipped,
                {
                    "rows": len(report.rows),
                    "skipped": [list(s) for s in report.skipped],
                    "resource_limited": report.passed and bool(report.skipped),
                },
                [
                    {"i": r.i, "j": r.j, "l": r.l, "lower": list(r.lower), "upper": list(r.upper)}
                    for r in report.failures
                ],
            )

        self._check(
            "periodicity",
            "koszul_periodicity",
            "dim H_k(A_{i,j;l}) = dim H_{k+2}(A_{i,j;l+2h}), with H_0 = H_1 = 0 on A_{i,j;l+2h}",
            periodic,
        )

    # ==================== BGP ====================

    def verify_bgp(self, diagram: DynkinDiagram):
        height = hatquiver.bipartite_height(diagram)

        def reflections():
            failures = []
            moves = [(n, 1) for n in hatquiver.sources(diagram, height)]
            moves += [(n, -1) for n in hatquiver.sinks(diagram, height)]
            for node, sign in moves:
                if not roots.bgp_compatibility(diagram, height, node, sign):
                    failures.append([node, sign])
            return not failures, {"moves": len(moves)}, failures

        def inverse():
            failures = []
            base = roots.class_knitting(diagram, height)
            for node in hatquiver.sources(diagram, height):
                raised = hatquiver.reflect_height(diagram, height, node, 1)
                back = hatquiver.reflect_height(diagram, raised, node, -1)
                if roots.class_knitting(diagram, back) != base:
                    failures.append(node)
            return not failures, {}, failures

        self._check("bgp", "reflection_functors", "Slice reflections act on classes by simple reflections", reflections)
        self._check("bgp", "inverse_moves", "s_i^- after s_i^+ restores the class map", inverse)

    # ==================== NON-DYNKIN ====================

    def verify_nondynkin(self, tree: TreeGraph, l_max: int):
        def vanishing():
            bad = []
            components = 0
            for i in tree.nodes:
                for j in tree.nodes:
                    for l in range(l_max + 1):
                        dims = self.meshcat.component_homology(tree, i, j, l)
                        components += 1
                        if any(dims.homology[1:]):
                            bad.append({"i": i, "j": j, "l": l, "homology": list(dims.homology)})
            return not bad, {"tree": tree.label, "components": components}, bad

        self._check(
            "nondynkin",
            "higher_homology_vanishes",
            "For a non-Dynkin tree A resolves the preprojective algebra: H_k = 0 for k ≥ 1",
            vanishing,
        )

    # ==================== AGREEMENT ====================

    def verify_agreement(self, diagram: DynkinDiagram):
        def tables():
            quotient = self.meshcat.hom_table(diagram, HomMethod.QUOTIENT)
            knitting = self.meshcat.hom_table(diagram, HomMethod.KNITTING)
            oracle = self.meshcat.hom_table(diagram, HomMethod.ORACLE)
            differences = (
                MeshCategoryService.table_differences(quotient, knitting)
                + MeshCategoryService.table_differences(quotient, oracle)
            )
            return not differences, {"pairs": len(quotient.profiles)}, _pairs(differences)

        def concentration():
            bad = self.meshcat.concentration_violations(diagram)
            return not bad, {}, [list(triple) for triple in bad]

        self._check("agreement", "three_methods", "Quotient, knitting and oracle Hom tables agree entrywise", tables)
        self._check("agreement", "single_degree", "At most one H_k(A_{i,j;l}) is nonzero for l < 2h", concentration)

    # ==================== DG ALGEBRA ====================

    def verify_dg(self, diagram: DynkinDiagram, l_max: int):
        top = l_max + 2
        triples = [(i, j, l) for i in diagram.nodes for j in diagram.nodes for l in range(top + 1)]

        def square_zero():
            # homology_dims raises NotAComplex when d∘d != 0
            for i, j, l in triples:
                self.meshcat.component_homology(diagram, i, j, l)
            return True, {"components": len(triples)}, []

        def epsilon_independence():
            if not diagram.edges:
                return True, {"edges": 0}, []
            a, b = diagram.sorted_edges[0]
            flipped = MeshCategoryService(
                cutoff=self.meshcat.cutoff,
                matrix_cutoff=self.meshcat.matrix_cutoff,
                eps=dgalgebra.default_epsilon(diagram).flipped(a, b),
            )
            bad = [
                [i, j, l] for i, j, l in triples
                if flipped.component_homology(diagram, i, j, l).homology
                != self.meshcat.component_homology(diagram, i, j, l).homology
            ]
            return not bad, {"flipped_edge": [a, b]}, bad

        def euler_characteristic():
            bad = [
                [i, j, l] for i, j, l in triples
                if (dims := self.meshcat.component_homology(diagram, i, j, l)).euler_characteristic
                != dims.homology_euler_characteristic
            ]
            return not bad, {}, bad

        def free_generation():
            bad = [
                [i, j, l, k]
                for i, j, l in triples
                for k in range(1, l // 2 + 1)
                if dgalgebra.generator_counts(diagram, i, j, l, k) != dgalgebra.count_paths(diagram, i, j, l, k)
            ]
            return not bad, {}, bad

        self._check("dg", "square_zero", "d∘d = 0 on every component", square_zero)
        self._check("dg", "epsilon_independence", "Homology does not depend on the choice of ε", epsilon_independence)
        self._check("dg", "euler_characteristic", "Σ(−1)^k dim C_k = Σ(−1)^k dim H_k", euler_characteristic)
        self._check("dg", "free_generation", "X_q^k is freely generated by paths ending in a jump", free_generation)


def _nearby_heights(diagram: DynkinDiagram):
    """Heights reached from bipartite by at most 3 source/sink moves."""
    start = hatquiver.bipartite_height(diagram)
    seen = {start}
    frontier = [start]
    for _ in range(3):
        following = []
        for height in frontier:
            moves = [(n, 1) for n in hatquiver.sources(diagram, height)]
            moves += [(n, -1) for n in hatquiver.sinks(diagram, height)]
            for node, sign in moves:
                image = hatquiver.reflect_height(diagram, height, node, sign)
                if image not in seen:
                    seen.add(image)
                    following.append(image)
        frontier = following
    return sorted(seen, key=lambda h: h.values)


def _pairs(pairs) -> list:
    return [[list(q.as_pair()), list(q_prime.as_pair())] for q, q_prime in pairs]
