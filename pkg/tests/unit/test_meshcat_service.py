import time

import pytest

from meshroots.core.exceptions import SizeLimitExceededException
from meshroots.domain.entities.profiles import HomMethod, RHomProfile
from meshroots.domain.entities.quiver import HatVertex
from meshroots.services import dgalgebra
from meshroots.services.meshcat import MeshCategoryService, knit_euler


class TestKnitEuler:
    """Test suite for Euler-form knitting"""

    def test_a2_target_1_0(self, a2):
        """Test E(q) = euler(q, (1, 0)) on A2"""
        euler = knit_euler(a2, HatVertex(1, 0))

        assert euler == {
            HatVertex(1, 0): 1,
            HatVertex(2, 1): 1,
            HatVertex(1, 2): 0,
            HatVertex(2, 3): -1,
            HatVertex(1, 4): -1,
            HatVertex(2, 5): 0,
        }

    def test_tau_shifts_target(self, a3):
        """Test E_{τq′}(τq) = E_{q′}(q)"""
        base = knit_euler(a3, HatVertex(2, 1))
        shifted = knit_euler(a3, HatVertex(2, 3))

        for vertex, value in base.items():
            assert shifted[HatVertex(vertex.node, (vertex.level + 2) % 8)] == value


class TestMeshQuotient:
    """Test suite for explicit homology of path components"""

    def test_arrow(self, meshcat, a2):
        """Test the single arrow (1, 0) → (2, 1)"""
        assert meshcat.mesh_quotient_dim(a2, HatVertex(1, 0), HatVertex(2, 1)) == (1, (1,))

    def test_negative_length(self, meshcat, a2):
        """Test targets below the source give nothing"""
        assert meshcat.mesh_quotient_dim(a2, HatVertex(2, 3), HatVertex(1, 0)) == (0, ())

    def test_mesh_kills_round_trip(self, meshcat, a2):
        """Test (1, 0) → (1, 2) is zero modulo the mesh"""
        assert meshcat.mesh_quotient_dim(a2, HatVertex(1, 0), HatVertex(1, 2)) == (0, (0, 0))

    def test_component_cache(self, meshcat, a2, mocker):
        """Test repeated lookups compute once"""
        spy = mocker.spy(dgalgebra, "component_homology")

        meshcat.component_homology(a2, 1, 1, 4)
        meshcat.component_homology(a2, 1, 1, 4)

        assert spy.call_count == 1
        assert meshcat.component_repo.count() == 1


class TestProfiles:
    """Test suite for single-pair Hom/Ext¹"""

    @pytest.mark.parametrize("method", list(HomMethod))
    @pytest.mark.parametrize("source,target,expected", [
        ((1, 0), (1, 0), (1, 0)),
        ((2, 1), (1, 0), (1, 0)),
        ((1, 2), (1, 0), (0, 0)),
        ((2, 3), (1, 0), (0, 1)),
        ((1, 4), (1, 0), (0, 1)),
        ((2, 5), (1, 0), (0, 0)),
    ])
    def test_a2_profiles(self, meshcat, a2, method, source, target, expected):
        """Test every method on the A2 column of q′ = (1, 0)"""
        profile = meshcat.profile(a2, HatVertex(*source), HatVertex(*target), method)

        assert (profile.hom, profile.ext1) == expected

    def test_concentration_a2(self, meshcat, a2):
        """Test single-degree homology for l < 2h on A2"""
        assert meshcat.concentration_violations(a2) == []


class TestTables:
    """Test suite for full Hom tables and dualities"""

    @pytest.mark.parametrize("fixture", ["a2", "a3", "a4"])
    def test_three_methods_agree(self, request, meshcat, fixture):
        """Test quotient, knitting and oracle tables coincide"""
        diagram = request.getfixturevalue(fixture)

        quotient = meshcat.hom_table(diagram, HomMethod.QUOTIENT)
        knitting = meshcat.hom_table(diagram, HomMethod.KNITTING)
        oracle = meshcat.hom_table(diagram, "oracle")

        assert MeshCategoryService.table_differences(quotient, knitting) == []
        assert MeshCategoryService.table_differences(quotient, oracle) == []
        assert len(quotient.profiles) == (diagram.rank * diagram.coxeter_number) ** 2

    @pytest.mark.parametrize("fixture", ["a3", "a4", "d4", "d5", "e6"])
    def test_dualities_on_knitted_table(self, request, meshcat, fixture):
        """Test Serre duality, shift, τ-equivariance and the diagonal"""
        diagram = request.getfixturevalue(fixture)
        table = meshcat.hom_table(diagram, HomMethod.KNITTING)

        assert MeshCategoryService.serre_check(table) == (True, [])
        assert MeshCategoryService.shift_check(table) == (True, [])
        assert MeshCategoryService.tau_equivariance(table) == (True, [])
        assert MeshCategoryService.diagonal_violations(table) == []

    def test_serre_violation_reported(self, meshcat, a2, mocker):
        """Test a corrupted table fails Serre duality"""
        table = meshcat.hom_table(a2, HomMethod.KNITTING)
        q = HatVertex(1, 0)
        mocker.patch.dict(table.profiles, {(q, q): RHomProfile(q, q, 0, 0)})

        passed, violations = MeshCategoryService.serre_check(table)

        assert passed is False
        assert (q, q) in violations

    @pytest.mark.slow
    def test_d4_agreement(self, meshcat, d4):
        """Test quotient, knitting and oracle tables agree on D4"""
        quotient = meshcat.hom_table(d4, HomMethod.QUOTIENT)
        knitting = meshcat.hom_table(d4, HomMethod.KNITTING)
        oracle = meshcat.hom_table(d4, HomMethod.ORACLE)

        assert MeshCategoryService.table_differences(quotient, knitting) == []
        assert MeshCategoryService.table_differences(quotient, oracle) == []


class TestPeriodicity:
    """Test suite for the shift of homology by 2h"""

    def test_a2_periodicity(self, meshcat, a2):
        """Test H_k(l) = H_{k+2}(l + 2h) on A2"""
        report = meshcat.periodicity_check(a2, 1)

        assert report.passed is True
        assert report.skipped == ()
        assert len(report.rows) == 8

    def test_a3_periodicity(self, meshcat, a3):
        """Test H_k(l) = H_{k+2}(l + 2h) on A3 up to l = 2"""
        report = meshcat.periodicity_check(a3, 2)

        assert report.passed is True
        assert report.skipped == ()
        assert len(report.rows) == 27

    @pytest.mark.slow
    def test_d4_periodicity_within_ten_minutes(self, meshcat, d4):
        """Test D4 periodicity up to l = 2 finishes in under ten minutes"""
        started = time.perf_counter()
        report = meshcat.periodicity_check(d4, 2)
        elapsed = time.perf_counter() - started

        assert report.passed is True
        assert report.skipped == ()
        assert len(report.rows) == 48
        assert elapsed < 600

    def test_cutoff_skips_rows(self, a2, mocker):
        """Test components over the cutoff are reported as skipped"""
        service = MeshCategoryService()
        mocker.patch.object(
            service,
            "component_homology",
            side_effect=SizeLimitExceededException("component", 10, 1),
        )

        report = service.periodicity_check(a2, 0)

        assert report.rows == ()
        assert report.skipped == ((1, 1, 0), (1, 2, 0), (2, 1, 0), (2, 2, 0))
        assert report.passed is True
