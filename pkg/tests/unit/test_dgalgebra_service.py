import pytest

from meshroots.core.exceptions import SizeLimitExceededException, WindowExceededException
from meshroots.domain.entities.paths import JumpPath, Step
from meshroots.domain.entities.quiver import HatVertex
from meshroots.services import dgalgebra, hatquiver

E12 = Step.edge(1, 2)
E21 = Step.edge(2, 1)
J1 = Step.jump(1)
J2 = Step.jump(2)


class TestEpsilon:
    """Test suite for sign choices and mesh elements"""

    def test_default_epsilon(self, a3):
        """Test ε = +1 leaving parity-0 nodes"""
        eps = dgalgebra.default_epsilon(a3)

        assert eps(1, 2) == 1
        assert eps(2, 1) == -1
        assert eps(3, 2) == 1
        assert eps(2, 3) == -1

    def test_theta(self, a2):
        """Test θ_2 = ε(2→1)·(2→1→2)"""
        eps = dgalgebra.default_epsilon(a2)

        assert dgalgebra.theta(a2, eps, 2) == {JumpPath(2, (E21, E12)): -1}


class TestCounting:
    """Test suite for path counts"""

    @pytest.mark.parametrize("k,count", [(0, 1), (1, 3), (2, 1), (3, 0)])
    def test_count_a2_loops(self, a2, k, count):
        """Test paths 1 → 1 of length 4 on A2 by jump count"""
        assert dgalgebra.count_paths(a2, 1, 1, 4, k) == count

    def test_count_edge_cases(self, a2):
        """Test negative lengths and the trivial path"""
        assert dgalgebra.count_paths(a2, 1, 1, 0, 0) == 1
        assert dgalgebra.count_paths(a2, 1, 2, 0, 0) == 0
        assert dgalgebra.count_paths(a2, 1, 1, -2, 0) == 0

    def test_component_size(self, a2):
        """Test total size of A_{1,1;4}"""
        assert dgalgebra.component_size(a2, 1, 1, 4) == 5

    def test_star_counts(self, star):
        """Test four round trips from the centre of the 4-star"""
        assert dgalgebra.count_paths(star, 1, 1, 2, 0) == 4
        assert dgalgebra.count_paths(star, 1, 1, 2, 1) == 1

    @pytest.mark.parametrize("i,j,l,k", [
        (1, 1, 4, 1),
        (1, 1, 4, 2),
        (1, 3, 6, 2),
        (2, 2, 7, 3),
        (2, 3, 5, 1),
    ])
    def test_generator_counts_match(self, a3, i, j, l, k):
        """Test splitting at the last jump counts every path once"""
        assert dgalgebra.generator_counts(a3, i, j, l, k) == dgalgebra.count_paths(a3, i, j, l, k)


class TestBasis:
    """Test suite for canonical bases"""

    def test_a2_loops_with_one_jump(self, a2):
        """Test canonical order of A^-1_{1,1;4}"""
        basis = dgalgebra.enumerate_basis(a2, 1, 1, 4, 1)

        assert [str(path) for path in basis] == [
            "e(1-2);e(2-1);j(1)",
            "e(1-2);j(2);e(2-1)",
            "j(1);e(1-2);e(2-1)",
        ]

    def test_basis_size_matches_count(self, a4):
        """Test enumeration agrees with the recursion"""
        for k in range(4):
            assert len(dgalgebra.enumerate_basis(a4, 2, 3, 7, k)) == dgalgebra.count_paths(a4, 2, 3, 7, k)

    def test_empty_basis(self, a2):
        """Test no paths 1 → 2 of even length"""
        assert dgalgebra.enumerate_basis(a2, 1, 2, 2, 0) == []

    def test_cutoff_raises_error(self, a2):
        """Test the basis cutoff"""
        with pytest.raises(SizeLimitExceededException) as exc_info:
            dgalgebra.enumerate_basis(a2, 1, 1, 4, 1, cutoff=2)

        assert exc_info.value.details["required"] == 3

    def test_invalid_degree_raises_error(self, a2):
        """Test 2k > l is rejected"""
        with pytest.raises(ValueError):
            dgalgebra.enumerate_basis(a2, 1, 1, 2, 2)


class TestMultiplication:
    """Test suite for path products"""

    def test_multiply_composable(self):
        """Test p·q is q followed by p"""
        p = JumpPath(2, (E21,))
        q = JumpPath(1, (E12,))

        assert dgalgebra.multiply(p, q) == JumpPath(1, (E12, E21))

    def test_multiply_not_composable(self):
        """Test non-composable products vanish"""
        q = JumpPath(1, (E12,))

        assert dgalgebra.multiply(q, q) is None

    def test_identity_is_neutral(self):
        """Test e_1·p = p for p ending at 1"""
        p = JumpPath(1, (J1,))

        assert dgalgebra.multiply(JumpPath(1), p) == p


class TestDifferential:
    """Test suite for the differential"""

    def test_jump_free_path_is_closed(self, a2):
        """Test d vanishes without jumps"""
        eps = dgalgebra.default_epsilon(a2)

        assert dgalgebra.apply_differential(a2, eps, JumpPath(1, (E12, E21))) == {}

    def test_single_jump(self, a2):
        """Test d(l_1) = θ_1"""
        eps = dgalgebra.default_epsilon(a2)

        assert dgalgebra.apply_differential(a2, eps, JumpPath(1, (J1,))) == {JumpPath(1, (E12, E21)): 1}

    def test_koszul_signs(self, a2):
        """Test d(l_1 l_1) = θ_1 l_1 − l_1 θ_1"""
        eps = dgalgebra.default_epsilon(a2)

        image = dgalgebra.apply_differential(a2, eps, JumpPath(1, (J1, J1)))

        assert image == {
            JumpPath(1, (E12, E21, J1)): 1,
            JumpPath(1, (J1, E12, E21)): -1,
        }

    def test_component_matrices(self, a2):
        """Test the differentials of A_{1,1;4}"""
        component = dgalgebra.build_component(a2, 1, 1, 4)

        assert component.chain_dims == (1, 3, 1)
        assert component.differentials[0].entries == {(0, 0): 1, (0, 1): -1, (0, 2): 1}
        assert component.differentials[1].entries == {(0, 0): 1, (2, 0): -1}
        assert dgalgebra.differential(component) == component.differentials

    def test_component_cutoff_raises_error(self, a2):
        """Test the component cutoff"""
        with pytest.raises(SizeLimitExceededException):
            dgalgebra.build_component(a2, 1, 1, 4, cutoff=4)


class TestHomology:
    """Test suite for component homology"""

    @pytest.mark.parametrize("i,j,l,homology", [
        (1, 1, 0, (1,)),
        (1, 2, 1, (1,)),
        (1, 1, 2, (0, 0)),
        (1, 2, 3, (0, 1)),
        (1, 1, 4, (0, 1, 0)),
    ])
    def test_a2_components(self, a2, i, j, l, homology):
        """Test small A2 components"""
        assert dgalgebra.component_homology(a2, i, j, l).homology == homology

    def test_flipped_epsilon_same_homology(self, a3):
        """Test homology does not depend on ε"""
        eps = dgalgebra.default_epsilon(a3).flipped(1, 2)

        for l in range(6):
            assert (
                dgalgebra.component_homology(a3, 1, 1, l, eps=eps).homology
                == dgalgebra.component_homology(a3, 1, 1, l).homology
            )

    def test_path_algebra_quotient_a2(self, a2):
        """Test e_1 Π e_1 of A2 is spanned by the idempotent"""
        assert dgalgebra.path_algebra_quotient_dims(a2, 1, 1, 4) == [1, 0, 0, 0, 0]

    def test_star_has_no_higher_homology(self, star):
        """Test H_1 = 0 on a non-Dynkin tree"""
        dims = dgalgebra.component_homology(star, 1, 1, 2)

        assert dims.homology == (3, 0)


class TestProjectives:
    """Test suite for projective rank data"""

    def test_rank_data(self, a2):
        """Test X_q^0 and X_q^1 for q = (1, 0)"""
        quiver = hatquiver.window_quiver(a2, 0, 4)
        q = HatVertex(1, 0)

        assert dgalgebra.projective_rank_data(quiver, q, 0) == {
            HatVertex(1, 0): 1,
            HatVertex(2, 1): 1,
            HatVertex(1, 2): 1,
            HatVertex(2, 3): 1,
            HatVertex(1, 4): 1,
        }
        assert dgalgebra.projective_rank_data(quiver, q, 1)[HatVertex(1, 4)] == 3

    def test_vertex_outside_window_raises_error(self, a2):
        """Test q must lie in the window"""
        quiver = hatquiver.window_quiver(a2, 0, 2)

        with pytest.raises(WindowExceededException):
            dgalgebra.projective_rank_data(quiver, HatVertex(1, 4), 0)

    def test_cyclic_quiver_raises_error(self, a2):
        """Test rank data needs a window"""
        with pytest.raises(ValueError, match="window"):
            dgalgebra.projective_rank_data(hatquiver.cyclic_quiver(a2), HatVertex(1, 0), 0)


class TestComponentDocument:
    """Test suite for component serialization"""

    def test_document(self, a2):
        """Test bases and differentials in the JSON document"""
        component = dgalgebra.build_component(a2, 1, 1, 2)

        document = dgalgebra.component_to_document(component)

        assert document.bases == [["e(1-2);e(2-1)"], ["j(1)"]]
        assert document.differentials[0].entries == [[0, 0, 1]]
        assert document.homology is None
