import json

import pytest

from meshroots.cli import main as cli


def run(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def error_document(err: str) -> dict:
    """The error document is the last line written to stderr"""
    return json.loads(err.strip().splitlines()[-1])


class TestQuiverCommand:
    """Integration tests for `meshroots quiver`"""

    def test_window_dot(self, capsys):
        """Test DOT output for a window"""
        status, out, _ = run(capsys, "quiver", "--diagram", "A2", "--window", "0..1", "--format", "dot")

        assert status == 0
        assert out == 'digraph "A2" {\n  "1_0";\n  "2_1";\n  "1_0" -> "2_1";\n}\n'

    def test_cyclic_json(self, capsys):
        """Test JSON output for Γ̂_cyc"""
        status, out, _ = run(capsys, "quiver", "--diagram", "D4", "--cyclic", "--format", "json")

        document = json.loads(out)
        assert status == 0
        assert len(document["vertices"]) == 24

    def test_deterministic(self, capsys):
        """Test two runs print identical bytes"""
        _, first, _ = run(capsys, "quiver", "--diagram", "E6", "--cyclic")
        _, second, _ = run(capsys, "quiver", "--diagram", "E6", "--cyclic")

        assert first == second

    def test_tree_window(self, capsys, tree_file):
        """Test windows of a custom tree"""
        status, out, _ = run(capsys, "quiver", "--tree", str(tree_file), "--window", "0..1")

        assert status == 0
        assert out.startswith('digraph "dtilde4" {')

    def test_tree_cyclic_unsupported(self, capsys, tree_file):
        """Test Γ̂_cyc needs a Dynkin diagram"""
        status, _, err = run(capsys, "quiver", "--tree", str(tree_file), "--cyclic")

        assert status == 2
        assert error_document(err)["code"] == "DYN_001"

    def test_both_modes_is_usage_error(self, capsys):
        """Test --cyclic with --window"""
        status, out, err = run(capsys, "quiver", "--diagram", "A2", "--cyclic", "--window", "0..3")

        assert status == 2
        assert out == ""
        assert error_document(err)["code"] == "02"

    def test_unsupported_diagram(self, capsys):
        """Test D3 is rejected"""
        status, _, err = run(capsys, "quiver", "--diagram", "D3", "--cyclic")

        assert status == 2
        assert error_document(err)["code"] == "DYN_001"

    def test_malformed_diagram_spec(self, capsys):
        """Test a spec outside A/D/E is a DYN_001 error"""
        status, _, err = run(capsys, "quiver", "--diagram", "X9", "--cyclic")

        assert status == 2
        assert error_document(err)["code"] == "DYN_001"

    def test_output_file(self, capsys, tmp_path):
        """Test --output writes the result to a file"""
        target = tmp_path / "a2.dot"

        status, out, _ = run(capsys, "quiver", "--diagram", "A2", "--window", "0..1", "--output", str(target))

        assert status == 0
        assert out == ""
        assert target.read_text().startswith('digraph "A2"')


class TestHomCommand:
    """Integration tests for `meshroots hom`"""

    @pytest.mark.parametrize("method", ["quotient", "knitting", "oracle"])
    def test_endomorphisms(self, capsys, method):
        """Test End(X_q) on A2 with every method"""
        status, out, _ = run(
            capsys, "hom", "--diagram", "A2", "--source", "1,0", "--target", "1,0", "--method", method,
        )

        assert status == 0
        assert out == f"source=1,0 target=1,0 hom=1 ext1=0 euler=1 method={method}\n"

    def test_levels_reduce_mod_2h(self, capsys):
        """Test levels are read modulo 2h"""
        status, out, _ = run(
            capsys, "hom", "--diagram", "A2", "--source", "2,9", "--target", "1,6", "--format", "json",
        )

        document = json.loads(out)
        assert status == 0
        assert document["source"] == [2, 3]
        assert document["target"] == [1, 0]
        assert (document["hom"], document["ext1"]) == (0, 1)

    @pytest.mark.parametrize("method", ["knitting", "oracle"])
    def test_a4_nakayama_image(self, capsys, method):
        """Test Hom and Ext¹ from (1, 0) to its Nakayama image (4, 3) on A4"""
        status, out, _ = run(
            capsys, "hom", "--diagram", "A4", "--source", "1,0", "--target", "4,3", "--method", method,
        )

        assert status == 0
        assert out == f"source=1,0 target=4,3 hom=0 ext1=0 euler=0 method={method}\n"

    def test_a4_knitting_matches_oracle(self, capsys):
        """Test knitting and the oracle agree on the A4 pair (1, 0), (4, 3)"""
        argv = ["hom", "--diagram", "A4", "--source", "1,0", "--target", "4,3", "--format", "json"]
        _, knitted, _ = run(capsys, *argv, "--method", "knitting")
        _, oracle, _ = run(capsys, *argv, "--method", "oracle")

        knitted, oracle = json.loads(knitted), json.loads(oracle)
        assert knitted["target"] == [4, 3]
        assert (knitted["hom"], knitted["ext1"]) == (oracle["hom"], oracle["ext1"])

    def test_invalid_vertex(self, capsys):
        """Test off-parity vertices"""
        status, _, err = run(capsys, "hom", "--diagram", "A2", "--source", "1,1", "--target", "1,0")

        assert status == 2
        assert error_document(err)["code"] == "HAT_004"


class TestHomologyCommand:
    """Integration tests for `meshroots homology`"""

    def test_text(self, capsys):
        """Test text output for A_{1,1;4} on A2"""
        status, out, _ = run(capsys, "homology", "--diagram", "A2", "--i", "1", "--j", "1", "--l", "4")

        assert status == 0
        assert "chain_dims = [1, 3, 1]" in out
        assert "H = [0, 1, 0]" in out

    def test_json(self, capsys):
        """Test JSON component document"""
        status, out, _ = run(
            capsys, "homology", "--diagram", "A2", "--i", "1", "--j", "1", "--l", "2", "--format", "json",
        )

        document = json.loads(out)
        assert status == 0
        assert document["bases"] == [["e(1-2);e(2-1)"], ["j(1)"]]
        assert document["homology"]["homology"] == [0, 0]

    def test_tree(self, capsys, tree_file):
        """Test homology on the 4-star"""
        status, out, _ = run(capsys, "homology", "--tree", str(tree_file), "--i", "1", "--j", "1", "--l", "2")

        assert status == 0
        assert "H = [3, 0]" in out

    def test_cutoff(self, capsys):
        """Test cutoff errors exit with status 3"""
        status, _, err = run(
            capsys, "homology", "--diagram", "A2", "--i", "1", "--j", "1", "--l", "4", "--cutoff", "2",
        )

        assert status == 3
        assert error_document(err)["code"] == "LA_001"

    def test_missing_tree_file(self, capsys, tmp_path):
        """Test a missing tree file is a usage error"""
        status, _, err = run(
            capsys, "homology", "--tree", str(tmp_path / "missing.json"), "--i", "1", "--j", "1", "--l", "0",
        )

        assert status == 2
        assert error_document(err)["code"] == "DYN_002"

    def test_unknown_node(self, capsys):
        """Test nodes outside the diagram"""
        status, _, err = run(capsys, "homology", "--diagram", "A2", "--i", "3", "--j", "1", "--l", "2")

        assert status == 2
        assert error_document(err)["code"] == "HAT_004"

    def test_invalid_tree(self, capsys, tmp_path):
        """Test a cycle in the tree document"""
        path = tmp_path / "triangle.json"
        path.write_text(json.dumps({"nodes": 3, "edges": [[1, 2], [2, 3], [3, 1]]}))

        status, _, err = run(capsys, "homology", "--tree", str(path), "--i", "1", "--j", "1", "--l", "0")

        assert status == 2
        assert error_document(err)["code"] == "DYN_002"


class TestTableCommand:
    """Integration tests for `meshroots table`"""

    def test_csv(self, capsys):
        """Test CSV table for A2"""
        status, out, _ = run(capsys, "table", "--diagram", "A2", "--method", "quotient", "--format", "csv")

        lines = out.splitlines()
        assert status == 0
        assert lines[0] == "q,q_prime,hom,ext1,method"
        assert len(lines) == 37

    def test_json(self, capsys):
        """Test JSON table for A3"""
        status, out, _ = run(capsys, "table", "--diagram", "A3", "--format", "json")

        document = json.loads(out)
        assert status == 0
        assert document["method"] == "knitting"
        assert len(document["profiles"]) == 144


class TestRootsCommand:
    """Integration tests for `meshroots roots`"""

    def test_report(self, capsys):
        """Test the bijection report for D4"""
        status, out, _ = run(capsys, "roots", "--diagram", "D4")

        document = json.loads(out)
        assert status == 0
        assert document["count"] == 24
        assert document["matches_oracle"] is True
        assert set(document["bijection"][0]) == {"vertex", "class"}

    def test_gram_csv(self, capsys):
        """Test the Gram CSV for A3"""
        status, out, _ = run(capsys, "roots", "--diagram", "A3", "--format", "csv")

        assert status == 0
        assert len(out.splitlines()) == 13

    def test_explicit_height(self, capsys):
        """Test a linear orientation"""
        status, out, _ = run(capsys, "roots", "--diagram", "A3", "--height", "0,1,2")

        assert status == 0
        assert json.loads(out)["height"] == [0, 1, 2]

    def test_invalid_height(self, capsys):
        """Test a height breaking the edge condition"""
        status, _, err = run(capsys, "roots", "--diagram", "A3", "--height", "0,3,2")

        assert status == 2
        assert error_document(err)["code"] == "HAT_002"


class TestVerifyCommand:
    """Integration tests for `meshroots verify`"""

    def test_passing_suites(self, capsys):
        """Test exit status 0 when every check passes"""
        status, out, _ = run(capsys, "verify", "--diagram", "A2", "--suite", "cartan,roots,coxeter")

        report = json.loads(out)
        assert status == 0
        assert report["passed"] is True
        assert report["suites"] == ["cartan", "roots", "coxeter"]

    def test_nondynkin_tree(self, capsys, tree_file):
        """Test the non-Dynkin suite on a tree file"""
        status, out, _ = run(capsys, "verify", "--tree", str(tree_file), "--suite", "nondynkin", "--lmax", "2")

        assert status == 0
        assert json.loads(out)["diagram"] == "dtilde4"

    def test_suite_needs_diagram(self, capsys):
        """Test Dynkin suites need --diagram"""
        status, _, err = run(capsys, "verify", "--suite", "cartan")

        assert status == 2
        assert error_document(err)["code"] == "02"

    def test_resource_limited(self, capsys):
        """Test exit status 3 when only cutoffs fail"""
        status, out, _ = run(
            capsys, "verify", "--diagram", "A2", "--suite", "periodicity", "--lmax", "1", "--cutoff", "1",
        )

        report = json.loads(out)
        assert status == 3
        assert report["resource_limited"] is True

    def test_claim_failure(self, capsys, mocker):
        """Test exit status 1 when a claim fails"""
        mocker.patch("meshroots.services.roots.shift_antiperiodicity", return_value=False)

        status, out, _ = run(capsys, "verify", "--diagram", "A2", "--suite", "roots")

        assert status == 1
        assert json.loads(out)["passed"] is False

    def test_unexpected_error(self, capsys, mocker):
        """Test unexpected errors exit with status 1"""
        mocker.patch.dict(cli.COMMANDS, {"quiver": mocker.Mock(side_effect=RuntimeError("boom"))})

        status, _, err = run(capsys, "quiver", "--diagram", "A2", "--cyclic")

        assert status == 1
        assert error_document(err)["code"] == "500"

    @pytest.mark.slow
    def test_all_suites_a3(self, capsys):
        """Test every suite on A3 and that a rerun prints identical bytes"""
        status, out, _ = run(capsys, "verify", "--diagram", "A3", "--suite", "all")
        _, rerun, _ = run(capsys, "verify", "--diagram", "A3", "--suite", "all")

        report = json.loads(out)
        assert status == 0
        assert report["suites"][-1] == "dg"
        assert rerun == out

    @pytest.mark.slow
    def test_all_suites_d4_rerun_identical(self, capsys):
        """Test every suite on D4 twice prints identical bytes"""
        status, out, _ = run(capsys, "verify", "--diagram", "D4", "--suite", "all")
        _, rerun, _ = run(capsys, "verify", "--diagram", "D4", "--suite", "all")

        assert status == 0
        assert json.loads(out)["passed"] is True
        assert rerun == out
