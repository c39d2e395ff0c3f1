"""
CLI 테스트 (출력 형식과 종료 코드)
tests/test_cli.py
"""

import json

import pytest


class TestEnumerate:
    """enumerate / cuts / factorial / word"""

    def test_ordered(self, run_cli):
        result = run_cli("enumerate", "--kind", "ordered", "--degree", "2")
        assert result.exit_code == 0
        assert result.lines == ["1 2", "1(2)", "2(1)"]

    def test_parking(self, run_cli):
        assert run_cli("enumerate", "-k", "parking", "-n", "2").lines == ["(1,1)", "(1,2)", "(2,1)"]

    def test_json(self, run_cli):
        result = run_cli("--format", "json", "enumerate", "-k", "planar", "-n", "4")
        body = json.loads(result.stdout)
        assert body["count"] == 14
        assert body["kind"] == "planar"
        assert len(body["items"]) == 14

    def test_cuts(self, run_cli):
        result = run_cli("cuts", "1(2)")
        assert result.lines == ["{}  ∅ (x) 1(2)", "{1}  1(2) (x) ∅", "{2}  2 (x) 1"]

    def test_factorial(self, run_cli):
        assert run_cli("factorial", "[[][]]").lines == ["3"]

    @pytest.mark.parametrize("action,word,expected", [
        ("parkize", "(1,4,4)", "(1,2,2)"),
        ("standardize", "(3,7,5)", "(1,3,2)"),
        ("is-parking", "(11)", "true"),
        ("m-index", "(21332)", "4"),
        ("inverse", "(231)", "(3,1,2)"),
    ])
    def test_word(self, run_cli, action, word, expected):
        assert run_cli("word", action, word).lines == [expected]


class TestAlgebraCommands:
    """mul / comul / split / antipode / nwarrow / dual"""

    def test_mul_fqsym(self, run_cli):
        assert run_cli("mul", "-a", "fqsym", "(1)", "(1)").lines == ["(1,2) + (2,1)"]

    def test_comul(self, run_cli):
        result = run_cli("comul", "-a", "ho", "1(2,3)")
        assert result.lines == ["2*1 (x) 1(2) + 1 2 (x) 1 + 1(2,3) (x) ∅ + ∅ (x) 1(2,3)"]

    def test_comul_reduced(self, run_cli):
        assert run_cli("comul", "-a", "hp", "--reduced", "[[]]").lines == ["[] (x) []"]

    @pytest.mark.parametrize("side,expected", [
        ("<", "1 (x) 1(2) + 1 2 (x) 1"),
        ("prec", "1 (x) 1(2) + 1 2 (x) 1"),
        (">", "1 (x) 1(2)"),
    ])
    def test_split(self, run_cli, side, expected):
        assert run_cli("split", "-a", "ho", "-s", side, "1(2,3)").lines == [expected]

    def test_split_on_pqsym_cop(self, run_cli):
        result = run_cli("split", "-a", "pqsym-cop", "-s", ">", "(21332)")
        assert result.lines == ["(1) (x) (2,1,3,3)"]

    def test_antipode(self, run_cli):
        assert run_cli("antipode", "-a", "ho", "1(2)").lines == ["1 2 - 1(2)"]

    def test_nwarrow(self, run_cli):
        assert run_cli("nwarrow", "-a", "pqsym-cop", "(21)", "(1)").lines == ["(2,1,3) + (2,3,1)"]

    def test_dual(self, run_cli):
        assert run_cli("dual", "--side", "<", "[]", "[[]]").lines == ["[[]] []"]

    def test_json_terms(self, run_cli):
        result = run_cli("--format", "json", "comul", "-a", "hp", "--reduced", "[[]]")
        body = json.loads(result.stdout)
        assert body["terms"] == [{"coeff": "1", "left": "[]", "right": "[]"}]

    def test_theta(self, run_cli):
        assert run_cli("theta", "1(2,3)").lines == ["(1,2,3) + (1,3,2)"]

    def test_pairing(self, run_cli):
        assert run_cli("pairing", "1 2", "1 2").lines == ["2"]


class TestMatricesAndSeries:
    """pairing-matrix / kernel / primtot / series"""

    def test_pairing_matrix(self, run_cli):
        assert run_cli("pairing-matrix", "-n", "2").lines == ["2 1 1", "1 1 0", "1 0 1"]

    def test_kernel(self, run_cli):
        assert len(run_cli("kernel", "-n", "3", "--of", "theta").lines) == 10

    def test_primtot_upto(self, run_cli):
        assert run_cli("primtot", "-c", "ho", "-n", "4", "--upto").lines == ["1,1,7,66"]

    def test_primtot_basis(self, run_cli):
        result = run_cli("primtot", "-c", "hho", "-n", "3")
        assert result.lines[0] == "dim = 1"
        assert len(result.lines) == 2

    def test_series_to_alphabet(self, run_cli):
        assert run_cli("series", "--source", "ordered", "-n", "5").lines == ["0,1,1,7,66,786"]

    def test_series_from_alphabet(self, run_cli):
        result = run_cli("series", "--direction", "from-alphabet", "--source", "0,1", "-n", "5")
        assert result.lines == ["1,1,2,5,14,42"]

    def test_degp(self, run_cli):
        assert run_cli("degp", "-c", "ho", "1(2)").lines == ["2"]

    def test_degp_steps(self, run_cli):
        assert run_cli("degp", "-c", "ho", "--steps", "<", "1(2)").lines == ["1 (x) 1"]


@pytest.mark.integration
class TestVerification:
    """verify / certificate / iso 와 종료 코드"""

    def test_verify_passes(self, run_cli):
        result = run_cli("verify", "-c", "ho", "-n", "3")
        assert result.exit_code == 0
        assert result.lines
        assert all(line.startswith("PASS") for line in result.lines)

    @pytest.mark.parametrize("algebra", ["ck", "pqsym", "fqsym", "hp", "pqsym-cop"])
    def test_verify_hopf_on_algebra(self, run_cli, algebra):
        result = run_cli("verify", "-a", algebra, "-l", "hopf", "-n", "3")
        assert result.exit_code == 0
        assert all(line.startswith("PASS") for line in result.lines)
        assert {line.split()[2] for line in result.lines} == {f"[{algebra}]"}
        assert "hopf.antipode" in result.stdout

    def test_verify_algebra_needs_hopf_group(self, run_cli):
        result = run_cli("verify", "-a", "ck", "-l", "e1", "-n", "3")
        assert result.exit_code == 1
        assert result.stderr.startswith("error:")

    def test_verify_needs_carrier_or_algebra(self, run_cli):
        assert run_cli("verify", "-l", "hopf", "-n", "3").exit_code == 1
        assert run_cli("verify", "-n", "3").exit_code == 1

    def test_verify_algebra_json(self, run_cli):
        result = run_cli("--format", "json", "verify", "-a", "ck", "-l", "hopf", "-n", "2")
        body = json.loads(result.stdout)
        assert result.exit_code == 0
        assert body["carrier"] == "ck"
        assert {law["carrier"] for law in body["laws"]} == {"ck"}

    def test_corruption_exits_two(self, run_cli):
        result = run_cli("verify", "-c", "hp", "-l", "e2", "-n", "3", "--corrupt", "prec")
        assert result.exit_code == 2
        assert any(line.startswith("FAIL") for line in result.lines)
        assert "failed" in result.stderr

    def test_corruption_json(self, run_cli):
        result = run_cli("--format", "json", "verify", "-c", "hp", "-l", "e1", "-n", "3", "--corrupt", "nwarrow")
        assert result.exit_code == 2
        assert json.loads(result.stdout)["passed"] is False

    def test_certificate(self, run_cli):
        result = run_cli("certificate", "-c", "ho", "-n", "3")
        assert result.exit_code == 0
        assert result.lines[:2] == ["carrier ho degree<=3", "alphabet sizes 1,1,7"]
        assert "degree 3: rank 16 / 16" in result.lines

    def test_iso(self, run_cli):
        result = run_cli("iso", "--from", "hho", "--to", "fqsym", "-n", "3", "--no-matrices")
        assert result.exit_code == 0
        assert result.lines[:2] == ["hho: alphabet sizes 1,0,1", "fqsym-cop: alphabet sizes 1,0,1"]


class TestExitCodes:
    """오류 종료 코드"""

    def test_parse_error(self, run_cli):
        result = run_cli("mul", "-a", "ho", "1(2", "1")
        assert result.exit_code == 1
        assert result.stderr.startswith("error:")

    def test_usage_error(self, run_cli):
        assert run_cli("mul", "-a", "nosuch", "1", "1").exit_code == 1

    def test_guard(self, run_cli):
        result = run_cli("pairing-matrix", "--degree", "9")
        assert result.exit_code == 3
        assert "feasibility bound" in result.stderr

    def test_augmentation(self, run_cli):
        assert run_cli("split", "-a", "ho", "-s", "<", "∅").exit_code == 1

    def test_version(self, run_cli):
        result = run_cli("--version")
        assert result.exit_code == 0
        assert "1.0.0" in result.stdout
