"""
Tests for Operad CLI
"""

import json

import pytest
from click.testing import CliRunner

from cli.operad import cli, run


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), obj={})


class TestPresentationCommands:
    """표현을 만드는 명령 테스트"""

    def test_parse_builtin(self, runner):
        result = invoke(runner, "parse", "Com")
        report = json.loads(result.stdout)

        assert result.exit_code == 0
        assert report["status"] == "INFO"
        assert report["command"]["name"] == "parse"
        assert report["payload"]["presentation"]["name"] == "Com"
        assert report["payload"]["dimensions"] == {"generators": 1, "relations": 2}

    def test_parse_file(self, runner, opd_file):
        path = opd_file("operad As { gen m:2; rel m(m(1,2),3) - m(1,m(2,3)); }", "as.opd")
        result = invoke(runner, "parse", str(path))

        assert result.exit_code == 0
        assert "operad As" in json.loads(result.stdout)["payload"]["dsl"]

    def test_lin_with_color_names(self, runner):
        result = invoke(runner, "lin", "Com", "--color-names", "red,blue")
        payload = json.loads(result.stdout)["payload"]

        assert result.exit_code == 0
        assert payload["presentation"]["name"] == "Lin_Com"
        assert payload["dimensions"]["relations"] == 6

    def test_dual(self, runner):
        result = invoke(runner, "dual", "Com")
        assert json.loads(result.stdout)["payload"]["presentation"]["name"] == "Com_dual"

    def test_manin_white(self, runner):
        result = invoke(runner, "manin", "Com", "Lie", "--white")
        assert json.loads(result.stdout)["payload"]["presentation"]["name"] == "Com_white_Lie"

    def test_write_opd(self, runner, tmp_path):
        """.opd 출력은 DSL 텍스트"""
        target = tmp_path / "out" / "lmt.opd"
        result = invoke(runner, "lmt", "Com", "-c", "2", "-o", str(target))

        assert result.exit_code == 0
        assert target.read_text(encoding="utf-8").startswith("operad LMT_Com")

    def test_lmt_vertex_order(self, runner):
        result = invoke(runner, "lmt", "Dend", "-c", "2", "--vertex-order", "inorder")
        payload = json.loads(result.stdout)["payload"]

        assert result.exit_code == 0
        assert payload["presentation"]["name"] == "LMT_Dend"
        assert payload["dimensions"]["relations"] == 12

    def test_unknown_vertex_order(self, runner):
        result = invoke(runner, "lmt", "Com", "--vertex-order", "postorder")
        assert result.exit_code == 2


class TestComputationCommands:
    """계산 명령 테스트"""

    def test_dims(self, runner):
        result = invoke(runner, "dims", "Lie", "-n", "4", "--sequence")
        payload = json.loads(result.stdout)["payload"]

        assert payload["dimension"] == 6
        assert payload["sequence"] == [1, 1, 2, 6]

    def test_count_matching(self, runner):
        result = invoke(runner, "count-matching", "Com", "-c", "2")
        assert json.loads(result.stdout)["payload"]["details"]["count"] == 4

    def test_gb_confluence(self, runner):
        result = invoke(runner, "gb", "As", "--check-confluence", "--normal-arity", "4")
        report = json.loads(result.stdout)

        assert result.exit_code == 0
        assert report["status"] == "PASS"
        assert report["payload"]["details"]["normal_monomials"] == {"4": 24}

    def test_polarize_single_type(self, runner):
        result = invoke(runner, "polarize", "Com", "--type", "1,1")
        entries = json.loads(result.stdout)["payload"]["polarizations"]

        assert len(entries) == 2
        assert {e["type"] for e in entries} == {"(1,1)"}

    def test_builtins(self, runner):
        result = invoke(runner, "builtins")
        names = [e["name"] for e in json.loads(result.stdout)["payload"]["builtins"]]
        assert names[:3] == ["Com", "Lie", "As"]

    def test_verify_list(self, runner):
        result = invoke(runner, "verify", "--list")
        verifiers = json.loads(result.stdout)["payload"]["verifiers"]
        assert len(verifiers) == 12

    def test_verify_pass(self, runner):
        result = invoke(runner, "verify", "lin-encodes", "Com", "-c", "2")
        report = json.loads(result.stdout)

        assert result.exit_code == 0
        assert report["payload"]["theorem"] == "lin-encodes"

    @pytest.mark.parametrize("theorem_id", ["iterate-lin", "lmt-lin-commute"])
    def test_verify_layered_colors(self, runner, theorem_id):
        """Ω² 색 이름(c0.c1)을 쓰는 검증기도 정상 종료"""
        result = invoke(runner, "verify", theorem_id, "Com", "-c", "2")
        report = json.loads(result.stdout)

        assert result.exit_code == 0
        assert report["status"] == "PASS"
        assert report["payload"]["theorem"] == theorem_id


class TestErrors:
    """오류 종료 코드 테스트"""

    def test_unknown_source(self, runner):
        result = invoke(runner, "parse", "NoSuchOperad")
        assert result.exit_code == 2

    def test_parse_error(self, runner, opd_file):
        path = opd_file("operad X { gen m:2 }")
        result = invoke(runner, "parse", str(path))

        assert result.exit_code == 2
        assert "오류" in result.stderr

    def test_malformed_sigma(self, runner):
        result = invoke(runner, "mt", "Com", "-s", "r1:c(1,1)")
        assert result.exit_code == 2

    def test_inadmissible_sigma(self, runner):
        """허용되지 않는 σ는 계산 오류"""
        result = invoke(runner, "mt", "Com", "-s", "r1:c(1,1)=(12)")
        assert result.exit_code == 1

    def test_unknown_verifier(self, runner):
        result = invoke(runner, "verify", "no-such-theorem")
        assert result.exit_code == 2

    def test_bad_output_suffix(self, runner, tmp_path):
        result = invoke(runner, "parse", "Com", "-o", str(tmp_path / "out.txt"))
        assert result.exit_code == 2


class TestRun:
    """run(argv) 종료 코드 테스트"""

    def test_run_returns_zero(self, capsys):
        assert run(["parse", "Com"]) == 0
        assert json.loads(capsys.readouterr().out)["status"] == "INFO"

    def test_run_usage_error(self):
        assert run(["no-such-command"]) == 2

    def test_run_parse_error(self, opd_file):
        path = opd_file("operad X { gen m:2 }")
        assert run(["parse", str(path)]) == 2
