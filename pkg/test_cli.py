#!/usr/bin/env python3
"""
CLI 테스트: validate, tables, analyze, fuzz, examples 명령과 종료 코드
"""

import json

from typer.testing import CliRunner

from main import EXIT_VALIDATION, app
from src.pipeline import get_builtin, serialize_spec

runner = CliRunner()


def json_output(result) -> dict:
    """로그가 섞여 있어도 첫 JSON 객체만 파싱"""
    text = result.stdout
    data, _ = json.JSONDecoder().raw_decode(text[text.index("{"):])
    return data


class TestValidate:
    def test_builtins(self):
        for name in ("sasakian3", "flat", "hyperbolic"):
            result = runner.invoke(app, ["validate", name])
            assert result.exit_code == 0, result.output

    def test_jacobi_violation(self, tmp_path):
        data = json.loads(serialize_spec(get_builtin("flat")))
        data["brackets"] = [
            {"i": 1, "j": 2, "k": 1, "value": "1"},
            {"i": 1, "j": 3, "k": 1, "value": "1"},
            {"i": 2, "j": 3, "k": 2, "value": "1"},
        ]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == EXIT_VALIDATION

    def test_missing_file(self):
        result = runner.invoke(app, ["validate", "missing.json"])
        assert result.exit_code == EXIT_VALIDATION


class TestTables:
    def test_text(self):
        result = runner.invoke(app, ["tables", "sasakian3"])
        assert result.exit_code == 0, result.output
        assert "[e1,e2] = 2e3" in result.stdout

    def test_json(self):
        result = runner.invoke(app, ["tables", "flat", "--format", "json"])
        assert result.exit_code == 0, result.output
        data = json_output(result)
        assert data["manifold"] == "flat"
        assert data["brackets"] == []
        assert data["g2"]["parallel"] is True


class TestAnalyze:
    def test_text_default_xi(self):
        result = runner.invoke(app, ["analyze", "sasakian3"])
        assert result.exit_code == 0, result.output
        assert "i10 = 4" in result.stdout
        assert "정리 감사: 통과" in result.stdout

    def test_json_with_xi(self):
        result = runner.invoke(app, ["analyze", "sasakian3", "--xi", "3/5,4/5,0,0,0,0,0", "--format", "json"])
        assert result.exit_code == 0, result.output
        data = json_output(result)
        assert data["xi_label"] == "3/5e1+4/5e2"
        assert data["named"]["almost_k_contact"]["holds"] is False
        assert "∇_ξφ ≠ 0" in data["named"]["almost_k_contact"]["witness"]
        assert data["audit"]["passed"] is True

    def test_u_parameter(self):
        result = runner.invoke(app, ["analyze", "hyperbolic", "--u", "0,0,0,0,0,0", "--format", "json"])
        assert result.exit_code == 0, result.output
        data = json_output(result)
        assert data["xi_label"] == "e7"
        assert data["diagnostics"]["div_xi"] == "-6"

    def test_non_unit_xi(self):
        result = runner.invoke(app, ["analyze", "flat", "--xi", "2,0,0,0,0,0,0"])
        assert result.exit_code == EXIT_VALIDATION

    def test_bad_rational(self):
        result = runner.invoke(app, ["analyze", "flat", "--xi", "1,0,0,0,0,0,x"])
        assert result.exit_code == EXIT_VALIDATION

    def test_unknown_format(self):
        result = runner.invoke(app, ["analyze", "flat", "--format", "yaml"])
        assert result.exit_code == EXIT_VALIDATION

    def test_output_file(self, tmp_path):
        path = tmp_path / "reports" / "flat.json"
        result = runner.invoke(app, ["analyze", "flat", "--format", "json", "--output", str(path)])
        assert result.exit_code == 0, result.output
        assert json.loads(path.read_text(encoding="utf-8"))["manifold"] == "flat"


class TestFuzz:
    def test_flat(self):
        result = runner.invoke(app, ["fuzz", "flat", "--trials", "3", "--seed", "4", "--format", "json"])
        assert result.exit_code == 0, result.output
        data = json_output(result)
        assert data["passed"] == 3
        assert data["trivial"] == 3

    def test_zero_trials(self):
        result = runner.invoke(app, ["fuzz", "flat", "--trials", "0"])
        assert result.exit_code == EXIT_VALIDATION

    def test_closed_structure(self, tmp_path):
        """닫혔지만 평행이 아닌 G2 구조에서도 감사가 통과한다"""
        data = json.loads(serialize_spec(get_builtin("flat")))
        data["name"] = "closed_nilpotent"
        data["brackets"] = [{"i": 1, "j": 2, "k": 6, "value": "-1"}, {"i": 1, "j": 3, "k": 7, "value": "-1"}]
        path = tmp_path / "closed.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        result = runner.invoke(app, ["fuzz", str(path), "--trials", "20", "--seed", "1", "--format", "json"])
        assert result.exit_code == 0, result.output
        assert json_output(result)["passed"] == 20


class TestExamples:
    def test_writes_specs(self, tmp_path):
        result = runner.invoke(app, ["examples", "--output-dir", str(tmp_path)])
        assert result.exit_code == 0, result.output
        for name in ("sasakian3", "flat", "hyperbolic"):
            assert (tmp_path / f"{name}.json").exists()
            assert name in result.stdout
        written = (tmp_path / "sasakian3.json").read_text(encoding="utf-8")
        assert json.loads(written)["frame"] == "pointwise"
