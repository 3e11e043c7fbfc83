import json
from pathlib import Path

import httpx
import pytest
from click.testing import CliRunner

from cherncalc import cli as climod
from cherncalc.cli import cli

GOLDEN = Path(__file__).parent / "golden"
TWO_LINES = '{"pos": [[1, 0], [0, 1]], "neg": []}'


def run(*args, env=None):
    return CliRunner().invoke(
        cli, list(args), env=env, auto_envvar_prefix="CHERNCALC"
    )


def test_lr_matches_golden_bytes():
    result = run("lr", "--mu", "2,1", "--eps", "1", "--nu", "1,1")
    assert result.exit_code == 0
    assert result.stdout.encode() == (GOLDEN / "lr.json").read_bytes()


def test_grass_rank_matches_golden_bytes():
    result = run("grass", "rank", "2", "4")
    assert result.exit_code == 0
    assert result.stdout.encode() == (GOLDEN / "grass_rank.json").read_bytes()


def test_grr_verify_matches_golden_bytes():
    result = run("grr", "verify", "--max-i", "3")
    assert result.exit_code == 0
    assert result.stdout.encode() == (GOLDEN / "grr_verify_max3.json").read_bytes()


def test_chern_total_json():
    result = run("--degree", "3", "chern", "total", "--class", TWO_LINES)
    assert result.exit_code == 0
    body = json.loads(result.stdout)
    assert body["degree"] == 3
    assert len(body["coefficients"]) == 3


def test_chern_total_text():
    result = run("--degree", "2", "--format", "text", "chern", "total", "--class", TWO_LINES)
    assert result.exit_code == 0
    assert result.stdout == "t^0: 1\nt^1: u1 + u2\nt^2: u1*u2\n"


def test_chern_lambda_positional_index():
    result = run("chern", "lambda", "2", "--class", TWO_LINES)
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"pos": [[1, 1]], "neg": []}


def test_chern_tensor_and_dual_text():
    result = run("--format", "text", "chern", "tensor", "--x", '{"pos":[[1]]}', "--y", '{"pos":[[2]]}')
    assert result.exit_code == 0
    assert result.stdout == "pos: [3]\nneg: (none)\n"
    result = run("--format", "text", "chern", "dual", "--class", '{"pos":[[1]]}')
    assert result.stdout == "pos: [-1]\nneg: (none)\n"


def test_universal_poly_text():
    result = run("--format", "text", "universal-poly", "--n", "2", "--m", "2", "--i", "1")
    assert result.exit_code == 0
    assert result.stdout == "2*cF1 + 2*cG1\n"


def test_lr_text():
    result = run("--format", "text", "lr", "--mu", "2,1", "--eps", "1", "--nu", "1,1")
    assert result.stdout == "coefficient: 1\n"


def test_schur_command():
    result = run("schur", "--mu", "1,1", "--class", TWO_LINES)
    assert result.exit_code == 0
    assert json.loads(result.stdout)["neg"] == []


def test_gamma_degree_text():
    prod = '{"pos": [[1, 1], [0, 0]], "neg": [[1, 0], [0, 1]]}'
    result = run("--format", "text", "gamma-degree", "--class", prod)
    assert result.exit_code == 0
    assert result.stdout == "filtration degree: 2\n"


def test_gamma_series_json():
    result = run("--degree", "4", "gamma-series", "--class", '{"pos":[[1]],"neg":[[0]]}')
    body = json.loads(result.stdout)
    assert len(body["coefficients"]) == 2


def test_grass_present_text():
    result = run("--format", "text", "grass", "present", "1", "3")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "generators: c1, c2"
    assert lines[1] == "relations:"
    assert "rank: 3" in lines
    assert lines[-1].startswith("checks: ")


def test_grr_verify_respects_explicit_degree():
    result = run("--degree", "6", "grr", "verify", "--max-i", "2")
    assert result.exit_code == 0
    reports = json.loads(result.stdout)
    assert {r["inputs"]["degree"] for r in reports} == {6}


def test_grr_verify_text_summary():
    result = run("--format", "text", "grr", "verify", "--max-i", "1")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "6/6 checks passed"


def test_malformed_partition_exits_2():
    result = run("lr", "--mu", "2,x")
    assert result.exit_code == 2
    assert result.stderr.startswith("error: ")
    assert len(result.stderr.strip().splitlines()) == 1


def test_malformed_class_json_exits_2():
    result = run("chern", "total", "--class", "{")
    assert result.exit_code == 2
    assert "malformed class JSON" in result.stderr
    result = run("chern", "total", "--class", '{"bogus": []}')
    assert result.exit_code == 2


def test_service_domain_error_exits_2():
    result = run("grass", "rank", "2", "2")
    assert result.exit_code == 2
    assert result.stderr.startswith("error: ")


def test_degree_too_small_for_verification_exits_2():
    result = run("--degree", "1", "grr", "verify", "--max-i", "3")
    assert result.exit_code == 2
    assert "truncation" in result.stderr


def test_failing_report_exits_1(monkeypatch):
    failing = [
        {
            "case": "factor[i=1]",
            "inputs": {"i": 1},
            "expected": {"vars": [], "terms": []},
            "actual": {"vars": [], "terms": [{"exps": [], "coeff": "1"}]},
            "pass": False,
        }
    ]
    monkeypatch.setattr(
        climod, "_post", lambda cfg, path, payload: httpx.Response(200, json=failing)
    )
    result = run("grr", "verify", "--max-i", "1")
    assert result.exit_code == 1


def test_env_variable_sets_format():
    result = run("lr", "--mu", "2,1", "--eps", "1", "--nu", "1,1",
                 env={"CHERNCALC_FORMAT": "text"})
    assert result.exit_code == 0
    assert result.stdout == "coefficient: 1\n"


def test_server_option_targets_remote_url(monkeypatch):
    calls = {}

    def fake_post(url, json=None, timeout=None):
        calls["url"] = url
        calls["payload"] = json
        return httpx.Response(200, json={"coefficient": 0})

    monkeypatch.setattr(httpx, "post", fake_post)
    result = run("--server", "http://example:9", "lr", "--mu", "1")
    assert result.exit_code == 0
    assert calls["url"] == "http://example:9/lr"
    assert calls["payload"] == {"mu": [1], "eps": [], "nu": []}


def test_unreachable_server_exits_2(monkeypatch):
    def fake_post(url, json=None, timeout=None):
        raise httpx.ConnectError("nope")

    monkeypatch.setattr(httpx, "post", fake_post)
    result = run("--server", "http://example:9", "lr", "--mu", "1")
    assert result.exit_code == 2
    assert "cannot reach" in result.stderr
