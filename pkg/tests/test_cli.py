import json

import pytest

import betti_cli
from betti_cli import EXIT_CODES, exit_code_for, main
from conftest import SEVEN_GENERATORS
from utils.algebra.errors import (
    AlgebraError,
    IdealParseError,
    ResourceCapError,
    TheoremViolationError,
    VerificationMismatchError,
)
from utils.algebra.homology import BettiTable
from utils.betti_engine import MethodComparison

TRIANGLE = "a*b, b*c, a*c"


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in ("BETTI_MAX_GENS", "BETTI_FIELD", "BETTI_METHOD", "BETTI_SEED", "BETTI_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_exit_code_table():
    assert exit_code_for(ResourceCapError("x")) == 3
    assert exit_code_for(TheoremViolationError("x")) == 1
    assert exit_code_for(IdealParseError("x", 1, 1)) == 2
    assert exit_code_for(AlgebraError("x")) == 2
    assert exit_code_for(VerificationMismatchError("x")) == 1
    assert set(EXIT_CODES.values()) == {1, 2, 3}


def test_betti_json(capsys):
    assert main(["betti", TRIANGLE, "--format", "json"]) == 0
    doc = _json(capsys)
    assert doc["totals"] == [1, 3, 2]
    assert doc["pd"] == 2


@pytest.mark.parametrize("method", ["decompose", "oracle", "cancel"])
def test_betti_text_for_every_method(capsys, method):
    assert main(["betti", SEVEN_GENERATORS, "--method", method]) == 0
    out = capsys.readouterr().out
    assert "totals (1, 7, 9, 3)" in out
    assert "beta_{3, a^2*b*c^2} = 1" in out


def test_pd(capsys):
    assert main(["pd", "x1^3, x1*x2, x1*x3, x1*x4, x1*x5, x2*x4, x3*x5"]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert main(["pd", TRIANGLE, "--format", "json", "--field", "Fp:2"]) == 0
    assert _json(capsys) == {"field": "Fp:2", "method": "decompose", "pd": 2}


def test_usage_errors(capsys):
    assert main(["pd", "1"]) == 2
    assert main(["betti", "a*?"]) == 2
    assert main(["betti", TRIANGLE, "--field", "Fp:4"]) == 2
    assert main(["betti", TRIANGLE, "--method", "guess"]) == 2
    assert main(["betti"]) == 2
    assert main([]) == 2
    assert main(["decompose", TRIANGLE]) == 2


def test_resource_cap(capsys):
    assert main(["betti", TRIANGLE, "--method", "oracle", "--max-gens", "2"]) == 3


def test_version(capsys):
    assert main(["--version"]) == 0
    assert "betti_cli" in capsys.readouterr().out


def test_classify(capsys):
    assert main(["classify", TRIANGLE, "--format", "json"]) == 0
    assert _json(capsys)["class"] == "purely nondominant"
    assert main(["classify", SEVEN_GENERATORS]) == 0
    assert "5-semidominant" in capsys.readouterr().out


def test_decompose(capsys):
    assert main(["decompose", SEVEN_GENERATORS, "--format", "json"]) == 0
    assert sorted(t["j"] for t in _json(capsys)) == [0, 1, 1, 2]
    assert main(["decompose", SEVEN_GENERATORS, "--tree", "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph decomposition {")
    assert main(["decompose", SEVEN_GENERATORS, "--tree", "--max-depth", "1"]) == 1


def test_scarf_and_strand(capsys):
    assert main(["scarf", TRIANGLE, "--format", "json"]) == 0
    doc = _json(capsys)
    assert doc["is_scarf"] is False
    assert len(doc["faces"]) == 4
    assert main(["strand", TRIANGLE, "--mdeg", "a*b*c"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 4


def test_check(capsys):
    assert main(["check", SEVEN_GENERATORS, "--format", "json"]) == 0
    doc = _json(capsys)
    assert doc["characteristic"] is True
    assert {c["name"] for c in doc["checks"]} == {"pd2", "pdn", "artinian", "characteristic", "min_hdeg"}


def test_verify_one_ideal_and_a_batch(capsys):
    assert main(["verify", SEVEN_GENERATORS]) == 0
    assert capsys.readouterr().out.strip() == "1 ideal(s) over Q: 0 mismatch(es)"
    assert main(["verify", "--count", "3", "--vars", "3", "--gens", "4", "--max-exp", "2", "--format", "json"]) == 0
    doc = _json(capsys)
    assert doc["tested"] == 3 and doc["mismatches"] == 0


def test_input_file_and_config(tmp_path, capsys):
    ideal = tmp_path / "ideal.txt"
    ideal.write_text("# triangle\na*b, b*c, a*c\n", encoding="utf-8")
    config = tmp_path / "run.yaml"
    config.write_text("method: oracle\noutput_format: json\n", encoding="utf-8")
    assert main(["betti", "--input", str(ideal), "--config", str(config)]) == 0
    assert _json(capsys)["totals"] == [1, 3, 2]
    assert main(["betti", "--input", str(tmp_path / "missing.txt")]) == 2


def test_environment_is_a_layer(monkeypatch, capsys):
    monkeypatch.setenv("BETTI_FIELD", "Fp:3")
    assert main(["pd", TRIANGLE, "--format", "json"]) == 0
    assert _json(capsys)["field"] == "Fp:3"


def test_fuzz(capsys):
    args = ["fuzz", "--conjecture", "C3", "--count", "2", "--vars", "3", "--gens", "4", "--max-exp", "2",
            "--format", "json"]
    assert main(args) == 0
    doc = _json(capsys)
    assert doc["conjecture"] == "C3"
    assert doc["tested"] <= 2


def test_suites_at_a_tiny_scale(capsys):
    assert main(["suites", "--scale", "0.001", "--format", "json"]) == 0
    names = [r["suite"] for r in _json(capsys)]
    assert "structural invariants" in names
    assert len(names) == 8


FIVE_GENERATORS = "x1^5, x2^5, x3^5, x4^5, x1*x2*x3*x4"


@pytest.mark.parametrize(
    "args",
    [
        ["betti", FIVE_GENERATORS],
        ["betti", FIVE_GENERATORS, "--method", "cancel"],
        ["pd", FIVE_GENERATORS],
        ["decompose", FIVE_GENERATORS],
        ["decompose", FIVE_GENERATORS, "--tree"],
        ["check", FIVE_GENERATORS],
    ],
)
def test_face_cap_applies_to_every_method(capsys, args):
    assert main(args + ["--max-gens", "3"]) == 3
    assert main(args + ["--max-gens", "5"]) in (0, 1)


def test_json_ideal_input(tmp_path, capsys):
    doc = {"variables": ["a", "b", "c", "d"], "generators": [[1, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 0]]}
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["betti", "--input", str(path), "--format", "json"]) == 0
    assert _json(capsys)["totals"] == [1, 3, 2]
    assert main(["classify", json.dumps(doc)]) == 0
    assert "purely nondominant" in capsys.readouterr().out
    assert main(["betti", '{"variables": ["a"], "generators": [[1, 2]]}']) == 2
    assert main(["betti", '{"variables": ']) == 2


def test_verify_mismatch_exits_with_failure(monkeypatch, capsys):
    real = betti_cli.verify_methods

    def drifting(M, field, methods, **kwargs):
        cmp = real(M, field, methods, **kwargs)
        broken = BettiTable.from_counter({}, field, M.n)
        return MethodComparison(ideal=M, field=field, tables={**cmp.tables, "cancel": broken})

    monkeypatch.setattr(betti_cli, "verify_methods", drifting)
    assert main(["verify", TRIANGLE]) == 1
    assert capsys.readouterr().out.strip() == "1 ideal(s) over Q: 1 mismatch(es)"
