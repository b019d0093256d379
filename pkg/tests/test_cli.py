import json
from pathlib import Path

import jsonschema
import pytest

from schurkit.cli import run
from schurkit.expr import parse_expression, symfunc_from_json

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "schema.json").read_text())


def call(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


def call_json(capsys, *argv):
    code, out, _ = call(capsys, "--json", *argv)
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["nl", "--left", "[1]", "--right", "[1]", "--flavor", "sp"], "<2> + <1,1> + <0>"),
        (["series", "--id", "L", "--cap", "3"], "1 - s[1] + s[1,1] - s[1,1,1]"),
        (["prod", "s[1]", "s[1]"], "s[2] + s[1,1]"),
        (["skew", "s[2,1]", "s[1]"], "s[2] + s[1,1]"),
        (["antipode", "s[2]"], "s[1,1]"),
        (["inner", "s[2]", "s[1,1]"], "s[1,1]"),
        (["scalar", "p[2]", "p[2]"], "2"),
        (["kostka", "[2,1]", "[1,1,1]"], "2"),
        (["char", "[1,1]", "[2]"], "-1"),
        (["coprod", "s[1]"], "1 ⊗ s[1] + s[1] ⊗ 1"),
        (["icoprod", "s[2]"], "s[2] ⊗ s[2] + s[1,1] ⊗ s[1,1]"),
        (["branch", "--series", "M", "--input", "s[2,1]"], "s[1] + s[2] + s[1,1] + s[2,1]"),
        (["branch", "--series", "M", "--input", "s[1]", "--inverse"], "-1 + s[1]"),
        (["branch", "--def", "table:{[1]:2}", "--input", "s[1]"], "2 + s[1]"),
        (["dprod", "--series", "M", "--left", "s[1]", "--right", "s[1]"], "s[2] + s[1,1]"),
        (["circle", "--left", "s[1]", "--right", "s[1]"], "1 + s[2] + s[1,1]"),
        (["circle", "--pairing", "schur-inv", "--left", "s[1]", "--right", "s[1]"], "-1 + s[2] + s[1,1]"),
        (["circle", "--variant", "7", "--left", "s[1]", "--right", "s[1]"], "s[2] + s[1,1]"),
        (["prod", "h[1]", "h[1]", "--basis", "h"], "h[1,1]"),
        (["antipode", "s[2]", "--basis", "e"], "e[2]"),
    ],
)
def test_text_outputs(capsys, argv, expected):
    code, out, _ = call(capsys, *argv)
    assert code == 0
    assert out == expected


def test_json_matches_text(capsys):
    for argv in (["prod", "s[2,1]", "s[1]"], ["series", "--id", "D", "--cap", "6"], ["antipode", "p[2,1] + 1/3*p[1]"]):
        _, text, _ = call(capsys, *argv)
        code, payload = call_json(capsys, *argv)
        assert code == 0
        assert symfunc_from_json(payload) == parse_expression(text)


@pytest.mark.parametrize(
    "argv",
    [
        ["coprod", "s[2]"],
        ["kostka", "[2]", "[1,1]"],
        ["transition", "--from", "s", "--to", "p", "--weight", "3"],
        ["classify-cochain", "--def", "series:D", "--max-weight", "4"],
        ["classify-cochain", "--arity", "2", "--def", "d(series:D)", "--max-weight", "3"],
        ["check-case", "--case", "IV", "--max-weight", "3"],
        ["nl", "--left", "[2]", "--right", "[1]"],
        ["prod", "s[1,2]", "s[1]"],
        ["selftest", "--only", "3", "--max-weight", "3"],
        ["prod", "s[1", "s[1]"],
        ["series", "--id", "X"],
    ],
)
def test_json_validates(capsys, argv):
    run(["--json"] + argv)
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, SCHEMA)


def test_warning_flag_in_json(capsys):
    _, payload = call_json(capsys, "prod", "s[1,2]", "s[]")
    assert payload["warnings"] and payload["terms"] == [{"partition": [2, 1], "coeff": "1"}]


def test_transition_output(capsys):
    code, out, _ = call(capsys, "transition", "--from", "h", "--to", "s", "--weight", "2")
    assert code == 0 and "1 0" in out and "1 1" in out
    _, payload = call_json(capsys, "transition", "--from", "h", "--to", "s", "--weight", "2")
    assert payload["matrix"] == [["1", "0"], ["1", "1"]]


def test_check_case_and_classify(capsys):
    code, out, _ = call(capsys, "check-case", "--case", "IV", "--max-weight", "4")
    assert code == 0 and "ratio b/a = 4" in out and "as expected" in out
    code, payload = call_json(capsys, "classify-cochain", "--def", "series:M", "--max-weight", "6")
    assert payload["verdict"] == "cocycle" and payload["max_weight"] == 6
    code, payload = call_json(capsys, "classify-cochain", "--def", "d(series:D)", "--max-weight", "4")
    assert payload["verdict"] == "coboundary"


def test_exit_codes(capsys):
    assert call(capsys, "prod", "s[1", "s[1]")[0] == 2
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "transition", "--from", "s")[0] == 2
    assert call(capsys, "prod", "s[6]", "s[6]")[0] == 1
    assert call(capsys, "series", "--id", "X")[0] == 1
    assert call(capsys, "classify-cochain", "--arity", "1", "--def", "schur")[0] == 1
    assert call(capsys, "branch", "--input", "s[1]")[0] == 2
    code, _, err = call(capsys, "prod", "s[1] s[2]", "s[1]")
    assert code == 2 and "^" in err


def test_max_weight_flag_positions_and_env(capsys, monkeypatch):
    assert call(capsys, "--max-weight", "3", "prod", "s[2]", "s[2]")[0] == 1
    assert call(capsys, "prod", "s[2]", "s[2]", "--max-weight", "3")[0] == 1
    monkeypatch.setenv("SCHURKIT_MAX_WEIGHT", "3")
    assert call(capsys, "prod", "s[2]", "s[2]")[0] == 1
    assert call(capsys, "prod", "s[2]", "s[2]", "--max-weight", "4")[0] == 0
    code, out, _ = call(capsys, "series", "--id", "M")
    assert out == "1 + s[1] + s[2] + s[3]"
    monkeypatch.setenv("SCHURKIT_MAX_WEIGHT", "many")
    assert call(capsys, "prod", "s[1]", "s[1]")[0] == 2


def test_selftest_subset(capsys):
    code, out, _ = call(capsys, "selftest", "--only", "1", "3", "--max-weight", "4")
    assert code == 0
    assert "[PASS]  1." in out and "[PASS]  3." in out and "2/2 criteria passed" in out


def test_selftest_failure_sets_exit_status(capsys):
    code, out, _ = call(capsys, "selftest", "--only", "9")
    assert code == 1 and "[FAIL]  9." in out


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == 0
    assert "selftest" in capsys.readouterr().out
