"""Command-line front end: spec ingestion, modes, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

import f2units as f
from f2units.cli import main, parse_group_spec
from f2units.errors import GroupAxiomViolationError, ParseError


def run_cli(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main([*args, "--out", str(out)])
    return code, out.read_text() if out.exists() else None


# ---------------------------------------------------------------------------
# group-spec ingestion


def test_parse_family_spec():
    g = parse_group_spec('{"family":"quaternion","params":{"order":8}}')
    assert g.order == 8
    assert f.order_multiset(g) == {1: 1, 2: 1, 4: 6}


def test_parse_table_spec():
    g = parse_group_spec('{"table":[[0,1],[1,0]]}')
    assert g.order == 2


def test_parse_rejects_bad_json():
    with pytest.raises(ParseError):
        parse_group_spec("{not json")
    with pytest.raises(ParseError):
        parse_group_spec('"just a string"')
    with pytest.raises(ParseError):
        parse_group_spec("{}")


def test_parse_rejects_axiom_violations():
    with pytest.raises(GroupAxiomViolationError):
        parse_group_spec('{"table":[[0,1],[1,1]]}')


# ---------------------------------------------------------------------------
# exit codes


def test_verify_pass_exits_zero(tmp_path):
    code, text = run_cli(
        ["--family", "quaternion", "--order", "8",
         "--involution", "classical", "--format", "json"],
        tmp_path,
    )
    assert code == 0
    report = json.loads(text)
    assert report["pass"] is True
    assert report["orders"]["oracle_unitary"] == 64


def test_failed_check_exits_one(tmp_path):
    code, text = run_cli(
        ["--family", "dihedral", "--order", "8",
         "--involution", "odot", "--format", "json"],
        tmp_path,
    )
    assert code == 1
    report = json.loads(text)
    assert report["pass"] is False
    failing = {c["name"] for c in report["checks"] if not c["pass"]}
    assert "group_inside_unitary" in failing


def test_invalid_input_exits_two(capsys):
    assert main(["--family", "cyclic", "--order", "8", "--involution", "odot"]) == 2
    assert "CenterQuotientNotKlein" in capsys.readouterr().err
    assert main(["--family", "cyclic"]) == 2  # missing --order
    assert main(["--group", "/nonexistent/path.json"]) == 2


# ---------------------------------------------------------------------------
# modes


def test_enumerate_mode(tmp_path):
    code, text = run_cli(
        ["--family", "quaternion", "--order", "8",
         "--involution", "classical", "--mode", "enumerate", "--format", "json"],
        tmp_path,
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["orders"]["normalized_units"] == 128
    assert payload["orders"]["unitary"] == 64
    assert payload["mode"] == "enumerate"


def test_construct_mode_skips_enumeration(tmp_path):
    code, text = run_cli(
        ["--family", "quaternion", "--order", "8",
         "--involution", "classical", "--mode", "construct", "--format", "json"],
        tmp_path,
    )
    assert code == 0
    report = json.loads(text)
    assert "oracle_unitary" not in report["orders"]
    assert report["pass"] is True


def test_catalog_mode_covers_all_instances(tmp_path):
    code, text = run_cli(["--mode", "catalog", "--format", "json"], tmp_path)
    assert code == 1  # the dihedral-family rows fail honestly
    payload = json.loads(text)
    assert payload["pass"] is False
    assert len(payload["reports"]) == 9
    verdicts = {
        (r["group"]["spec"], r["involution"]): r["pass"] for r in payload["reports"]
    }
    assert verdicts[("Q8", "classical")] is True
    assert verdicts[("Q16", "classical")] is True
    assert verdicts[("Q8", "odot")] is True
    assert verdicts[("D8", "odot")] is False
    assert verdicts[("D8xC2", "odot")] is False


def test_text_and_json_verdicts_agree(tmp_path):
    _, json_text = run_cli(
        ["--family", "dihedral", "--order", "8",
         "--involution", "odot", "--format", "json"],
        tmp_path, "a.json",
    )
    _, plain = run_cli(
        ["--family", "dihedral", "--order", "8",
         "--involution", "odot", "--format", "text"],
        tmp_path, "a.txt",
    )
    report = json.loads(json_text)
    for check in report["checks"]:
        marker = "ok   " + check["name"] if check["pass"] else "FAIL " + check["name"]
        assert marker in plain


# ---------------------------------------------------------------------------
# determinism


def test_reports_are_byte_identical_across_workers(tmp_path):
    outputs = []
    for workers in ("1", "4", "8"):
        _, text = run_cli(
            ["--family", "quaternion", "--order", "8",
             "--involution", "classical", "--threads", workers, "--format", "json"],
            tmp_path, f"w{workers}.json",
        )
        outputs.append(text)
    assert outputs[0] == outputs[1] == outputs[2]


def test_repeat_runs_are_byte_identical(tmp_path):
    args = ["--family", "dihedral", "--order", "8",
            "--involution", "odot", "--format", "json"]
    _, first = run_cli(args, tmp_path, "r1.json")
    _, second = run_cli(args, tmp_path, "r2.json")
    assert first == second
