"""Checks for the command-line front end: output, formats, exit codes."""

from __future__ import annotations

import json

from niljac.cli import run


def test_term_quaternion(capsys):
    assert run(["term", "--kind", "JN3", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "2 + 5i + 9j + 18k"


def test_term_scalar(capsys):
    assert run(["term", "--kind", "J3", "--n", "9"]) == 0
    assert capsys.readouterr().out.strip() == "146"


def test_term_json(capsys):
    assert run(["term", "--kind", "jN3", "--n", "0", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"kind": "jN3", "n": 0, "value": ["2", "1", "5", "10"]}
    assert run(["term", "--kind", "U3", "--n", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] == "-1"


def test_term_negative_index_is_usage_error(capsys):
    assert run(["term", "--kind", "J3", "--n", "-1"]) == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_kind_and_flag(capsys):
    assert run(["term", "--kind", "Q3", "--n", "1"]) == 2
    assert run(["term", "--kind", "J3", "--n", "1", "--bogus"]) == 2
    assert run(["bogus-command"]) == 2
    capsys.readouterr()


def test_kind_names_are_case_sensitive(capsys):
    assert run(["term", "--kind", "J3", "--n", "0"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert run(["term", "--kind", "j3", "--n", "0"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_verify_json(capsys):
    assert run(["verify", "--identity", "all", "--max", "20", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert set(document) == {"meta", "summary", "results"}
    assert all(row["fail"] == 0 for row in document["summary"].values())


def test_verify_aliases_and_case(capsys):
    assert run(["verify", "--identity", "t13", "--max", "5"]) == 0
    out = capsys.readouterr().out
    assert "T6_CASSINI" in out
    assert run(["verify", "--identity", "t6_cassini,P1", "--max", "5"]) == 0
    out = capsys.readouterr().out
    assert "T6_CASSINI" in out and "P1" in out


def test_verify_range_shorthand(capsys):
    assert run(["verify", "--identity", "p1..p9", "--max", "30"]) == 0
    out = capsys.readouterr().out
    for k in range(1, 10):
        assert f"P{k}" in out


def test_verify_unknown_identity(capsys):
    assert run(["verify", "--identity", "p10", "--max", "5"]) == 2
    err = capsys.readouterr().err
    assert "usage" in err and "p10" in err


def test_verify_pairs_budget(capsys):
    assert run(
        ["verify", "--identity", "t12", "--max", "20", "--pairs", "40", "--format", "json"]
    ) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["summary"]["T6_DOCAGNE"]["total"] == 40


def test_verify_csv(capsys):
    assert run(["verify", "--identity", "p1", "--max", "3", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "identity,m,n,pass,lhs,rhs"
    assert len(lines) == 5


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert run(
        ["verify", "--identity", "t1", "--max", "4", "--format", "json", "--out", str(target)]
    ) == 0
    assert capsys.readouterr().out == ""
    document = json.loads(target.read_text(encoding="utf-8"))
    assert document["summary"]["T1_REC"]["total"] == 5


def test_verify_threads_env_matches_sequential(capsys, monkeypatch):
    args = ["verify", "--identity", "t12,t13", "--max", "12", "--format", "json"]
    monkeypatch.delenv("NQ_THREADS", raising=False)
    assert run(args) == 0
    plain = json.loads(capsys.readouterr().out)
    monkeypatch.setenv("NQ_THREADS", "4")
    assert run(args) == 0
    threaded = json.loads(capsys.readouterr().out)
    assert plain["results"] == threaded["results"]
    assert plain["summary"] == threaded["summary"]


def test_invalid_threads_env_is_ignored(capsys, monkeypatch):
    monkeypatch.setenv("NQ_THREADS", "zero")
    assert run(["verify", "--identity", "p1", "--max", "3"]) == 0
    assert "NQ_THREADS" in capsys.readouterr().err


def test_sum_text(capsys):
    assert run(["sum", "--m", "2"]) == 0
    out = capsys.readouterr().out
    assert "2 + 4i + 8j + 16k" in out
    assert "ok" in out


def test_sum_json(capsys):
    assert run(["sum", "--m", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["closed_form"] == ["4", "9", "17", "34"]
    assert payload["match"] is True


def test_example(capsys):
    assert run(["example"]) == 0
    out = capsys.readouterr().out
    assert "1 + 1i + 3j + 8k" in out
    assert "-1 - 3i - 3j - 10k" in out
    assert "all 12 checks passed" in out


def test_example_json_out(tmp_path, capsys):
    target = tmp_path / "example.json"
    assert run(["example", "--format", "json", "--out", str(target)]) == 0
    capsys.readouterr()
    document = json.loads(target.read_text(encoding="utf-8"))
    assert document["meta"]["kind"] == "worked-example"
    assert len(document["results"]) == 12


def test_large_index_soft_warning(capsys):
    assert run(["term", "--kind", "V3", "--n", "2000000"]) == 0
    captured = capsys.readouterr()
    assert captured.out.strip() == "1"
    assert "warning" in captured.err


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    assert run(["verify", "--help"]) == 0
    capsys.readouterr()
