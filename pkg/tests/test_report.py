"""Checks for report serialization: JSON schema, CSV layout, text rendering."""

from __future__ import annotations

import csv
import io
import json

from niljac.identities import IdentityId, sweep, worked_example


def test_json_document_shape():
    report = sweep([IdentityId.P1, IdentityId.T6_CASSINI, IdentityId.T6_DOCAGNE], 4)
    document = json.loads(report.to_json())
    assert set(document) == {"meta", "summary", "results"}
    meta = document["meta"]
    assert meta["tool"] == "niljac"
    assert meta["max_m"] == 4
    assert meta["identities"] == ["P1", "T6_DOCAGNE", "T6_CASSINI"]
    assert "generated_at" in meta
    for tag, row in document["summary"].items():
        assert set(row) == {"pass", "fail", "total"}
    for result in document["results"]:
        assert set(result) == {"identity", "indices", "pass", "lhs", "rhs"}
        assert result["pass"] is True


def test_json_value_encoding():
    report = sweep([IdentityId.P1, IdentityId.T6_CASSINI], 2)
    document = json.loads(report.to_json())
    by_identity = {}
    for result in document["results"]:
        by_identity.setdefault(result["identity"], []).append(result)
    scalar = by_identity["P1"][0]
    assert isinstance(scalar["lhs"], str) and scalar["lhs"].lstrip("-").isdigit()
    quat = by_identity["T6_CASSINI"][0]
    assert isinstance(quat["lhs"], list) and len(quat["lhs"]) == 4
    assert all(isinstance(part, str) for part in quat["lhs"])
    assert quat["lhs"] == ["1", "1", "3", "8"]


def test_results_are_canonically_ordered():
    report = sweep([IdentityId.T6_DOCAGNE, IdentityId.P1], 3)
    tags = [r.identity for r in report.results]
    assert tags == sorted(tags, key=lambda t: list(IdentityId).index(t))
    pairs = [
        (r.indices["m"], r.indices["n"])
        for r in report.results
        if r.identity is IdentityId.T6_DOCAGNE
    ]
    assert pairs == sorted(pairs)


def test_csv_layout():
    report = sweep([IdentityId.P1, IdentityId.T6_DOCAGNE], 3)
    rows = list(csv.reader(io.StringIO(report.to_csv())))
    assert rows[0] == ["identity", "m", "n", "pass", "lhs", "rhs"]
    assert len(rows) == 1 + report.total
    scalar_rows = [row for row in rows[1:] if row[0] == "P1"]
    assert all(row[2] == "" for row in scalar_rows)
    pair_rows = [row for row in rows[1:] if row[0] == "T6_DOCAGNE"]
    assert all(row[2] != "" for row in pair_rows)
    assert all(row[3] == "true" for row in rows[1:])


def test_text_rendering():
    report = sweep([IdentityId.P1], 9)
    text = report.render_text()
    assert "P1" in text
    assert "all 10 checks passed" in text


def test_text_rendering_show_all():
    text = worked_example().render_text(show_all=True)
    assert "1 + 1i + 3j + 8k" in text
    assert "-1 - 3i - 3j - 10k" in text
    assert text.count("ok  ") == 12
