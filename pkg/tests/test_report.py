# -*- coding: utf-8 -*-

import json

from schurrigid.report import (
    format_counts,
    table,
    to_json,
    verdict_text,
    verdicts_table,
    verify_cells,
    verify_json,
    verify_table,
)
from schurrigid.rigidity import Reason, Verdict, VerifyReport, VerifyRow


def row(pair="G2:2 / sub=2", ok=True, note=""):
    return VerifyRow(
        pair=pair,
        kind="maximal-linear",
        counts=((1, 1),),
        criterion=False,
        escape=True,
        status="NotSchurRigid",
        source="maximal-linear-exception/4",
        ok=ok,
        note=note,
    )


def test_to_json_is_sorted_and_terminated():
    expected = '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'
    assert to_json({"b": 1, "a": [1]}) == expected


def test_table():
    text = table(("id", "root"), [(0, "a1"), (10, "a1+a2")])
    assert text == "id  root\n0   a1\n10  a1+a2\n"


def test_table_without_rows():
    assert table(("a", "b"), []) == "a  b\n"


def test_format_counts():
    assert format_counts(()) == "-"
    assert format_counts(((1, 2), (4, 1))) == "a1:2,a4:1"


def test_verify_cells():
    assert verify_cells(row()) == (
        "G2:2 / sub=2",
        "maximal-linear",
        "a1:1",
        "fail",
        "holds",
        "NotSchurRigid",
        "maximal-linear-exception/4",
        "ok",
    )


def test_verify_table_summary():
    reports = [
        VerifyReport("G2:2", (row(), row("G2:2 / sub=1,2"))),
        VerifyReport("X1:1", (row("X1:1 / sub=1", ok=False, note="bad"),)),
    ]
    lines = verify_table(reports).splitlines()
    assert lines[0].split() == [
        "pair",
        "kind",
        "counts",
        "criterion",
        "escape",
        "status",
        "source",
        "ok",
    ]
    assert lines[-2] == "FAIL X1:1 / sub=1: bad"
    assert lines[-1] == "3 pairs on 2 diagrams, 1 failures"


def test_verify_json_roundtrip():
    reports = [VerifyReport("G2:2", (row(), row(ok=False, note="x")))]
    data = json.loads(to_json(verify_json(reports)))
    assert data["failures"] == 1
    assert [VerifyReport.from_json(r) for r in data["reports"]] == reports


def verdict():
    return Verdict(
        "G2:2 / sub=2",
        "NotSchurRigid",
        (Reason("maximal-linear-exception", "item 4", "source/4"),),
        {"linear": True, "maximal_linear": True, "smooth": None},
    )


def test_verdict_text():
    assert verdict_text(verdict()) == (
        "G2:2 / sub=2: NotSchurRigid\n"
        "  maximal-linear-exception: item 4 [source/4]\n"
        "  flags: linear=True, maximal_linear=True, smooth=-\n"
    )


def test_verdicts_table():
    lines = verdicts_table([verdict()]).splitlines()
    assert lines[0].split() == [
        "pair",
        "status",
        "linear",
        "maximal",
        "reason",
    ]
    assert lines[1].split() == [
        "G2:2",
        "/",
        "sub=2",
        "NotSchurRigid",
        "yes",
        "yes",
        "source/4",
    ]
