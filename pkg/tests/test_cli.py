# -*- coding: utf-8 -*-

import json
from fractions import Fraction

import pytest

from schurrigid import APP_NAME, __version__
from schurrigid.cli import build_parser, main, run
from schurrigid.errors import RealizationError
from schurrigid.rigidity import (
    VerifyReport,
    VerifyRow,
    unpresented_maximal_linear,
)
from schurrigid.root_system import SimpleType
from schurrigid.schubert import MarkedDiagram
from schurrigid.torus import RationalPoint, load_points
from schurrigid.weyl import format_word, reduced_word


def output(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_output(capsys, *argv):
    code, out, _ = output(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


def test_parser_defaults():
    args = build_parser().parse_args(["verify"])
    assert args.targets == []
    assert args.max_rank == 6
    assert args.jobs == 1
    assert args.coweight is None
    assert args.out is None


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_unknown_verb(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_roots(capsys):
    code, out, _ = output(capsys, "roots", "G2")
    assert code == 0
    assert out.splitlines()[-1] == "6 positive roots of G2"


def test_roots_json(capsys):
    data = json_output(capsys, "roots", "E6")
    assert data["count"] == 36
    assert data["weyl_group_order"] == 51840
    assert data["positive_roots"][0]["height"] == 1


def test_json_is_deterministic(capsys):
    first = output(capsys, "classify", "F4:3", "--json")
    second = output(capsys, "classify", "F4:3", "--json")
    assert first == second


def test_missing_target(capsys):
    code, out, err = output(capsys, "roots")
    assert code == 2
    assert out == ""
    assert err.startswith(f"{APP_NAME}: error: ")


@pytest.mark.parametrize(
    "argv",
    [
        ("roots", "E5"),
        ("roots", "Q3"),
        ("weyl", "A2", "--w", "1 x"),
        ("weyl", "A2", "--w", "3"),
        ("schubert", "A3:2", "--w", "1"),
        ("classify", "F4:3", "--sub", "1,4"),
        ("classify", "F4:3", "--exc", "nope"),
        ("classify", "F4:3 / sub=3", "--sub", "2"),
        ("bb-cells", "A2:1"),
        ("bb-cells", "A2:1", "--I", "1,2"),
        ("bb-cells", "A2:1", "--I", "2", "--lambda", "1,1"),
        ("degenerate", "A3:1", "--w", "1", "--I", "1"),
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = output(capsys, *argv)
    assert code == 2
    assert err.count("\n") == 1


def test_invariant_violation_exits_1(capsys, monkeypatch):
    def fail(pair):
        raise RealizationError("no cell")

    monkeypatch.setattr("schurrigid.core.classify", fail)
    code, _, err = output(capsys, "classify", "G2:2", "--sub", "2")
    assert code == 1
    assert "internal error: no cell" in err


def test_weyl(capsys):
    code, out, _ = output(capsys, "weyl", "G2")
    assert code == 0
    assert "order: 12" in out.splitlines()
    assert "longest.length: 6" in out.splitlines()


def test_weyl_element_on_a_diagram(capsys):
    data = json_output(capsys, "weyl", "A3:2", "--w", "1 2")
    assert data["element"]["length"] == 2
    assert data["minimal"] is True
    assert data["coset_representatives"] == 6


def test_schubert_table(capsys):
    data = json_output(capsys, "schubert", "A3:2")
    rows = data["schubert_varieties"]
    assert len(rows) == 6
    assert [r["degree"] for r in rows][-1] == 2
    assert data["dimension"] == 4
    assert data["degree"] == 2
    code, out, _ = output(capsys, "schubert", "C3:3")
    assert code == 0
    assert out.endswith("C3:3: dimension 6, degree 16\n")


def test_schubert_detail(capsys):
    data = json_output(capsys, "schubert", "A3:2", "--sub", "1,2")
    assert data["degree"] == 1
    assert data["maximal_linear"] is True
    assert data["schubert_rigidity"] == "rigid"
    assert data["poincare"] == "1 + q + q^2"
    assert data["opposite_dimension"] == 2


def test_bb_cells(capsys):
    data = json_output(capsys, "bb-cells", "A2:1", "--I", "2")
    assert [c["sign"] for c in data["cells"]] == ["-", "+"]
    assert data["I"] == "2"


def test_degenerate(capsys, points_file):
    path = points_file(
        json.dumps(
            [
                {"coords": {"0": "1", "7": "2"}},
                {"coords": {"0": "1", "10": "2/3"}},
            ]
        )
    )
    argv = ("degenerate", "A3:1", "--w", "1", "--I", "1", "--points", path)
    code, out, _ = output(capsys, *argv)
    assert code == 0
    assert out == "2  0=1\n"
    data = json_output(capsys, *argv)
    assert data["chart"]["roots"] == [0, 7, 10]
    assert data["chart"]["weights"] == [0, -1, -2]
    assert data["transverse"] is False


def test_degenerate_writes_limit_points(capsys, points_file, tmpdir):
    path = points_file(
        json.dumps(
            [
                {"coords": {"0": "1", "7": "2"}},
                {"coords": {"0": "1/2"}},
            ]
        )
    )
    out_path = str(tmpdir.join("limits.json"))
    argv = ("degenerate", "A3:1", "--w", "1", "--I", "1", "--points", path)
    code, out, _ = output(capsys, *argv, "--out", out_path)
    assert code == 0
    assert out == "1  0=1\n1  0=1/2\n"
    assert load_points(out_path) == [
        RationalPoint({0: Fraction(1)}),
        RationalPoint({0: Fraction(1, 2)}),
    ]


def test_degenerate_empty_points(capsys, points_file):
    path = points_file("")
    argv = ("degenerate", "A3:1", "--w", "1", "--I", "2,3", "--points", path)
    code, out, _ = output(capsys, *argv)
    assert code == 0
    assert out == ""


def test_classify_one_pair(capsys):
    data = json_output(capsys, "classify", "G2:2", "--sub", "2")
    assert data["status"] == "NotSchurRigid"
    assert data["flags"]["catalog_exception"] == 4


def test_classify_word_for_tag_only_entry(capsys):
    d = MarkedDiagram(SimpleType("F", 4), 3)
    (sv,) = unpresented_maximal_linear(d, 3)
    word = format_word(reduced_word(d.rs, sv.w))
    data = json_output(capsys, "classify", "F4:3", "--w", word)
    assert data["status"] == "NotSchurRigid"
    assert data["flags"]["catalog_exception"] == 6


def test_classify_implied_marked_node(capsys):
    data = json_output(capsys, "classify", "F4:3 / sub=1,2")
    assert data["pair"] == "F4:3 / sub=1,2,3"
    assert data["status"] == "SchurRigid"


def test_classify_text(capsys):
    code, out, _ = output(capsys, "classify", "F4:3", "--exc", "B3-a2-a3")
    assert code == 0
    assert out.splitlines()[0] == "F4:3 / exc=B3-a2-a3: SchurRigid"


def test_classify_all(capsys):
    data = json_output(capsys, "classify", "F4:3")
    assert len(data["verdicts"]) == 9


def test_catalog(capsys):
    data = json_output(capsys, "catalog", "G2")
    assert data["version"] == 3
    assert len(data["entries"]) == 2
    assert "schubert-rigidity-open" in data["sources"]


def test_catalog_everything(capsys):
    code, out, _ = output(capsys, "catalog")
    assert code == 0
    assert "maximal-linear-exception/7" in out


def test_verify(capsys):
    code, out, _ = output(capsys, "verify", "G2:2", "B2", "--jobs", "2")
    assert code == 0
    assert out.splitlines()[-1] == "6 pairs on 3 diagrams, 0 failures"


def test_verify_failure_exits_1(capsys, monkeypatch):
    def broken(d):
        row = VerifyRow(str(d), "nonlinear", (), False, True, "", "", False)
        return VerifyReport(str(d), (row,))

    monkeypatch.setattr("schurrigid.core.verify_catalog", broken)
    code, out, _ = output(capsys, "verify", "A2:1", "--json")
    assert code == 1
    assert json.loads(out)["failures"] == 1


def test_cache_dir_flag(capsys, tmpdir):
    code, _, _ = output(
        capsys, "schubert", "A2:1", "--cache-dir", str(tmpdir)
    )
    assert code == 0
    assert tmpdir.join("manifest.ini").exists()


def test_run(capsys):
    assert run(["schurrigid", "roots", "A2"]) == 0
    assert "3 positive roots of A2" in capsys.readouterr().out
