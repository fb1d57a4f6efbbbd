# tests/test_cli.py
import json

import pytest

from main import _normalize_argv, run


def _run_json(capsys, *argv):
    code = run(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_verify_product_passes(capsys):
    code = run(["verify", "product", "--type", "ge-gt", "--shape", "2,1", "--n", "3", "--cap", "10"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("PASS product")


def test_verify_json_report(capsys):
    code, document = _run_json(capsys, "verify", "sample-tableau", "--json")
    assert code == 0
    assert document["schema"] == 1 and document["ok"] is True
    assert len(document["results"]) == 1


def test_single_cell_count(capsys):
    code, document = _run_json(capsys, "tableaux", "--shape", "1", "--n", "2", "--cap", "0", "--count")
    assert code == 0
    assert document["count"] == 1


def test_enum_tsv(capsys):
    code = run(["enum", "--variant", "L", "--n", "2", "--k", "2", "--cap", "3", "--tsv"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "entries\tsize\tu_exp\tv_exp"
    assert [line.split("\t")[:2] for line in lines[1:]] == [["1,0", "1"], ["2,0", "2"], ["3,0", "3"]]


def test_path_from_anti_lecture_hall_composition(capsys):
    code, document = _run_json(capsys, "paths", "--from-alhc", "5,4,5,5,3,3", "--n", "8", "--k", "6", "--json")
    assert code == 0
    assert document["roundtrip"] is True
    assert document["weight"]["q"] == 25
    assert document["sequence"]["entries"] == [5, 4, 5, 5, 3, 3]


def test_path_writes_svg(capsys, tmp_path):
    target = tmp_path / "path.svg"
    code = run(["paths", "--from-lhp", "15,12,8,5,3,0", "--n", "8", "--svg", str(target)])
    capsys.readouterr()
    assert code == 0
    assert "<svg" in target.read_text(encoding="utf-8")


def test_negative_rational_flags_are_merged():
    assert _normalize_argv(["qjacobi", "poly", "--a", "-1/10"]) == ["qjacobi", "poly", "--a=-1/10"]
    assert _normalize_argv(["--n", "-1"]) == ["--n", "-1"]


def test_qjacobi_poly_with_negative_parameters(capsys):
    code, document = _run_json(capsys, "qjacobi", "poly", "--n", "1", "--q", "1/3", "--a", "-1/10", "--b", "-1/7")
    assert code == 0
    assert document["coefficients"] == ["-651/629", "1"]


@pytest.mark.parametrize("argv", [
    ["tableaux", "--shape", "3,4", "--n", "2"],
    ["tableaux", "--shape", "2,1", "--n", "2", "--type", "ge-ge"],
    ["verify", "no-such-identity"],
    ["qjacobi", "poly", "--n", "1", "--u", "1/5", "--v", "2/7", "--a", "1/2"],
    ["qjacobi", "poly", "--n", "1", "--q", "3/2"],
    ["paths", "--from-alhc", "5,4", "--n", "8", "--k", "3"],
    ["genfun", "--variant", "LL", "--n", "2", "--k", "1"],
])
def test_bad_arguments_exit_with_2(argv, capsys):
    assert run(argv) == 2
    capsys.readouterr()


def test_selftest_list(capsys):
    code = run(["selftest", "--list"])
    rows = capsys.readouterr().out.splitlines()
    assert code == 0
    assert rows[0].split("\t")[0] == "lecture-hall"
    assert len(rows) == 21


def test_invalid_tableau_file_exits_with_2(capsys, tmp_path):
    source = tmp_path / "bad.json"
    # 1/3 < 2/4 breaks the row condition
    source.write_text(json.dumps({"shape": [2, 1], "n": 3, "type": "ge-gt", "entries": [[1, 2], [0]]}), encoding="utf-8")
    assert run(["paths", "--from-tableau", str(source)]) == 2
    capsys.readouterr()
