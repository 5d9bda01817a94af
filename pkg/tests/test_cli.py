"""Command-line interface: subcommands, exit codes, byte-stable output."""

import json

import pytest

from latdel import formats
from latdel.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_form(tmp_path, name, rows):
    path = tmp_path / name
    path.write_text(
        formats.dumps({"entries": [[str(v) for v in row] for row in rows]})
    )
    return str(path)


def test_del_mod_translation_square(tmp_path, capsys):
    path = write_form(tmp_path, "id2.json", [[1, 0], [0, 1]])
    code, out, _ = invoke(capsys, "del", "--form", path, "--mod-translation")
    assert code == 0
    cells = json.loads(out)
    assert len(cells) == 1
    assert cells[0]["vertices"] == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_del_full_star(tmp_path, capsys):
    path = write_form(tmp_path, "hex.json", [[2, -1], [-1, 2]])
    code, out, _ = invoke(capsys, "del", "--form", path)
    assert code == 0
    star = json.loads(out)
    assert len(star["cells"]) == 6
    assert len(star["orbit_reps"]) == 2


def test_del_rejects_indefinite(tmp_path, capsys):
    path = write_form(tmp_path, "bad.json", [[1, 0], [0, -1]])
    code, _, err = invoke(capsys, "del", "--form", path)
    assert code == 2
    assert err


def test_del_missing_file(capsys):
    code, _, err = invoke(capsys, "del", "--form", "/nonexistent.json")
    assert code == 2


def test_catalog_list_and_show(capsys):
    code, out, _ = invoke(capsys, "catalog", "list")
    assert code == 0
    names = json.loads(out)
    assert "dim4.V1" in names and "dim4.K" in names
    code, out, _ = invoke(capsys, "catalog", "show", "dim4.W0")
    assert code == 0
    entry = json.loads(out)
    assert entry["name"] == "dim4.W0"
    assert len(entry["generators"]) == 9
    code, _, err = invoke(capsys, "catalog", "show", "dim5.V1")
    assert code == 2


def test_sample(capsys):
    code, out, _ = invoke(capsys, "sample", "--cone", "dim2.V1capV2")
    assert code == 0
    assert json.loads(out)["entries"] == [["1", "0"], ["0", "1"]]
    code, out, _ = invoke(
        capsys, "sample", "--cone", "dim2.V1", "--weights", "1,1,1"
    )
    assert json.loads(out)["entries"] == [["2", "-1"], ["-1", "2"]]
    code, _, err = invoke(
        capsys, "sample", "--cone", "dim2.V1", "--weights", "1,0,1"
    )
    assert code == 2


def test_fuse(capsys):
    code, out, _ = invoke(
        capsys, "fuse", "--coarse", "dim2.V1capV2", "--fine", "dim2.V1"
    )
    assert code == 0
    report = json.loads(out)
    assert len(report["fusions"]) == 1
    assert len(report["fusions"][0]["pieces"]) == 2
    code, _, err = invoke(
        capsys, "fuse", "--coarse", "dim2.V1", "--fine", "dim2.V2"
    )
    assert code == 2


def test_gen(tmp_path, capsys):
    fpath = write_form(tmp_path, "id2.json", [[1, 0], [0, 1]])
    cpath = tmp_path / "cell.json"
    cpath.write_text(
        formats.dumps({"vertices": [[0, 0], [0, 1], [1, 0], [1, 1]]})
    )
    code, out, _ = invoke(
        capsys, "gen", "--cell", str(cpath), "--form", fpath
    )
    assert code == 0
    report = json.loads(out)
    assert report["totally_generating"] is True
    assert report["witness"] is None
    # a non-Delaunay cell is refused with a verification failure
    bad = tmp_path / "bad.json"
    bad.write_text(formats.dumps({"vertices": [[0, 0], [2, 0], [0, 2]]}))
    code, _, err = invoke(capsys, "gen", "--cell", str(bad), "--form", fpath)
    assert code == 1


def test_tables(capsys):
    code, out, _ = invoke(capsys, "tables", "--which", "1")
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert len(report["expected"]) == 24
    assert report["mismatches"] == []


def test_faces(capsys):
    code, out, _ = invoke(capsys, "faces")
    assert code == 0
    report = json.loads(out)
    assert report["counts"] == {"total": 64, "BF": 48, "RT": 16}
    for row in report["faces"]:
        assert row["orbit"] in ("BF", "RT")
        assert row["type"] == ("II" if row["orbit"] == "BF" else "III")
        assert row["shape"] in ("triangle", "fork")


def test_verify_dim2(capsys):
    code, out, _ = invoke(capsys, "verify", "--suite", "dim2")
    assert code == 0
    reports = json.loads(out)
    assert any("σ5 = σ1 ∪ σ2" in line for r in reports for line in r["details"])


def test_identical_invocations_identical_bytes(capsys):
    _, first, _ = invoke(capsys, "catalog", "show", "dim4.K")
    _, second, _ = invoke(capsys, "catalog", "show", "dim4.K")
    assert first == second


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["catalog", "list", "--frobnicate"])
    assert exc.value.code == 2
