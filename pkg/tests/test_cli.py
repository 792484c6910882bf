import subprocess
import sys

import numpy as np
import pytest

from hypertree.cli import main
from hypertree.io import read_tree_file, write_tree_file
from oracles import from_voxels, to_voxels
from shapes import bar, disk


def run(args, capsys):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def square(tmp_path):
    a = np.zeros((8, 8), dtype=bool)
    a[2:5, 3:6] = True
    path = tmp_path / "sq.kdt"
    write_tree_file(path, from_voxels(a), 2, 3)
    return path, a


def test_build_and_stats(tmp_path, capsys):
    pts = tmp_path / "p.txt"
    pts.write_text("0.1 0.2\n0.7, 0.9\n")
    out = tmp_path / "t.kdt"
    assert run(["build", pts, "--dims", 2, "--precision", 3, "-o", out], capsys)[0] == 0
    code, text, _ = run(["stats", out], capsys)
    assert code == 0
    assert "node_count 23" in text and "mass 0.03125" in text


def test_bool_and_contains(square, tmp_path, capsys):
    path, a = square
    out = tmp_path / "n.kdt"
    assert run(["bool", "not", path, "-o", out], capsys)[0] == 0
    t, k, r, _ = read_tree_file(out)
    assert np.array_equal(to_voxels(t, k, r), ~a)
    assert run(["contains", path, 2, 3], capsys)[1] == "true\n"
    assert run(["contains", out, 2, 3], capsys)[1] == "false\n"
    assert run(["bool", "and", path, out, "-o", tmp_path / "e.kdt"], capsys)[0] == 0
    assert read_tree_file(tmp_path / "e.kdt")[0].white


def test_transform_symmetry_project(square, tmp_path, capsys):
    path, a = square
    mat = tmp_path / "m.txt"
    mat.write_text("1 0 0.125\n0 1 0\n0 0 1\n")
    out = tmp_path / "o.kdt"
    assert run(["transform", path, mat, "-o", out], capsys)[0] == 0
    assert np.array_equal(to_voxels(read_tree_file(out)[0], 2, 3), np.roll(a, 1, axis=0))
    assert run(["symmetry", path, "--axes", "0", "-o", out], capsys)[0] == 0
    assert np.array_equal(to_voxels(read_tree_file(out)[0], 2, 3), a[::-1])
    assert run(["project", path, "--axis", 1, "-o", out], capsys)[0] == 0
    t, k, r, _ = read_tree_file(out)
    assert k == 1 and np.array_equal(to_voxels(t, 1, 3), a.any(axis=1))
    assert run(["hide", path, "--axis", 0, "-o", out], capsys)[0] == 0


def test_polytope_command(tmp_path, capsys):
    mat = tmp_path / "m.txt"
    mat.write_text("0.5 0 0.25\n0 0.5 0.25\n0 0 1\n")
    out = tmp_path / "p.kdt"
    assert run(["polytope", mat, "--dims", 2, "--precision", 2, "-o", out], capsys)[0] == 0
    expect = np.zeros((4, 4), dtype=bool)
    expect[1:3, 1:3] = True
    assert read_tree_file(out)[0] == from_voxels(expect)


def test_segmentation_commands(tmp_path, capsys):
    a = np.zeros((4, 4), dtype=bool)
    a[0, 0] = a[1, 1] = True
    path = tmp_path / "d.kdt"
    write_tree_file(path, from_voxels(a), 2, 2)
    assert run(["label", path, "--metric", "d1"], capsys)[1].startswith("components 2")
    assert run(["label", path, "--metric", "dinf"], capsys)[1].startswith("components 1")
    assert run(["adjacency", path, "--metric", "dinf"], capsys)[1].strip() == "LLLL LLRR"
    assert len(run(["segments", path], capsys)[1].splitlines()) == 2


def test_moment_commands(square, capsys):
    path, _ = square
    code, text, _ = run(["moments", path], capsys)
    lines = text.splitlines()
    assert code == 0 and lines[0] == "0 0 0 0.140625" and lines == sorted(lines)
    assert run(["center", path], capsys)[1].splitlines()[1].startswith("1 0 0 0.4375")
    code, text, _ = run(["normalize", path, "--scale-policy", "annex"], capsys)
    assert code == 0 and text.startswith("eigenvalues ")
    assert run(["eigen", path], capsys)[0] == 0


def test_codes(square, capsys):
    path, a = square
    code, text, _ = run(["encode", "tree", path], capsys)
    tree_code = text.strip()
    assert run(["decode", tree_code, "--dims", 2, "--precision", 3], capsys)[1] == path.read_text()
    leaves = run(["encode", "leaves", path], capsys)[1].split()
    out = run(["decode", " ".join(leaves), "--leaves", "--dims", 2, "--precision", 3], capsys)[1]
    assert out == path.read_text()


def test_learning_round_trip(tmp_path, capsys):
    for name, fn in (("disk", disk), ("bar", bar)):
        write_tree_file(tmp_path / f"{name}.kdt", from_voxels(fn()), 2, 6)
    (tmp_path / "train.txt").write_text("disk disk.kdt\nbar bar.kdt\n")
    for kind in ("spectral", "correlative"):
        base = tmp_path / f"{kind}.base"
        assert run(["learn", kind, tmp_path / "train.txt", "-o", base], capsys)[0] == 0
        text = run(["classify", kind, base, tmp_path / "bar.kdt"], capsys)[1]
        assert text.split()[0] == "bar"


def test_determinism(square, capsys):
    path, _ = square
    first = run(["normalize", path], capsys)[1]
    assert run(["normalize", path], capsys)[1] == first


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.kdt"
    bad.write_text("2 3\n0 0 1 1\n22\n")
    code, _, err = run(["stats", bad], capsys)
    assert code == 1 and "error" in err
    assert run(["stats", tmp_path / "missing.kdt"], capsys)[0] == 1
    assert run(["decode", "2x", "--dims", 1, "--precision", 1], capsys)[0] == 1
    proc = subprocess.run([sys.executable, "-m", "hypertree", "decode", "1", "--dims", "1", "--precision", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 0\n0.0 1.0\n1\n"
