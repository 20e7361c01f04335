import json
import subprocess
import sys

import pytest

from hoffman_ds.cli import main
from hoffman_ds.io import parse_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_grid_stdout(capsys):
    code, out, err = run(capsys, "gen", "--family", "grid", "--m", "2", "--n", "2")
    assert code == 0
    assert out == "4 4\n0 1\n0 2\n1 3\n2 3\n"
    assert "4 vertices" in err


def test_gen_ext_grid_file(capsys, tmp_path):
    path = tmp_path / "g.el"
    code, _, err = run(capsys, "gen", "--family", "ext-grid", "--t", "3", "--out", str(path))
    assert code == 0 and "32 vertices" in err and "13-regular" in err
    g, _ = parse_edge_list(path.read_text())
    assert g.n == 32 and g.regular_degree() == 13


def test_gen_families(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--family", "cp", "--n", "3")
    assert code == 0 and out.splitlines()[0] == "6 12"
    code, out, _ = run(capsys, "gen", "--family", "cycle", "--n", "5")
    assert out.splitlines()[0] == "5 5"
    code, out, _ = run(capsys, "gen", "--family", "coclique-ext-grid", "--t", "1")
    assert out.splitlines()[0] == "8 16"


def test_gen_labels_and_dot(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "gen", "--family", "grid", "--m", "2", "--n", "2", "--labels", "--dot", str(dot))
    assert code == 0 and "# labels" in out
    g, _ = parse_edge_list(out)
    assert g.n == 4
    assert dot.read_text().startswith("graph G {")


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--family", "grid", "--m", "2"],
        ["gen", "--family", "nope"],
        ["gen", "--family", "cycle", "--n", "x"],
        ["gen", "--family", "cycle", "--n", "2"],
        [],
        ["verify"],
        ["verify", "--t", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_spectrum(capsys, tmp_path):
    path = tmp_path / "e.el"
    main(["gen", "--family", "ext-grid", "--t", "2", "--out", str(path)])
    capsys.readouterr()
    code, out, _ = run(capsys, "spectrum", str(path))
    assert code == 0 and out.strip() == "9^1 3^4 (-1)^9 (-3)^4"
    code, out, _ = run(capsys, "spectrum", str(path), "--exact-json")
    data = json.loads(out)
    assert data["integer_roots"] == [[9, 1], [3, 4], [-1, 9], [-3, 4]]


def test_spectrum_small_cases(capsys, tmp_path):
    empty = tmp_path / "empty.el"
    empty.write_text("3 0\n")
    assert run(capsys, "spectrum", str(empty))[1].strip() == "0^3"
    c8 = tmp_path / "c8.el"
    main(["gen", "--family", "cycle", "--n", "8", "--out", str(c8)])
    capsys.readouterr()
    out = run(capsys, "spectrum", str(c8))[1]
    assert out.startswith("2^1 0^2 (-2)^1 + roots of x^4")


def test_spectrum_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n0 5\n")
    code, _, err = run(capsys, "spectrum", str(bad))
    assert code == 2 and "bad.el" in err
    assert main(["spectrum", str(tmp_path / "missing.el")]) == 2


def test_cospectral(capsys, tmp_path):
    a = tmp_path / "a.el"
    b = tmp_path / "b.el"
    main(["gen", "--family", "cycle", "--n", "6", "--out", str(a)])
    b.write_text("6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n")
    capsys.readouterr()
    assert run(capsys, "cospectral", str(a), str(a))[1] == "cospectral: true\n"
    assert run(capsys, "cospectral", str(a), str(b))[1] == "cospectral: false\n"


def test_hoffman_commands(capsys, tmp_path):
    h = tmp_path / "h.el"
    h.write_text("5 5\n0 1\n0 3\n1 3\n1 4\n2 4\nfat: 3 4\n")
    code, out, _ = run(capsys, "hoffman", "special-matrix", str(h))
    assert code == 0
    assert out.splitlines()[1:] == [" -1   0   0", "  0  -2  -1", "  0  -1  -1"]
    code, out, _ = run(capsys, "hoffman", "decompose", str(h))
    assert out.splitlines()[0] == "2 factors"
    plain = tmp_path / "plain.el"
    plain.write_text("2 1\n0 1\n")
    assert main(["hoffman", "decompose", str(plain)]) == 2


def test_verify_pass_and_json(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--t", "2", "--sweep-max", "10", "--json", str(report))
    assert code == 0 and "14/14 entries without failure" in out
    data = json.loads(report.read_text())
    assert data["schema"] == "hs-report/1" and data["passed"]
    assert all("ms" not in e for e in data["entries"])
    first = report.read_text()
    main(["verify", "--t", "2", "--sweep-max", "10", "--json", str(report)])
    assert report.read_text() == first


def test_verify_candidate_failure(capsys, tmp_path):
    cand = tmp_path / "c.el"
    main(["gen", "--family", "cp", "--n", "3", "--out", str(cand)])
    capsys.readouterr()
    code, out, _ = run(capsys, "verify", "--t", "3", "--candidate", str(cand), "--sweep-max", "5")
    assert code == 1 and out.splitlines()[1].startswith("FAIL  spectrum")


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle-t1")
    assert code == 0
    assert out.splitlines()[-1] == "unique cospectral graph found; isomorphic to 2-clique extension of 2x2 grid"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hoffman_ds", "gen", "--family", "grid", "--m", "2", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("4 4\n")
