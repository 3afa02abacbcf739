"""Command line tests: exit codes, JSON report shape, file inputs, and
the installed entry point."""

import json
import subprocess
import sys

import pytest

from birkhoffsym.birkhoff import (SymmetryDecomposition, reconstruct_symmetry)
from birkhoffsym.cli import main
from birkhoffsym.perm import Permutation, parse_cycles


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_verify_table_pass(capsys):
    code, doc = run_json(capsys, ["verify-table", "3"])
    assert code == 0
    assert doc["pass"] is True
    assert doc["command"] == "verify-table"
    assert doc["inputs"] == {"n": 3}
    assert doc["details"]["cases_checked"] == 81
    assert doc["details"]["failures"] == []
    assert isinstance(doc["runtime_ms"], int)


def test_verify_table_precondition(capsys):
    assert main(["verify-table", "2"]) == 3
    err = capsys.readouterr().err
    assert "precondition violated" in err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["verify-table"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify-table", "three"])
    assert e.value.code == 2


def test_no_json_mode(capsys):
    code = main(["verify-table", "3", "--no-json"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.strip() == "PASS verify-table"


def test_decompose_identity(capsys):
    code, doc = run_json(capsys, ["decompose", "3", "--identity"])
    assert code == 0
    assert doc["details"] == {"sigma": "()", "tau": "()", "epsilon": 1}


def test_decompose_alpha_file(tmp_path, capsys):
    dec = SymmetryDecomposition(parse_cycles("(0 1)", 3),
                                Permutation.identity(3), 1)
    alpha = reconstruct_symmetry(3, dec)
    path = tmp_path / "alpha.txt"
    path.write_text("# vertex images\n" +
                    "\n".join(str(x) for x in alpha.images) + "\n")
    code, doc = run_json(capsys, ["decompose", "3", "--alpha", str(path)])
    assert code == 0
    assert doc["details"] == {"sigma": "(0 1)", "tau": "()", "epsilon": 1}
    # positional spelling is equivalent
    code2, doc2 = run_json(capsys, ["decompose", "3", str(path)])
    assert code2 == 0
    assert doc2["details"] == doc["details"]


def test_decompose_rejecting_alpha(tmp_path, capsys):
    path = tmp_path / "swap.txt"
    path.write_text("\n".join(map(str, [1, 0, 2, 3, 4, 5])))
    code, doc = run_json(capsys, ["decompose", "3", "--alpha", str(path)])
    assert code == 1
    assert doc["pass"] is False
    assert "error" in doc["details"]


def test_decompose_bad_alpha_length(tmp_path, capsys):
    path = tmp_path / "short.txt"
    path.write_text("0\n1\n2\n")
    assert main(["decompose", "3", "--alpha", str(path)]) == 3


def test_decompose_needs_alpha_or_identity(capsys):
    assert main(["decompose", "3"]) == 3


def test_cd_lattice_s4(capsys):
    code, doc = run_json(capsys, ["cd-lattice", "--group", "s4"])
    assert code == 0
    assert doc["details"]["lattice"] == ["1", "S4"]
    assert doc["details"]["max_measure"] == 24
    assert doc["details"]["subgroup_count"] == 30
    members = doc["details"]["members"]
    assert [m["order"] for m in members] == [1, 24]


def test_cd_lattice_s3_and_d4(capsys):
    code, doc = run_json(capsys, ["cd-lattice", "--group", "s3"])
    assert code == 0
    assert doc["details"]["lattice"] == ["C3"]
    code, doc = run_json(capsys, ["cd-lattice", "--group", "d4"])
    assert code == 0
    assert sorted(doc["details"]["lattice"]) == ["C2", "C4", "D4", "V4", "V4"]


def test_group_file_input(tmp_path, capsys):
    path = tmp_path / "c3.txt"
    path.write_text("# one generator per line\n(0 1 2)\n")
    code, doc = run_json(capsys, ["normalizer", "--group", str(path)])
    assert code == 0
    assert doc["details"]["gamma_order"] == 6
    assert doc["details"]["normalizer_order"] == 6


def test_unknown_group_name(capsys):
    assert main(["wreath", "--group", "zzz"]) == 3


def test_wreath_v4(capsys):
    code, doc = run_json(capsys, ["wreath", "--group", "v4"])
    assert code == 0
    d = doc["details"]
    assert d["elementary_abelian_2"] is True
    assert d["actual_order"] == 4
    assert d["formula_order"] == 8
    assert d["expected_order"] is None


def test_regular_pairs_s3(capsys):
    code, doc = run_json(capsys, ["regular-pairs", "--group", "s3"])
    assert code == 0
    d = doc["details"]
    assert d["gamma_order"] == 72
    assert d["pair_count"] == 7
    assert sum(1 for p in d["pairs"] if not p["u_equals_v"]) == 1
    assert all(p["u"]["cyclic"] for p in d["pairs"] if p["u_equals_v"])


def test_uniqueness_cli(capsys):
    code, doc = run_json(capsys, ["uniqueness", "3"])
    assert code == 0
    names = [e["name"] for e in doc["details"]["entries"]]
    assert "c6_exceptional" in names and "s3_standard" in names


def test_hull_cli(tmp_path, capsys):
    path = tmp_path / "square.json"
    path.write_text(json.dumps(
        {"vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]}))
    code, doc = run_json(capsys, ["hull", str(path)])
    assert code == 0
    d = doc["details"]
    assert d["n_facets"] == 4
    assert d["dim"] == 2
    assert d["inequality_convention"] == "normal.x <= offset"


def test_hull_cli_bad_inputs(tmp_path, capsys):
    missing = tmp_path / "missing.json"
    assert main(["hull", str(missing)]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["hull", str(bad)]) == 3
    nokey = tmp_path / "nokey.json"
    nokey.write_text(json.dumps({"points": []}))
    assert main(["hull", str(nokey)]) == 3


def test_rep_polytope_builtin(capsys):
    code, doc = run_json(capsys, ["rep-polytope", "--group", "c4"])
    assert code == 0
    d = doc["details"]
    assert d["order"] == 4
    assert d["matrix_dim"] == 4
    assert d["n_facets"] == 4


def test_rep_polytope_document(tmp_path, capsys):
    doc_in = {
        "name": "rot6",
        "dim": 2,
        "order": 6,
        "generators": [[["0", "-1"], ["1", "1"]]],
    }
    path = tmp_path / "rot6.json"
    path.write_text(json.dumps(doc_in))
    code, doc = run_json(capsys, ["rep-polytope", "--group", str(path)])
    assert code == 0
    assert doc["details"]["order"] == 6
    assert doc["details"]["matrix_dim"] == 2


def test_rep_polytope_unknown_group(capsys):
    assert main(["rep-polytope", "--group", "nope"]) == 3


def test_reports_deterministic(capsys):
    _, doc1 = run_json(capsys, ["verify-symmetry-group", "3"])
    _, doc2 = run_json(capsys, ["verify-symmetry-group", "3"])
    doc1.pop("runtime_ms")
    doc2.pop("runtime_ms")
    assert doc1 == doc2


def test_installed_entry_point():
    proc = subprocess.run(["birkhoffsym", "verify-table", "3"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["pass"] is True


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "birkhoffsym.cli", "verify-table", "4"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True
