import json

import pytest

from coxvol.cli import EXIT_IO, EXIT_LIMITS, EXIT_MATH, EXIT_OK, main


def test_vinberg_text_output(capsys):
    assert main(["vinberg", "--diag", "-1,1,1,1,1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "root (1, -1, -1, -1, 0) norm=2 height=1/2" in out
    assert "facets: 5  complete: True" in out


def test_vinberg_json_output(capsys):
    assert main(["vinberg", "--diag", "-1,3,3,3,3", "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["complete"] is True
    assert len(doc["roots"]) == 6
    assert doc["roots"][-1] == {
        "vector": [3, -1, -1, -1, -1],
        "norm": 3,
        "height": "3",
    }


def test_vinberg_limits_exit_code(capsys):
    assert main(["vinberg", "--diag", "-1,1,1,1,1", "--max-roots", "0"]) == EXIT_LIMITS
    assert "error" in capsys.readouterr().err


def test_vinberg_degenerate_form_exit_code(capsys):
    assert main(["vinberg", "--diag", "0,1,1,1,1"]) == EXIT_MATH


def test_missing_file_exit_code(capsys):
    assert main(["vinberg", "--form", "/no/such/file"]) == EXIT_IO


def test_form_file_input(tmp_path, capsys):
    path = tmp_path / "form.txt"
    path.write_text("dim 5\ndiag -1 1 1 1 1\n")
    assert main(["vinberg", "--form", str(path)]) == EXIT_OK
    assert "facets: 5" in capsys.readouterr().out


def test_euler_subcommand(capsys):
    assert main(["euler", "--diag", "-1,1,1,3,3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "chi_reflection: 5/288" in out
    assert "automorphisms: 2" in out
    assert "chi: 5/576" in out
    assert "volume: 5/432*pi^2" in out


def test_euler_diagram_input(tmp_path, capsys):
    path = tmp_path / "triangle.txt"
    path.write_text(
        "node 0 norm=1\nnode 1 norm=1\nnode 2 norm=1\n"
        "bond 0 1 3\nbond 1 2 m:7\n"
    )
    assert main(["euler", "--diagram", str(path), "--dim", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "chi_reflection: -1/84" in out
    assert "volume: 1/42*pi" in out


def test_table_text(capsys):
    assert main(["table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "37/1440" in out and "0.33813" in out and "100.00%" in out


def test_table_json_to_file(tmp_path):
    path = tmp_path / "table.json"
    assert main(["table", "--format", "json", "--out", str(path)]) == EXIT_OK
    doc = json.loads(path.read_text())
    assert doc["totals"]["chi"] == "37/1440"
    assert [c["chi"] for c in doc["components"]] == [
        "1/1920", "1/288", "5/576", "1/96", "1/384",
    ]


def test_fixed_lattice_subcommand(capsys):
    assert main(["fixed-lattice"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "diag -1 1 1 1 1" in out
    assert "diag -1 3 3 3 3" in out
    assert "signs +1 +1 +1 -1 -1" in out


def test_galois_subcommand(capsys):
    assert main(["galois", "--diag", "-1,0+1*r3,1,1,1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "signature: (4,1)" in out
    assert "conjugate signature: (3,2)" in out
    assert "nonarithmeticity witness: true" in out


def test_galois_form_file(tmp_path, capsys):
    path = tmp_path / "qform.txt"
    path.write_text("dim 5\ndiag -1 0+1*r3 1 1 1\n")
    assert main(["galois", "--form", str(path)]) == EXIT_OK
    assert "witness: true" in capsys.readouterr().out


def test_galois_fixed_form_is_false(capsys):
    assert main(["galois", "--diag", "-1,1,1,1,1"]) == EXIT_OK
    assert "witness: false" in capsys.readouterr().out


def test_diagram_export(capsys):
    assert main(["diagram-export", "--diag", "-1,1,1,1,3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("graph")
    assert "style=bold" in out  # the chamber has a heavy bond
    assert "style=dashed" in out  # and an ultraparallel pair


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["vinberg", "--format", "yaml"])
    assert info.value.code == 2
