import json

import numpy as np
import pytest

from signed_spectra import read_text
from signed_spectra.cli import run

C4_NEG_TEXT = "signed-graph v1\nn 4\ne 1 2 +\ne 2 3 +\ne 3 4 +\ne 4 1 -\n"


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.sg"
    path.write_text(C4_NEG_TEXT)
    return str(path)


def test_bound_gstar(capsys):
    assert run(["bound", "gstar", "--r", "2", "--s", "3"]) == 0
    assert capsys.readouterr().out == "2.000000000000\n"


def test_analyze_c4(capsys, c4_file):
    assert run(["analyze", c4_file]) == 0
    out = capsys.readouterr().out
    assert "rho 1.414213562373" in out
    assert out.startswith("n 4\n")


def test_analyze_json(capsys, c4_file):
    assert run(["analyze", c4_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert list(data.keys()) == ["n", "rho", "index", "eigenvalues", "charpoly"]
    assert abs(data["rho"] - np.sqrt(2)) < 1e-10


def test_analyze_csv(capsys, c4_file):
    assert run(["analyze", c4_file, "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,rho,index,eigenvalues,charpoly"
    assert lines[1].startswith("4,1.414213562373,1.414213562373,")


def test_balance_verdicts(capsys, c4_file):
    assert run(["balance", c4_file]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "UNBALANCED"
    assert "structural: UNBALANCED" in out  # C4 is the complete host K_{2,2}


def test_balance_flags_degenerate_all_positive(capsys, tmp_path):
    run(["gen", "catalog", "--name", "Cycle", "--n", "4"])
    path = tmp_path / "pos.sg"
    path.write_text(capsys.readouterr().out)
    assert run(["balance", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "BALANCED"
    assert "degenerate: no negative edges" in out


def test_gen_analyze_round_trip(capsys, tmp_path):
    assert run(["gen", "gstar", "--r", "3", "--s", "4"]) == 0
    text = capsys.readouterr().out
    graph = read_text(text)
    assert graph.edge_count() == 12
    path = tmp_path / "g.sg"
    path.write_text(text)
    assert run(["analyze", str(path)]) == 0
    out1 = capsys.readouterr().out
    assert run(["analyze", str(path)]) == 0
    assert capsys.readouterr().out == out1  # same argv, same bytes


def test_gen_dstar_and_catalog(capsys):
    assert run(["gen", "dstar", "--r", "5", "--s", "6", "--i", "2", "--j", "1"]) == 0
    g = read_text(capsys.readouterr().out)
    assert g.to_signed_graph().negative_edge_count() == 2
    assert run(["gen", "catalog", "--name", "U1"]) == 0
    g = read_text(capsys.readouterr().out)
    assert g.n == 8 and g.edge_count() == 12
    assert run(["gen", "catalog", "--name", "Q", "--h", "0", "--k", "1"]) == 0
    assert read_text(capsys.readouterr().out).n == 5
    assert run(["gen", "catalog", "--name", "Cycle", "--n", "6"]) == 0
    assert read_text(capsys.readouterr().out).n == 6


def test_export_dot(capsys, c4_file):
    assert run(["export", "dot", c4_file]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph signed {")
    assert "[style=dashed]" in out


def test_verify_confirmed_exit_zero(capsys):
    assert run(["verify", "thm-5.2", "--r", "2", "--s", "2"]) == 0
    out = capsys.readouterr().out
    assert "verdict CONFIRMED" in out
    assert "extremal_value 1.414213562373" in out


def test_verify_json_format(capsys):
    assert run(["verify", "thm-3.1", "--r", "2", "--s", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "CONFIRMED"
    assert data["search_space"] == 16


def test_verify_enumeration_modes(capsys):
    assert run(["verify", "thm-6.1", "--n", "4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["theorem"] == "thm-6.1"
    assert abs(data["extremal_value"] - np.sqrt(2)) < 1e-9
    assert run(["verify", "thm-5.6", "--n", "4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["theorem"] == "thm-5.6"


def test_verify_missing_params(capsys):
    assert run(["verify", "thm-5.2"]) == 1
    assert "requires --r" in capsys.readouterr().err


def test_verify_extended_gate(capsys):
    assert run(["verify", "thm-6.1", "--n", "8"]) == 1
    assert "--extended" in capsys.readouterr().err


def test_unknown_flag_is_error(capsys):
    assert run(["bound", "gstar", "--r", "2", "--s", "2", "--frobnicate"]) == 1


def test_unknown_theorem(capsys):
    assert run(["verify", "thm-9.9"]) == 1


def test_malformed_file_names_line(tmp_path, capsys):
    path = tmp_path / "bad.sg"
    path.write_text("signed-graph v1\nn 3\ne 1 kaboom +\n")
    assert run(["analyze", str(path)]) == 1
    assert "line 3" in capsys.readouterr().err


def test_missing_file(capsys):
    assert run(["analyze", "/nonexistent/g.sg"]) == 1


def test_bound_determinism(capsys):
    run(["bound", "gstar", "--r", "4", "--s", "7"])
    first = capsys.readouterr().out
    run(["bound", "gstar", "--r", "4", "--s", "7"])
    assert capsys.readouterr().out == first


def test_verify_report_determinism_modulo_elapsed(capsys):
    run(["verify", "thm-5.2", "--r", "2", "--s", "3", "--format", "json"])
    a = json.loads(capsys.readouterr().out)
    run(["verify", "thm-5.2", "--r", "2", "--s", "3", "--format", "json"])
    b = json.loads(capsys.readouterr().out)
    a.pop("elapsed_seconds")
    b.pop("elapsed_seconds")
    assert a == b
