"""
Tests for the command-line entry point, driven through ``main(argv)``.
"""

from __future__ import annotations

import io
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest

import app_cli
from cli.documents import MultiStateDocument, dumps
from qstate.bloch import multistate_from_bloch

FIXTURES = Path(__file__).parent.parent / "fixtures"


def _json_out(capsys: pytest.CaptureFixture) -> dict:
    return json.loads(capsys.readouterr().out)


def test_random_is_byte_identical(capsys):
    assert app_cli.main(["random", "--dim", "2", "--count", "3", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert app_cli.main(["random", "--dim", "2", "--count", "3", "--seed", "7"]) == 0
    assert capsys.readouterr().out == first
    assert json.loads(first)["dim"] == 2


def test_random_writes_output_file(tmp_path):
    target = tmp_path / "docs" / "states.json"
    assert app_cli.main(["random", "--dim", "3", "--count", "2", "--pure", "--output", str(target)]) == 0
    assert len(json.loads(target.read_text())["states"]) == 2


def test_analyze_json_report(capsys):
    code = app_cli.main(["analyze", "--input", str(FIXTURES / "pauli_triple.json"), "--json"])
    assert code == 0
    report = _json_out(capsys)
    assert report["command"] == "analyze"
    assert report["payload"]["verdicts"]["imaginarity"]["decision"] == "has-resource"
    assert report["provenance"]["tool_version"] == "1.0.0"


def test_analyze_near_coplanar_file_succeeds(tmp_path, capsys):
    path = tmp_path / "near_coplanar.json"
    ms = multistate_from_bloch([[1, 0, 0], [0, 0, 1], [0.5, 1e-5, 0.5]])
    path.write_text(dumps(MultiStateDocument.from_multistate(ms).to_json()))
    assert app_cli.main(["analyze", "--input", str(path), "--json"]) == 0
    payload = _json_out(capsys)["payload"]
    assert payload["verdicts"]["imaginarity"]["decision"] == "resource-free"
    assert payload["witnesses"]["third_order"]["decision"] == "resource-free"
    assert payload["real_basis"]["certificate_failed"] is False


def test_random_dim4_document_analyzes(tmp_path, capsys):
    path = tmp_path / "dim4.json"
    assert app_cli.main(["random", "--dim", "4", "--count", "3", "--seed", "9", "--output", str(path)]) == 0
    assert app_cli.main(["analyze", "--input", str(path), "--json"]) == 0
    payload = _json_out(capsys)["payload"]
    assert payload["dim"] == 4
    assert payload["count"] == 3
    assert payload["gram"]["basis"] == "gellmann"
    assert payload["verdicts"]["imaginarity"]["source"] == "high_dim_imaginarity_necessary"


def test_analyze_table_output(capsys):
    assert app_cli.main(["analyze", "--input", str(FIXTURES / "xz_plane.json")]) == 0
    out = capsys.readouterr().out
    assert "Multi-state analysis" in out
    assert "real_basis:" in out


def test_invariant_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO((FIXTURES / "pauli_triple.json").read_text()))
    assert app_cli.main(["invariant", "--seq", "x,y,z", "--json"]) == 0
    assert _json_out(capsys)["payload"]["value"] == pytest.approx([0.25, 0.25], abs=1e-15)


def test_reconstruct_with_labels(capsys):
    argv = ["reconstruct", "--input", str(FIXTURES / "pauli_overlaps.json"), "--seq", "z,y,x", "--json"]
    assert app_cli.main(argv) == 0
    roots = _json_out(capsys)["payload"]["roots"]
    np.testing.assert_allclose(roots, [[0.25, 0.25], [0.25, -0.25]], atol=1e-15)


def test_reproduce_single_fixture(capsys):
    assert app_cli.main(["reproduce", "--fixture", "qutrit-lambda"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "failed checks: 0" in out


def test_bad_entry_exits_with_location(capsys):
    assert app_cli.main(["analyze", "--input", str(FIXTURES / "bad_entry.json")]) == 2
    assert "error: $.states[0][1][0]" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--input", str(FIXTURES / "pauli_triple.json"), "--tolerance=-1"],
        ["witness", "--input", str(FIXTURES / "pauli_triple.json"), "--seq", "1,2,3", "--perm", "0,0,1"],
        ["invariant", "--input", str(FIXTURES / "pauli_triple.json"), "--seq", "1,,2"],
        ["quantify", "--input", str(FIXTURES / "missing.json")],
        ["random", "--dim", "1"],
    ],
    ids=["tolerance", "permutation", "sequence", "missing-file", "dimension"],
)
def test_bad_input_exits_2(argv, capsys):
    assert app_cli.main(argv) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        app_cli.main(["reproduce"])
    assert info.value.code == 2
