"""
Integration tests for fixture reproduction through the command-line entry point.

Exercises: app_cli.main(["reproduce", ...]) -> fixture construction -> every
check computed against its expected value -> JSON report with provenance and
the process exit code.
"""

import json
import sys
from pathlib import Path

_project_root = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(_project_root / "src"))

import pytest

import app_cli
from cli.commands import cmd_reproduce
from criteria.fixtures import FIXTURE_NAMES


@pytest.fixture(scope="module")
def report():
    doc, code = cmd_reproduce()
    assert code == 0
    return json.loads(json.dumps(doc.to_json()))


def _outcome(report: dict, fixture: str, key: str) -> dict:
    matches = [o for o in report["payload"]["fixtures"][fixture] if o["key"] == key]
    assert len(matches) == 1, f"{fixture}: no single check named {key!r}"
    return matches[0]


class TestReproduceAll:
    def test_every_fixture_reported(self, report):
        assert sorted(report["payload"]["fixtures"]) == sorted(FIXTURE_NAMES)
        assert report["payload"]["failed"] == 0

    def test_every_check_names_its_source(self, report):
        for outcomes in report["payload"]["fixtures"].values():
            for o in outcomes:
                assert o["passed"] is True
                assert o["provenance"]
                assert o["error"] <= o["tolerance"]

    def test_rational_invariants(self, report):
        o = _outcome(report, "qubit-rho-sigma", "Tr(rho1 rho2 rho3)")
        assert o["expected"] == pytest.approx([1253 / 2520, 36 / 2520], abs=1e-15)
        assert o["computed"] == pytest.approx(o["expected"], abs=1e-12)
        o = _outcome(report, "qutrit-lambda", "Tr(rho1 rho2 rho3)")
        assert o["computed"] == pytest.approx([3 / 27, 1 / 27], abs=1e-12)

    def test_provenance_block(self, report):
        assert report["provenance"]["tool_version"] == "1.0.0"
        assert report["provenance"]["settings"]["sphere_grid_points"] > 0


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_single_fixture_exit_code(name, capsys):
    assert app_cli.main(["reproduce", "--fixture", name, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert list(out["payload"]["fixtures"]) == [name]
    assert out["payload"]["passed"] is True


def test_unknown_fixture_is_an_argparse_error():
    with pytest.raises(SystemExit) as info:
        app_cli.main(["reproduce", "--fixture", "no-such-fixture"])
    assert info.value.code == 2
