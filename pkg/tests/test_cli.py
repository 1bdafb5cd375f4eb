import json

import pytest

from ulrich_kit.cli.main import main


def run(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_resolve(capsys):
    code, rep = run(capsys, "resolve", "--corpus", "sec6", "--module", "I", "--steps", "5")
    assert code == 0
    assert rep["result"]["betti"] == [3, 4, 4, 4, 4, 4]
    assert rep["characteristic"] == 32003 and rep["command"] == "resolve"
    assert set(rep) >= {"engineVersion", "timings", "result"}


def test_check_ideal_and_module(capsys):
    assert run(capsys, "check-ulrich-ideal", "--corpus", "sec6")[1]["result"]["isUlrich"]
    code, rep = run(capsys, "check-ulrich-module", "--corpus", "sec6", "--module", "ImPhi")
    assert code == 0 and rep["result"]["e0"] == 8


def test_linkage_and_hilbert(capsys):
    _, rep = run(capsys, "linkage", "--corpus", "sec6", "--module", "ImPhi")
    assert rep["result"]["horizontallyLinked"] and rep["result"]["lambdaSamePresentation"]
    _, rep = run(capsys, "hilbert", "--corpus", "ex5.17", "--module", "I")
    assert rep["result"]["coefficients"] == [4, 0] and rep["result"]["chernNumber"] == 0


def test_invariants_and_regularity(capsys):
    _, rep = run(capsys, "invariants", "--corpus", "sec6", "--module", "ImPhi")
    assert rep["result"]["ideal"]["socleDimension"] == 1
    _, rep = run(capsys, "regularity", "--corpus", "sec6", "--module", "ImPsi")
    assert rep["result"]["regRees"] == 0


@pytest.mark.parametrize("probe", ["hom", "freeness", "regular-iff-ulrich"])
def test_probes(capsys, probe):
    code, rep = run(capsys, "probe", probe, "--corpus", "sec6", "--module", "ImPhi")
    assert code == 0 and rep["result"]["consistent"]


def test_session_file(tmp_path, capsys):
    f = tmp_path / "s.txt"
    f.write_text("[ring]\nvars = x, y\nrelations = x^2 + y^4\n[ideal I]\ngens = x, y^2\nQ = x\n")
    code, rep = run(capsys, "check-ulrich-ideal", "--session", str(f))
    assert code == 0 and rep["result"]["isUlrich"]


def test_char_override(capsys):
    _, rep = run(capsys, "check-ulrich-ideal", "--corpus", "sec6", "--char", "101")
    assert rep["characteristic"] == 101 and rep["result"]["isUlrich"]


def test_failed_check_exits_one(capsys):
    # m carries no reduction Q, so the Ulrich check cannot run
    code, rep = run(capsys, "check-ulrich-ideal", "--corpus", "sec6", "--ideal", "m")
    assert code == 1 and "error" in rep["result"]


@pytest.mark.parametrize("argv", [
    ["resolve"],
    ["resolve", "--corpus", "nope", "--module", "I"],
    ["resolve", "--corpus", "sec6"],
    ["resolve", "--corpus", "sec6", "--module", "Nope"],
    ["frobnicate"],
    ["probe", "--corpus", "sec6"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    capsys.readouterr()


def test_text_output(capsys):
    assert main(["resolve", "--corpus", "sec6", "--module", "I", "--steps", "2"]) == 0
    out = capsys.readouterr().out
    assert "betti: [3, 4, 4]" in out and "d_1:" in out


def test_verify_command_reports_every_criterion(capsys):
    code, rep = run(capsys, "verify-paper")
    crit = rep["result"]["criteria"]
    assert [c["criterion"] for c in crit] == list(range(1, 12))
    # only the displayed odd-s reduction is red, so the run as a whole fails
    assert [c["criterion"] for c in crit if not c["ok"]] == [7]
    assert code == 1
