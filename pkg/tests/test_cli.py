import io
import json
import subprocess
import sys

import pytest

from cocharlab import cli
from cocharlab.characters import NotACharacter


def run(*argv):
    out = io.StringIO()
    assert cli.run(list(argv), out) == 0
    return out.getvalue()


def exit_code(*argv):
    return cli.main(list(argv))


def test_compute_ut2():
    data = json.loads(run("compute", "--m", "2", "--n", "6"))
    assert data["schema"] == 1
    assert data["gamma"] == 5
    assert data["xi"] == [{"lambda": [5, 1], "mult": 1}]


def test_compute_multidegree():
    data = json.loads(run("compute", "--m", "3", "--multidegree", "2,1,0"))
    assert data["rows"][0]["engine"] == 2


def test_oracle_matches_compute():
    a = json.loads(run("compute", "--m", "3", "--n", "4"))
    b = json.loads(run("oracle", "--m", "3", "--n", "4"))
    assert [r["engine"] for r in a["rows"]] == [r["oracle"] for r in b["rows"]]


def test_tables():
    data = json.loads(run("tables", "--m", "4", "--lambda", "3,2"))
    assert data["rows"][0]["published"] == [{"source": "UT4 multiplicity table", "value": 6}]


def test_verify():
    data = json.loads(run("verify", "--m", "3", "--n", "2"))
    gamma = data["rows"][0]
    assert gamma["key"] == "gamma n=2"
    assert gamma["verdict"] == "ALL_AGREE"
    assert gamma["oracle"] == 3


def test_verify_csv_and_latex():
    assert run("verify", "--m", "3", "--n", "3", "--format", "csv").startswith(
        "key,engine,published,oracle,verdict\n")
    assert r"\begin{tabular}" in run("verify", "--m", "3", "--n", "3", "--format", "latex")


def test_badseq():
    data = json.loads(run("badseq", "--m", "3"))
    assert {r["key"] for r in data["rows"]} >= {"(0,0)", "(1,0)", "(1,1)"}
    assert data["generators"]


def test_compare():
    data = json.loads(run("compare", "--m", "3", "--n", "3", "--gradings", "phi,psi"))
    assert data["verdict"] in {"LE", "GE", "EQ", "INCOMPARABLE"}
    data = json.loads(run("compare", "--m", "3", "--n", "3", "--gradings", "0,0,1;0,1,2"))
    assert data["gradings"] == ["0,0,1", "0,1,2"]


def test_byte_determinism():
    argv = ("verify", "--m", "4", "--n", "4", "--format", "json")
    assert run(*argv) == run(*argv)


@pytest.mark.parametrize("argv", [
    ("compute",),
    ("explode", "--m", "3"),
    ("compute", "--m", "3", "--n", "2", "--format", "xml"),
    ("compute", "--m", "3", "--n", "2", "--multidegree", "2,0,0"),
    ("compute", "--m", "x", "--n", "2"),
    ("compute", "--m", "3", "--grading", "0,1"),
    ("compute", "--m", "3"),
    ("compare", "--m", "3", "--n", "2", "--gradings", "phi"),
    ("tables", "--m", "4", "--lambda", "3,x"),
])
def test_invalid_flags(argv, capsys):
    assert exit_code(*argv) == 64
    assert "usage:" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ("compute", "--m", "3", "--multidegree", "0,2,0"),
    ("compute", "--m", "3", "--grading", "psi", "--n", "3"),
    ("oracle", "--m", "3", "--n", "9"),
    ("oracle", "--m", "3", "--n", "4", "--cap", "3"),
    ("tables", "--m", "4", "--lambda", "1,1"),
    ("tables", "--m", "7", "--n", "3"),
    ("compute", "--m", "3", "--n", "-1"),
])
def test_precondition_violations(argv, capsys):
    assert exit_code(*argv) == 2
    assert "precondition" in capsys.readouterr().err


def test_not_a_character(monkeypatch, capsys):
    def boom(*_):
        raise NotACharacter("negative multiplicity")
    monkeypatch.setattr(cli, "xi_n", boom)
    assert exit_code("compute", "--m", "3", "--n", "2") == 3
    assert "not a character" in capsys.readouterr().err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "cocharlab.cli", "tables", "--m", "4",
                           "--lambda", "3,2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["schema"] == 1
    proc = subprocess.run([sys.executable, "-m", "cocharlab.cli", "nope"],
                          capture_output=True, text=True)
    assert proc.returncode == 64
