import json
import subprocess
import sys

import pytest

from higherkind import catalog
from higherkind.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_success(capsys):
    assert run_cli(capsys, "parse", "2*3+4") == (0, "10\n", "")


def test_parse_failure(capsys):
    assert run_cli(capsys, "parse", "2*") == (1, "", "parse error at 2: expected term\n")
    assert run_cli(capsys, "parse", "1+") == (1, "", "parse error at 2: expected term\n")


def test_parse_division_by_zero(capsys):
    code, out, err = run_cli(capsys, "parse", "4/(2-2)")
    assert code == 1 and out == "" and err == "evaluation error: division by zero\n"


def test_laws_monad_list(capsys):
    code, out, err = run_cli(capsys, "laws", "--suite", "monad", "--instance", "list",
                             "--seed", "7", "--cases", "200")
    lines = out.splitlines()
    assert code == 0 and err == ""
    assert len(lines) == 3
    assert all(line.endswith(": PASS") for line in lines)


def test_laws_json(capsys):
    code, out, _ = run_cli(capsys, "laws", "--suite", "monad0p", "--instance", "option",
                           "--cases", "50", "--json")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert {r["law"] for r in records} >= {"left-zero", "diamond-apply"}
    assert all(r["passed"] and r["counterexample"] is None and r["cases"] == 50 for r in records)


def test_list_instances(capsys):
    code, out, _ = run_cli(capsys, "list-instances")
    assert code == 0
    names = out.split()
    assert names == list(catalog.instance_names())
    for required in ("list", "list-zip", "option", "either", "identity", "reader", "writer",
                     "state", "product-option-list", "state-t-option", "except-t-identity",
                     "parser"):
        assert required in names


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["laws", "--frobnicate"],
    ["laws", "--instance", "nope"],
    ["laws", "--suite", "transformer", "--instance", "list"],
    ["laws", "--cases", "-3"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    out, err = capsys.readouterr()
    assert out == "" and "usage:" in err


def test_failing_laws_exit_1(monkeypatch, capsys):
    from higherkind.laws import LawReport, LawResult

    bad = LawReport("monad", "list", (LawResult("left-identity", 1, False, "a=1"),))
    monkeypatch.setattr(catalog, "run_suites", lambda *a, **k: [bad])
    code, out, _ = run_cli(capsys, "laws")
    assert code == 1
    assert out == "list monad left-identity (1 cases): FAIL a=1\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higherkind", "parse", "(1+2)*3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "9\n"
