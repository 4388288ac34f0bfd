import csv
import io
import json
import subprocess
import sys

import pytest

from mockchar.cli import main
from mockchar.harness import parse_complex


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


def test_eval_level_one_example():
    status, out = run("eval", "phi", "--m", "1", "--s", "0", "--tau", "0+0.9i", "--z1", "0.17", "--z2", "0.31", "--t", "0")
    assert status == 0
    lines = out.splitlines()
    assert lines[0].startswith("# command=eval") and "term_tol=1e-16" in lines[0]
    assert lines[1].split() == ["tau", "z", "value"]
    value = parse_complex(lines[2].split()[-1])
    assert abs(value - 1.186087330512887j) < 1e-13


def test_eval_json_grid():
    status, out = run("eval", "theta11", "--tau", "0.1+0.9i,0.2+1.1i", "--z", "0.1,0.2+0.1i", "--format", "json")
    assert status == 0
    d = json.loads(out)
    assert d["header"]["function"] == "theta11" and d["header"]["pole_eps"] == 1e-10
    assert len(d["rows"]) == 4 and set(d["rows"][0]) == {"tau", "z", "value"}


def test_eval_csv_has_header_row():
    status, out = run("eval", "eta", "--tau", "0+i", "--format", "csv")
    rows = list(csv.reader(line for line in out.splitlines() if not line.startswith("#")))
    assert status == 0 and rows[0] == ["tau", "z", "value"]
    assert abs(parse_complex(rows[1][2]) - 0.7682254223260566) < 1e-14


@pytest.mark.parametrize("argv", [
    ["eval", "nosuchfn", "--tau", "0+i"],
    ["eval", "eta", "--tau", "0-1i"],
    ["eval", "eta", "--tau", "banana"],
    ["eval", "character", "--m", "2", "--tau", "0+i"],
    ["eval", "character", "--m", "3/2", "--m2", "0", "--tau", "0+i"],
    ["eval", "character", "--m", "2", "--m2", "5", "--tau", "0+i"],
    ["verify", "--format", "xml"],
    ["verify", "--samples", "0"],
    ["asym", "--char", "m=2,plus"],
    ["asym", "--char", "eta", "--T", "0.1,-0.1"],
    ["table", "--sector", "sideways"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    status, out = run(*argv)
    assert status == 2 and out == ""


def test_unknown_function_lists_valid_keys(capsys):
    run("eval", "nosuchfn", "--tau", "0+i")
    err = capsys.readouterr().err
    assert "phi_tilde" in err and "closed_form" in err


def test_evaluation_error_exits_3(capsys):
    status, out = run("eval", "phi", "--m", "1", "--tau", "0+i", "--z1", "0", "--z2", "0.3")
    assert status == 3 and out == ""
    assert "evaluation failed" in capsys.readouterr().err


def test_verify_subset_json():
    status, out = run("verify", "--suite", "theta-*", "--seed", "3", "--samples", "20", "--format", "json")
    assert status == 0
    d = json.loads(out)
    assert d["suite"] == "theta-*" and d["params"]["seed"] == 3 and d["params"]["samples"] == 20
    assert d["cases"] and all(c["pass"] for c in d["cases"])


def test_verify_failure_exits_1():
    status, out = run("verify", "--suite", "theta-s-law", "--tol", "1e-30", "--format", "csv")
    assert status == 1
    lines = out.splitlines()
    assert lines[0].startswith("# seed=") and lines[1].startswith("id,pass,")
    assert ",FAIL," in lines[2]


def test_verify_probes_only_never_fail():
    status, out = run("verify", "--suite", "conjecture-*", "--format", "plain")
    assert status == 0
    assert out.splitlines()[1].split()[:2] == ["id", "pass"]


def test_verify_empty_selection():
    status, out = run("verify", "--suite", "nothing-matches", "--format", "json")
    assert status == 0 and json.loads(out)["cases"] == []


def test_verify_list():
    status, out = run("verify", "--suite", "m2-*", "--list")
    assert status == 0 and all(line.startswith("m2-") for line in out.splitlines())


def test_asym_example_ratios_tend_to_one():
    status, out = run("asym", "--char", "m=2,m2=1,plus,honest", "--a", "0", "--T", "0.2,0.1,0.05", "--format", "json")
    assert status == 0
    rows = json.loads(out)["rows"]
    devs = [float(r["deviation"]) for r in rows]
    assert [r["T"] for r in rows] == [0.2, 0.1, 0.05]
    assert devs[0] > devs[1] and devs[-1] < 1e-12
    assert all(abs(parse_complex(r["ratio"]) - 1) < 1e-6 for r in rows)


def test_asym_from_flags_and_primitives():
    status, out = run("asym", "--m2", "0", "--sector", "minus", "--modified", "--T", "0.1")
    assert status == 0 and "m=2,m2=0,minus,modified" in out.splitlines()[0]
    status, out = run("asym", "--char", "theta01", "--a", "0.25")
    assert status == 0 and len(out.splitlines()) == 5


def test_table_csv():
    status, out = run("table", "--m", "2", "--tau", "0.1+0.9i,0+1.2i", "--z", "0.1+0.05i")
    assert status == 0
    rows = list(csv.reader(line for line in out.splitlines() if not line.startswith("#")))
    assert rows[0] == ["character", "tau", "z", "re", "im"]
    assert len(rows) == 1 + 3 * 4 * 2


def test_table_closed_form_agrees_with_series():
    def values(*extra):
        _, out = run("table", "--m", "2", "--m2", "1", "--modified", "--format", "json", *extra)
        return [complex(r["re"], r["im"]) for r in json.loads(out)["rows"]]

    for a, b in zip(values(), values("--closed-form")):
        assert abs(a - b) < 1e-10


def test_threads_env_is_reported(monkeypatch):
    monkeypatch.setenv("MOCKCHAR_THREADS", "2")
    _, out = run("eval", "eta", "--tau", "0+i")
    assert "threads=2" in out.splitlines()[0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mockchar", "eval", "eta", "--tau", "0+i", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["rows"]
    proc = subprocess.run([sys.executable, "-m", "mockchar", "eval", "eta"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
