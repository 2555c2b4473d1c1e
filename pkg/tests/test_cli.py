import csv
import io
import json
import subprocess
import sys

import pytest

from axialjordan.cli import CSV_HEADER, main, parse_grid
from axialjordan.cli import UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def sweep_rows(text):
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_HEADER
    return rows[1:]


@pytest.mark.parametrize(
    "tup,rows,iso,dim",
    [
        ("1,1,1,1", ["A1"], "F", 1),
        ("0,0,1/2,0", ["A6"], "F+JForm2", 4),
        ("1/2,2,2,3/2", [], "M3+", 9),
    ],
)
def test_classify(capsys, tup, rows, iso, dim):
    code, out, _ = run(capsys, "classify", tup)
    data = json.loads(out)
    assert code == 0
    assert (data["rows"], data["iso"], data["quotient_dim"]) == (rows, iso, dim)


def test_classify_params_flag_and_exact_output(capsys):
    code, out, _ = run(capsys, "classify", "--params", "sqrt(2),1/3,0,-1")
    assert code == 0
    assert json.loads(out)["params"]["alpha"] == "sqrt(2)"


@pytest.mark.parametrize("bad", ["1,2,3", "1,x,2,3", "0.5,1,1,1"])
def test_classify_parse_error(capsys, bad):
    code, _, err = run(capsys, "classify", bad)
    assert code == 2 and "error" in err


def test_verify_row_ok(capsys):
    code, out, _ = run(capsys, "verify", "A4")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert data["results"][0]["quotient_dim"] == 3


def test_verify_nonzero_residual_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "A6")
    assert code == 1 and not json.loads(out)["ok"]


def test_verify_generic(capsys):
    code, out, _ = run(capsys, "verify", "generic")
    assert code == 0 and json.loads(out)["results"][0]["quotient_dim"] == 9


def test_verify_unrealizable_exits_2(capsys):
    code, _, err = run(capsys, "verify", "A6", "--params", "0,0,1,0")
    assert code == 2


def test_verify_bad_scope(capsys):
    code, _, _ = run(capsys, "verify", "A10")
    assert code == 2


def test_verify_tables_reports_suspect_as_warning(capsys):
    code, out, _ = run(capsys, "verify", "tables")
    data = json.loads(out)
    s8 = next(r for r in data["results"] if r["table"] == "S8")
    suspects = [d for d in s8["diffs"] if d["status"] == "suspect"]
    assert [d["cell"] for d in suspects] == [["a(bc)", "a"]]
    assert any("(a(bc), a)" in w for w in data["warnings"])
    # exit status follows the unflagged mismatches
    assert code == (0 if data["ok"] else 1)


def test_sweep_81_rows(capsys):
    code, out, _ = run(capsys, "sweep", "--grid", "0,1/2,1", "--no-verify")
    rows = sweep_rows(out)
    assert code == 0 and len(rows) == 81
    assert rows[0][:4] == ["0", "0", "0", "0"]
    assert rows[-1][:4] == ["1", "1", "1", "1"]


def test_sweep_zero_grid_is_a3(capsys):
    code, out, _ = run(capsys, "sweep", "--grid", "0:0:1")
    rows = sweep_rows(out)
    assert code == 0 and len(rows) == 1
    assert rows[0][4:] == ["A3", "F3", "3", "ok"]


def test_sweep_finds_a5(capsys):
    code, out, _ = run(
        capsys, "sweep", "--alpha", "1/3", "--beta", "1/3", "--gamma", "1/9,1", "--psi=-1/9,0"
    )
    rows = sweep_rows(out)
    hit = next(r for r in rows if r[:4] == ["1/3", "1/3", "1/9", "-1/9"])
    assert hit[4:] == ["A5", "JForm2", "3", "ok"]


def test_sweep_parallel_matches_serial(capsys, tmp_path):
    args = ["sweep", "--grid", "0,1/2", "--psi", "0,1"]
    code1, serial, _ = run(capsys, *args, "--jobs", "1")
    out = tmp_path / "sweep.csv"
    code2, _, _ = run(capsys, *args, "--jobs", "2", "--out", str(out))
    assert code1 == code2 and out.read_text() == serial


def test_sweep_unwritable_output(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", "--grid", "0", "--no-verify", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 2


def test_sweep_requires_grids(capsys):
    code, _, _ = run(capsys, "sweep", "--alpha", "0")
    assert code == 2


def test_parse_grid():
    assert parse_grid("0:1:1/2") == [0, 0.5, 1]
    assert parse_grid("1:0:-1/2")[-1] == 0
    with pytest.raises(UsageError):
        parse_grid("0:1:0")
    with pytest.raises(UsageError):
        parse_grid("0:1")


def test_model_kind(capsys):
    code, out, _ = run(capsys, "model", "--kind", "JForm2")
    data = json.loads(out)
    assert code == 0 and len(data["axes"]) == 2 and "gram" in data


def test_model_params_deterministic(capsys):
    argv = ("model", "--params", "0,1/2,3/2,1/2", "--branch", "plus")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    data = json.loads(first)
    assert data["provenance"] == "S7gen" and data["classification"]["rows"] == ["A7"]
    assert all("." not in v for row in data["gram"] for v in row)


def test_model_needs_a_source(capsys):
    assert run(capsys, "model")[0] == 2
    assert run(capsys, "model", "--kind", "F1", "--params", "1,1,1,1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "axialjordan", "classify", "0,0,0,0"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["iso"] == "F3"
