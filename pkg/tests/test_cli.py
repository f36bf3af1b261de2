import json
import subprocess
import sys

import pytest

from wreathdet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_det(capsys):
    code, out, _ = run(capsys, "det", "1;1", "--r", "2")
    assert code == 0 and out.splitlines()[:3] == ["-zeta^1", "x=1", "y=1"]
    assert run(capsys, "det", "2;")[1].splitlines()[0] == "1"
    assert run(capsys, "det", ";2")[1].splitlines()[0] == "zeta^1"
    code, out, _ = run(capsys, "det", "2,1;;1", "--format", "json")
    assert json.loads(out)["dim"] == 8


def test_det_parse_error(capsys):
    code, _, err = run(capsys, "det", "2,x;1")
    assert code == 2 and "position 2" in err
    code, _, _ = run(capsys, "det", "1;1", "--r", "3")
    assert code == 2


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "--r", "2", "--n", "10")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 11
    assert lines[6] == "6,2,aggregate,33,8,16,8,65"
    out = run(capsys, "table", "--r", "3", "--n", "2")[1].splitlines()
    assert out[1:] == ["1,3,aggregate,1,1,1,0,0,0,3", "2,3,aggregate,1,1,1,2,2,2,9"]
    out = run(capsys, "table", "--r", "7", "--n", "1")[1].splitlines()
    assert out[1] == "1,7,aggregate," + ",".join(["1"] * 7 + ["0"] * 7) + ",7"


def test_table_byte_stable_and_plot(tmp_path, capsys):
    paths = []
    for workers in ("1", "4"):
        out = tmp_path / f"t{workers}.csv"
        plot = tmp_path / f"p{workers}.csv"
        code, _, _ = run(capsys, "table", "--r", "5", "--n", "9", "--workers", workers, "--out", str(out), "--plot-out", str(plot))
        assert code == 0
        paths.append((out.read_bytes(), plot.read_bytes()))
    assert paths[0] == paths[1]
    plot_lines = paths[0][1].decode().splitlines()
    assert plot_lines[1].startswith("1,0.000000,")
    assert plot_lines[1].endswith(",,,,,")  # zero counts leave empty cells


def test_table_check_reports_errata(capsys):
    code, _, err = run(capsys, "table", "--r", "2", "--n", "10", "--check")
    assert code == 0 and "documented erratum" in err
    code, _, _ = run(capsys, "table", "--r", "2", "--n", "10", "--check", "--strict-paper")
    assert code == 1


def test_table_cap(capsys):
    code, _, err = run(capsys, "table", "--r", "7", "--n", "10", "--cap", "1000")
    assert code == 3 and "estimated" in err
    assert run(capsys, "table", "--r", "4", "--n", "2")[0] == 2


def test_mp(capsys):
    assert run(capsys, "mp", "--n", "2", "--r", "2", "--p", "2")[1] == "4, 4\n"
    assert run(capsys, "mp", "--n", "1", "--r", "5", "--p", "3")[1] == "5, 5\n"
    assert run(capsys, "mp", "--n", "0", "--r", "2", "--p", "3")[1] == "1, 1\n"
    assert run(capsys, "mp", "--n", "2", "--r", "2", "--p", "4")[0] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "2,2,2", "--r", "3", "--format", "json")
    info = json.loads(out)
    assert code == 0 and 1 in info["table_rows"] and info["possible_values"] == ["1"]
    info = json.loads(run(capsys, "classify", "3,3,0", "--r", "3", "--format", "json", "--check")[1])
    assert 4 in info["table_rows"] and info["possible_values"] == ["zeta^s"]
    assert info["rows_contradicted_by_enumeration"] == [2]
    assert run(capsys, "classify", "3,3,0", "--r", "3", "--check", "--strict-paper")[0] == 1
    info = json.loads(run(capsys, "classify", "1,1,1,1,0", "--r", "5", "--format", "json")[1])
    assert info["table_rows"] == [5]
    assert run(capsys, "classify", "1,a", "--r", "2")[0] == 2


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "4", "--r", "3", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["multipartitions"] == 51
    assert info["odd_degree_formula"] == info["odd_degree_enumerated"] == 12
    code, out, _ = run(capsys, "count", "--n", "2", "--r", "3", "--composition", "1,0,1", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["A1"] == 1 and "small_n" in info["formulas_checked"]


def test_verify_default_and_fault(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--format", "json")
    assert code == 0 and json.loads(out)["ok"]
    code, _, err = run(capsys, "verify", "--n", "4", "--inject-fault", "odd_degree_count")
    assert code == 1 and "odd_degree_count" in err
    assert run(capsys, "verify", "--inject-fault", "no_such_check")[0] == 2
    assert run(capsys, "verify", "--n", "6", "--r", "3", "--strict-paper")[0] == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2
    assert run(capsys, "mp", "--n", "2", "--r", "2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wreathdet", "det", "1;1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("-zeta^1")
