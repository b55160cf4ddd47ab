"""CLI: output formats, exit codes, the consistency verdict."""

import json

import pytest

from fibcube.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fib_single(capsys):
    code, out, _ = run(capsys, "fib", "--n", "10")
    assert code == 0
    assert out == "55\n"


def test_fib_table(capsys):
    code, out, _ = run(capsys, "fib", "--n-max", "5")
    assert code == 0
    assert out.splitlines() == ["0\t0", "1\t1", "2\t1", "3\t2", "4\t3", "5\t5"]


def test_fib_requires_exactly_one_mode(capsys):
    assert run(capsys, "fib")[0] == 2
    assert run(capsys, "fib", "--n", "3", "--n-max", "5")[0] == 2


def test_big_values_are_decimal_strings(capsys):
    code, out, _ = run(capsys, "fib", "--n", "90", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["command"] == "fib"
    assert blob["result"]["values"][0]["value"] == "2880067194370816120"


def test_vertices_human(capsys):
    code, out, _ = run(capsys, "vertices", "--n", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8
    assert lines[0] == "0000"
    assert all(set(line) <= {"0", "1"} and len(line) == 4 for line in lines)


def test_vertices_csv(capsys):
    code, out, _ = run(capsys, "vertices", "--n", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,value,string"
    assert lines[1] == "0,0,000"
    assert lines[-1] == "4,5,101"


def test_seq_p(capsys):
    code, out, _ = run(capsys, "seq", "p", "--k", "2", "--n-max", "5")
    assert code == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == ["1", "2", "3", "1", "4", "5"]


def test_seq_q_csv(capsys):
    code, out, _ = run(capsys, "seq", "q", "--k", "1", "--n-max", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,value", "0,0", "1,1", "2,1", "3,2", "4,4"]


def test_seq_json_schema(capsys):
    code, out, _ = run(capsys, "seq", "q", "--k", "2", "--n-max", "3", "--format", "json")
    blob = json.loads(out)
    assert set(blob) == {"command", "params", "result"}
    assert blob["params"] == {"kind": "q", "k": 2, "n_max": 3}
    assert blob["result"]["rows"][-1] == {"n": 3, "value": "1"}


def test_poly_single_class(capsys):
    code, out, _ = run(capsys, "poly", "--k", "2", "--r", "1")
    assert code == 0
    assert out == "2/3*n^1 + 4/3\n"


def test_poly_all_classes_with_check(capsys):
    code, out, _ = run(capsys, "poly", "--k", "4", "--check-table1")
    assert code == 0
    assert out.splitlines()[-1] == "table check: PASS"


def test_poly_check_out_of_range(capsys):
    code, _, err = run(capsys, "poly", "--k", "5", "--check-table1")
    assert code == 2
    assert "k <= 4" in err


def test_poly_csv_rows_are_rationals(capsys):
    code, out, _ = run(capsys, "poly", "--k", "2", "--r", "1", "--format", "csv")
    assert out.splitlines() == ["k,r,power,coefficient", "2,1,0,4/3", "2,1,1,2/3"]


def test_pack_consistent_cell(capsys):
    code, out, _ = run(capsys, "pack", "--n", "6", "--k", "2")
    assert code == 0
    assert out.splitlines()[-1] == "CONSISTENT"


def test_pack_divergent_cell_fails_verification(capsys):
    """The exact optimum beats the recurrence at n=7, k=2; exit code says so."""
    code, out, _ = run(capsys, "pack", "--n", "7", "--k", "2")
    assert code == 1
    lines = out.splitlines()
    assert "packing size: 8" in lines[1]
    assert "size 7" in lines[3]
    assert lines[-1] == "INCONSISTENT"


def test_pack_witness_lines(capsys):
    code, out, _ = run(capsys, "pack", "--n", "7", "--k", "2", "--witness")
    assert code == 1
    assert sum(1 for line in out.splitlines() if line.startswith("pattern: ")) == 8
    assert sum(1 for line in out.splitlines() if line.startswith("uncovered vertex: ")) == 2


def test_pack_json(capsys):
    code, out, _ = run(capsys, "pack", "--n", "7", "--k", "2", "--format", "json")
    assert code == 1
    blob = json.loads(out)
    r = blob["result"]
    assert r["size"] == "8"
    assert r["recurrence_size"] == "7"
    assert r["consistent"] is False
    assert r["optimal"] is True
    assert r["witness_valid"] is True


def test_pack_time_limit_exit_code(capsys):
    # (k=2, n=10) needs far more than a few hundredths of a second to close
    code, out, _ = run(capsys, "pack", "--n", "10", "--k", "2", "--time-limit", "0.05")
    assert code == 3
    assert "lower bound" in out


def test_ratio_csv(capsys):
    code, out, _ = run(capsys, "ratio", "--k", "2", "--n-max", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,uncovered_exact,covered_exact,uncovered_approx,covered_approx"
    assert lines[4] == "3,1/5,4/5,0.200000000000,0.800000000000"


def test_ratio_rows_sum_to_one(capsys):
    code, out, _ = run(capsys, "ratio", "--k", "3", "--n-max", "8", "--format", "json")
    blob = json.loads(out)
    for row in blob["result"]["rows"]:
        unc = row["uncovered"]
        assert "/" in unc or unc in {"0", "1"}


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "seq", "x", "--k", "1", "--n-max", "3")[0] == 2
    assert run(capsys, "seq", "q", "--k", "0", "--n-max", "3")[0] == 2
    assert run(capsys, "vertices", "--n", "99")[0] == 2
    assert run(capsys, "pack", "--n", "5", "--k", "1", "--time-limit", "-1")[0] == 2
    assert run(capsys, "poly", "--k", "2", "--r", "5")[0] == 2


def test_selftest_quick_passes(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0
    lines = out.splitlines()
    assert len([line for line in lines if line.startswith("[PASS]")]) == 9
    assert lines[-1] == "overall: PASS (9/9 criteria passed)"
    assert "trimmed cells" in out
