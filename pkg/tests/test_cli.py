import csv
import io
import json
import subprocess
import sys

import pytest

from bchdim.cli import TABLE_COLUMNS, main

TABLE_CSV = """\
q,m,lambda,n,delta,dim,bose,merged_with
3,4,2,40,2,36,2,
3,4,2,40,3,32,4,3-4
3,4,2,40,4,32,4,3-4
3,4,2,40,5,28,5,
3,4,2,40,6,26,7,6-7
3,4,2,40,7,26,7,6-7
3,4,2,40,8,22,8,
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv_is_byte_stable(capsys):
    code, out, _ = run(capsys, "table", "--q", "3", "--m", "4", "--lambda", "2", "--delta-max", "8")
    assert code == 0 and out == TABLE_CSV
    rows = list(csv.DictReader(io.StringIO(out)))
    assert tuple(rows[0]) == TABLE_COLUMNS


def test_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "table", "--q", "3", "--m", "4", "--lambda", "2", "--delta-max", "8",
                       "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 7
    as_csv = list(csv.DictReader(io.StringIO(TABLE_CSV)))
    for r, c in zip(rows, as_csv):
        assert {k: ("" if v is None else str(v)) for k, v in r.items()} == c


def test_table_past_bose_range_leaves_blank(capsys):
    code, out, _ = run(capsys, "table", "--q", "3", "--m", "4", "--lambda", "2",
                       "--delta-min", "13", "--delta-max", "14")
    assert code == 0
    assert out.splitlines()[1:] == ["3,4,2,40,13,12,13,12-13", "3,4,2,40,14,8,,"]


def test_dim_and_bose(capsys):
    code, out, _ = run(capsys, "dim", "--q", "3", "--m", "5", "--lambda", "2", "--delta", "9")
    rec = json.loads(out)
    assert code == 0 and rec["dim"] == 91 and rec["method"] == "closed-form" and rec["n"] == 121
    code, out, _ = run(capsys, "bose", "--q", "3", "--m", "5", "--lambda", "2", "--delta", "9",
                       "--format", "text")
    assert code == 0 and "bose=10" in out.split()


def test_nonnarrow_dim(capsys):
    code, out, _ = run(capsys, "dim", "--q", "3", "--m", "4", "--delta", "2", "--b", "11")
    assert code == 0 and json.loads(out)["dim"] == 76


def test_out_of_range_and_oracle_fallback(capsys):
    code, _, err = run(capsys, "dim", "--q", "3", "--m", "4", "--lambda", "2", "--delta", "20")
    assert code == 1 and err.startswith("error:")
    code, out, _ = run(capsys, "dim", "--q", "3", "--m", "4", "--lambda", "2", "--delta", "20", "--oracle")
    rec = json.loads(out)
    assert code == 0 and rec["method"] == "oracle" and rec["dim"] == 8


def test_bad_parameters_exit_1(capsys):
    assert run(capsys, "dim", "--q", "6", "--m", "4", "--delta", "3")[0] == 1
    assert run(capsys, "dim", "--q", "3", "--m", "4", "--lambda", "3", "--delta", "3")[0] == 1


def test_coset(capsys):
    code, out, _ = run(capsys, "coset", "--q", "3", "--n", "40", "--a", "2")
    assert code == 0 and out.strip() == "leader=2 size=4 members=2,6,14,18"
    code, out, _ = run(capsys, "coset", "--q", "3", "--n", "40", "--a", "6", "--format", "json")
    assert json.loads(out)["leader"] == 2


def test_verify_and_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "--q-max", "3", "--m-max", "5", "--check", "all")
    assert code == 0 and "0 mismatches" in out
    code, out, _ = run(capsys, "lemmas", "--grid", "small")
    assert code == 0 and "0 mismatches" in out
    assert run(capsys, "verify", "--q-max", "1")[0] == 1


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "bchdim", "bose", "--q", "4", "--m", "4", "--lambda", "3",
                          "--delta", "4"], capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["bose"] == 5


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
