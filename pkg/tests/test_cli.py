import csv
import io
import json
import subprocess
import sys

import pytest

from quadclass.cli import main
from quadclass.output import RECORD_FIELDS, dumps, parse_jsonl, write_rows


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classnum(capsys):
    code, out, _ = run(capsys, "classnum", "23")
    assert code == 0
    assert out == '{"D":23,"disc":-23,"h":3,"exponent":3}\n'
    _, out, _ = run(capsys, "classnum", "1")
    assert json.loads(out) == {"D": 1, "disc": -4, "h": 1, "exponent": 1}


def test_classnum_not_squarefree(capsys):
    code, out, err = run(capsys, "classnum", "12")
    assert code == 2
    assert out == ""
    assert "squarefree" in err


def test_classgroup(capsys):
    code, out, _ = run(capsys, "classgroup", "26")
    rows = parse_jsonl(out)
    assert code == 0
    assert [r["order"] for r in rows[:-1]] == [1, 2, 3, 3, 6, 6]
    assert rows[-1]["h"] == 6


def test_solve_examples(capsys):
    code, out, _ = run(capsys, "solve", "19", "--n-max", "5", "--y-max", "100", "--odd-only")
    rows = parse_jsonl(out)
    assert code == 0
    assert rows[:-1] == [{"x": 18, "y": 7, "n": 3}, {"x": 22434, "y": 55, "n": 5}]
    assert rows[-1]["summary"] == {"D": 19, "exponents": [3, 5], "y_max": 100, "count": 2}

    code, out, _ = run(capsys, "solve", "1", "--n", "3", "--y-max", "1000")
    rows = parse_jsonl(out)
    assert code == 0 and len(rows) == 1 and rows[0]["summary"]["count"] == 0

    _, out, _ = run(capsys, "solve", "2", "--n", "3", "--y-max", "100")
    assert parse_jsonl(out)[0] == {"x": 5, "y": 3, "n": 3}


def test_solve_env_defaults(capsys, monkeypatch):
    monkeypatch.setenv("QUADCLASS_Y_MAX", "60")
    monkeypatch.setenv("QUADCLASS_N_MAX", "5")
    _, out, _ = run(capsys, "solve", "19", "--odd-only")
    summary = parse_jsonl(out)[-1]["summary"]
    assert summary["y_max"] == 60 and summary["exponents"] == [3, 5]
    assert summary["count"] == 2


def test_solve_csv(capsys):
    _, out, err = run(capsys, "solve", "4", "--n", "3", "--y-max", "100", "--format", "csv")
    assert out.splitlines() == ["x,y,n", "2,2,3", "11,5,3"]
    assert "summary" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "19", "--n", "1"],
        ["solve", "0"],
        ["solve", "abc"],
        ["check", "--criterion", "thm23", "--x", "1"],
        ["check", "--criterion", "thm23", "--x", "6", "--p", "2", "--n", "5"],
        ["check", "--criterion", "cor22", "--d", "5", "--n", "9"],
        ["sweep", "--suite", "thm21", "--n", "4"],
        ["sweep", "--suite", "nope"],
        ["sweep", "--suite", "thm21", "--d-min", "9", "--d-max", "3"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv, code, claim",
    [
        (["--criterion", "thm23", "--x", "1", "--p", "2", "--n", "3"], 1, False),
        (["--criterion", "thm21", "--d", "5", "--n", "3"], 0, True),
        (["--criterion", "thm23", "--x", "2", "--p", "3", "--n", "3"], 0, True),
    ],
)
def test_check_examples(capsys, argv, code, claim):
    rc, out, _ = run(capsys, "check", *argv)
    report = json.loads(out)
    assert rc == code
    assert report["hypotheses_hold"] is True
    assert report["claim_holds_empirically"] is claim


def test_check_cor24_and_cor22(capsys):
    rc, out, _ = run(capsys, "check", "--criterion", "cor24", "--x", "4", "--y", "5", "--n", "3")
    assert rc == 0 and json.loads(out)["verdict"] == "inconclusive"
    rc, out, _ = run(capsys, "check", "--criterion", "cor22", "--d", "53", "--n", "3", "--y-max", "100")
    assert rc == 0 and json.loads(out)["verdict"] == "agree"


def test_sweep_golden(capsys):
    rc, out, _ = run(capsys, "sweep", "--suite", "golden")
    rows = parse_jsonl(out)
    assert rc == 0
    assert rows[-1] == {"agree": 3, "counterexample": 0, "hypothesis_fail": 0, "inconclusive": 3}


def test_sweep_thm23_counterexample_exit(capsys):
    rc, out, _ = run(capsys, "sweep", "--suite", "thm23", "--p-max", "7", "--x-max", "10", "--n", "3")
    rows = parse_jsonl(out)
    assert rc == 1
    assert rows[-1]["counterexample"] >= 1
    assert all(list(r) == list(RECORD_FIELDS) for r in rows[:-1])


def test_sweep_thm21_no_counterexample(capsys):
    rc, out, _ = run(capsys, "sweep", "--suite", "thm21", "--d-max", "50", "--n", "3")
    assert rc == 0
    assert parse_jsonl(out)[-1]["counterexample"] == 0


def test_sweep_csv_header(capsys):
    rc, out, err = run(capsys, "sweep", "--suite", "thm23", "--p-max", "5", "--x-max", "4", "--n", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == list(RECORD_FIELDS)
    assert all(len(r) == len(RECORD_FIELDS) for r in rows)
    assert json.loads(err)["agree"] >= 1


def test_sweep_jobs_same_output(capsys):
    args = ["sweep", "--suite", "all", "--d-max", "40", "--n", "3", "--p-max", "5", "--x-max", "6"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--jobs", "2")
    assert a == b


def test_jsonl_roundtrip_big_integers():
    rows = [{"x": 22434, "y": 55, "n": 5}, {"v": 3**200, "neg": -(10**40), "flag": None}]
    buf = io.StringIO()
    write_rows(rows, buf)
    text = buf.getvalue()
    assert "e+" not in text and "E" not in text
    assert parse_jsonl(text) == rows
    assert dumps(10**30) == "1" + "0" * 30


def test_subprocess_byte_identical():
    cmd = [sys.executable, "-m", "quadclass", "sweep", "--suite", "golden"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout
