import json
import os
import subprocess
import sys

import pytest

from zasym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def lines(out):
    return [json.loads(x) for x in out.strip().splitlines()]


def test_partitions_z_asym(capsys):
    code, out = run(capsys, "partitions", "--weight", "6", "--z-asym", "1")
    assert code == 0
    assert json.loads(out) == [[3, 1, 1, 1], [2, 2, 2]]


def test_partitions_plain(capsys):
    _, out = run(capsys, "partitions", "--weight", "6", "--max-length", "2")
    assert json.loads(out) == [[6], [5, 1], [4, 2], [3, 3]]


def test_tabloid_counts(capsys):
    assert run(capsys, "tabloids", "count", "--shape", "4,2,2,1", "--n", "4") == (0, "60480\n")
    assert run(capsys, "tabloids", "count", "--shape", "4,2,2,1", "--kind", "hook") == (0, "1680\n")


def test_tabloid_enum_and_gf(capsys):
    code, out = run(capsys, "tabloids", "enum", "--shape", "2,1", "--kind", "hook")
    assert code == 0 and len(lines(out)) == 3
    code, out = run(capsys, "tabloids", "gf", "--shape", "1", "--n", "2")
    assert json.loads(out) == [[1, "1"], [2, "1"]]


def test_frobenius_both_ways(capsys):
    _, out = run(capsys, "frobenius", "--shape", "4,2,2,1")
    assert json.loads(out) == {"alpha": [3, 0], "beta": [3, 1]}
    _, out = run(capsys, "frobenius", "--alpha", "3,0", "--beta", "3,1")
    assert json.loads(out) == [4, 2, 2, 1]


def test_stats(capsys):
    _, out = run(capsys, "stats", "--shape", "4,2,2,1")
    data = json.loads(out)
    assert data["k"] == 9 and data["content_sum"] == -1 and data["rank"] == 2
    assert [c["hook"] for c in data["cells"]] == [7, 5, 2, 1, 4, 2, 3, 1, 1]
    assert set(data["cells"][0]) == {"row", "col", "content", "hook", "arm", "leg"}


def test_content_seq_both_ways(capsys):
    _, out = run(capsys, "content-seq", "--shape", "4,2,2,1")
    data = json.loads(out)
    assert data["counts"] == [[-3, 1], [-2, 1], [-1, 2], [0, 2], [1, 1], [2, 1], [3, 1]]
    assert data["peak_at"] == 0
    _, out = run(capsys, "content-seq", "--seq", "1,1,2,2,1,1,1", "--origin", "3")
    assert json.loads(out) == [4, 2, 2, 1]


def test_bijection_apply_invert_verify(capsys):
    _, out = run(capsys, "bijection", "apply", "--shape", "5,3,1", "--rows", "2,0,1,3,-3/2,1,1/3", "--m", "1", "--n", "3")
    image = json.loads(out)
    assert image == {"shape": [4, 2, 2, 1], "kind": "content", "n": 4, "rows": [[1, 2, 4, -2], [3, 2], [3, 2], [4]]}
    _, out = run(capsys, "bijection", "invert", "--shape", "4,2,2,1", "--rows", "1,2,4,-2/3,2/3,2/4", "--m", "1", "--n", "4")
    assert json.loads(out)["rows"] == [[2, 0, 1, 3, -3], [2, 1, 1], [3]]
    code, out = run(capsys, "bijection", "verify", "--alpha", "3,0", "--beta", "2,0", "--m", "1", "--n", "3")
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass"
    assert {"claim", "status", "witness", "domain_size"} <= set(report)


def test_dim_and_schur(capsys):
    assert run(capsys, "dim", "--shape", "2,1", "--n", "3") == (0, "8\n")
    _, out = run(capsys, "schur", "eval", "--shape", "2,1", "--points", "1,2,3")
    assert json.loads(out) == {"bialternant": "60", "ssyt": 60}
    _, out = run(capsys, "schur", "specialize", "--shape", "2,1", "--n", "2")
    assert json.loads(out) == [[1, "1"], [2, "1"]]
    _, out = run(capsys, "schur", "stepped", "--shape", "2", "--start", "-1", "--count", "2")
    assert json.loads(out) == [[-2, "1"], [0, "1"], [2, "1"]]


def test_verify_single_and_sweep(capsys):
    code, out = run(capsys, "verify", "thm21", "--alpha", "1", "--beta", "0", "--m", "1", "--p", "2", "--q", "2")
    rows = lines(out)
    assert code == 0 and rows[0]["status"] == "pass" and rows[-1]["summary"]["failed"] == 0
    code, out = run(capsys, "verify", "lemma-k", "--max-weight", "10", "--max-m", "3")
    assert code == 0 and lines(out)[-1]["summary"]["total"] > 10


def test_verify_all_exit_zero(capsys):
    code, out = run(capsys, "verify", "all", "--max-weight", "8", "--max-m", "2", "--quiet")
    summary = json.loads(out)["summary"]
    assert code == 0 and summary["failed"] == 0 and summary["total"] > 1000


def test_verify_failure_exit_one(capsys):
    code, out = run(capsys, "verify", "littlewood1", "--n", "2", "--no-sign")
    assert code == 1
    assert lines(out)[0]["status"] == "fail"


def test_usage_errors_exit_two(capsys):
    assert main(["dim", "--shape", "2,3", "--n", "2"]) == 2
    assert main(["verify", "thm33", "--shape", "2,1", "--m", "1", "--n", "3"]) == 2
    assert main(["tabloids", "count", "--shape", "2,1"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["partitions"])
    assert exc.value.code == 2


def test_text_format(capsys):
    _, out = run(capsys, "--format", "text", "bijection", "apply", "--shape", "5,3,1",
                 "--rows", "2,0,1,3,-3/2,1,1/3", "--m", "1", "--n", "3")
    assert " 1  2  4 -2" in out and "norm 10 -> 19" in out


def test_byte_identical_runs(capsys):
    args = ["verify", "oracles", "--max-weight", "5", "--seed", "11"]
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second


def test_pure_numpy_flag_in_subprocess():
    env = dict(os.environ, ZASYM_PURE_NUMPY="1")
    out = subprocess.run(
        [sys.executable, "-m", "zasym", "backend"], env=env, capture_output=True, text=True, check=True
    ).stdout
    assert json.loads(out) == {"backend": "numpy"}
    out = subprocess.run(
        [sys.executable, "-m", "zasym", "tabloids", "enum", "--shape", "2,1", "--n", "2"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout
    assert len(out.strip().splitlines()) == 6
