import io
import json
import os
import subprocess
import sys

import pytest

from planecut.cli import ParseError, dumps, main, parse, run

DATA = os.path.join(os.path.dirname(__file__), "data")
REMARK0 = os.path.join(DATA, "remark0.ip")
CONE = os.path.join(DATA, "cone.ip")
FREE = os.path.join(DATA, "lattice_free.ip")


def stdin_run(argv, text):
    return run(argv + ["-"], io.StringIO(text))


# grammar ---------------------------------------------------------------------

def test_parse_remark():
    inst = parse("maximize 0 1\nsubject\n1 0 4\n-5 8 0\n")
    assert inst.objective == (0, 1)
    assert inst.rows == [(1, 0, 4), (-5, 8, 0)]


def test_parse_comments_and_whitespace():
    inst = parse("# header\n\n  maximize   0\t1  # objective\nsubject\n 1 0 4\n# row\n-5 8 0")
    assert inst.rows == [(1, 0, 4), (-5, 8, 0)]


def test_parse_without_objective():
    assert parse("subject\n1 0 4\n").objective is None


@pytest.mark.parametrize("text,line,col", [
    ("maximize 1\n", 1, 10),
    ("maximize 0 1\nsubject\n1 0\n", 3, 3),
    ("maximize 0 1\nsubject\n1 x 4\n", 3, 3),
    ("maximize 0 1\n1 0 4\n", 2, 1),
    ("maximize 0 1\nsubject\n", 2, 1),
    ("maximize 0 1\nsubject\n1 0 4\n0 0 1\n", 4, 1),
    ("maximize 0 1\nsubject extra\n1 0 4\n", 2, 9),
])
def test_parse_errors_have_location(text, line, col):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert (e.value.line, e.value.col) == (line, col)


# commands --------------------------------------------------------------------

def test_solve_remark():
    out, code = run(["solve", REMARK0])
    assert code == 0
    assert out["status"] == "optimal" and out["point"] == [4, 2] and out["value"] == 2
    assert out["cuts"] == 2 and out["schema"] == 1


def test_solve_trace_and_check():
    out, code = run(["solve", REMARK0, "--trace", "--check"])
    assert code == 0 and out["oracle"] == "match"
    cuts = [r["cut"] for r in out["trace"] if r["cut"] is not None]
    assert cuts == [[-3, 5, 0], [-1, 2, 0]]


def test_solve_exit_codes():
    assert run(["solve", FREE])[1] == 2
    assert run(["solve", FREE])[0]["status"] == "infeasible"
    out, code = stdin_run(["solve"], "maximize 1 1\nsubject\n-1 0 0\n0 -1 0\n")
    assert code == 3 and out["status"] == "unbounded"
    out, code = stdin_run(["solve"], "maximize 1 0\nsubject\n2 0 1\n-2 0 0\n")
    assert code == 3 and out["status"] == "not-pointed"
    out, code = stdin_run(["solve"], "maximize 1\n")
    assert code == 4 and out["status"] == "parse-error" and out["line"] == 1
    out, code = run(["solve", os.path.join(DATA, "missing.ip")])
    assert code == 4
    out, code = stdin_run(["solve"], "subject\n1 0 4\n")
    assert code == 4


def test_hull_command():
    out, code = run(["hull", REMARK0, "--check"])
    assert code == 0 and out["oracle"] == "match"
    assert [4, 2] in out["hull"]["vertices"]
    assert run(["hull", FREE])[1] == 2


def test_closure_commands():
    out, code = run(["split-closure", CONE, "--check", "--norm-bound", "20"])
    assert code == 0 and out["status"] == "ok" and out["oracle"] == "match"
    assert out["norm_bound"] == 20
    out, code = run(["chvatal", REMARK0, "--check"])
    assert code == 0 and out["oracle"] == "match" and out["certified"]
    assert sorted(out["rows"]) == sorted([[-5, 8, 0], [-3, 5, 0], [0, 1, 2], [1, 0, 4]])
    out, code = run(["split-closure", FREE])
    assert code == 2 and out["status"] == "infeasible"


def test_rank_command():
    out, code = run(["rank", REMARK0])
    assert code == 0 and out["rank"] == 2 and out["status"] == "ok"


def test_divergence_command():
    out, code = run(["divergence", "--steps", "5"])
    assert code == 0 and out == {"status": "reproduced", "steps": 5, "schema": 1}
    out, _ = run(["divergence", "--steps", "2", "--trace"])
    assert out["cuts"] == [[-7, 12, 0], [-11, 20, 0]]


def test_svg_written(tmp_path):
    for cmd in ("solve", "hull", "chvatal", "split-closure"):
        path = tmp_path / f"{cmd}.svg"
        out, code = run([cmd, REMARK0, "--svg", str(path)])
        assert code == 0
        text = path.read_text()
        assert text.startswith("<svg") and text.rstrip().endswith("</svg>")


def test_svg_does_not_change_result(tmp_path):
    a, _ = run(["solve", REMARK0, "--trace"])
    b, _ = run(["solve", REMARK0, "--trace", "--svg", str(tmp_path / "x.svg")])
    assert dumps(a) == dumps(b)


def test_main_prints_sorted_json(capsys):
    code = main(["solve", REMARK0])
    line = capsys.readouterr().out.strip()
    assert code == 0
    assert line == '{"cuts":2,"iterations":3,"point":[4,2],"schema":1,"status":"optimal","value":2}'
    assert json.loads(line)["point"] == [4, 2]


def test_console_entry_is_byte_stable():
    cmd = [sys.executable, "-m", "planecut.cli", "solve", REMARK0, "--trace"]
    outs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1] and outs[0].endswith(b"\n")
