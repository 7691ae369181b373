import json
import subprocess
import sys
from pathlib import Path

import pytest

from biratcheck.cli import main
from biratcheck.fixtures import FIXTURES, INVERSES, problem_text
from biratcheck.problem import ProblemError, format_problem, parse_problem
from biratcheck.ratmap import COND_I_VERIFIED
from biratcheck.report import parse_report

PROBLEMS = Path(__file__).resolve().parents[1] / "problems"


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_check_birational_cremona(capsys):
    code, out, err = run_cli(capsys, "check-birational", PROBLEMS / "plane_cremona.txt")
    assert code == 0 and not err
    rep = json.loads(out)
    assert rep["verdict"] == "birational"
    assert rep["inverse"] == ["Y1*Y2", "Y0*Y2", "Y0*Y1"]
    assert rep["warnings"] == []
    assert list(rep)[:3] == ["command", "input", "verdict"]


def test_json_and_text_inputs_agree(capsys):
    _, a, _ = run_cli(capsys, "jdrank", PROBLEMS / "plane_cremona.txt")
    _, b, _ = run_cli(capsys, "jdrank", PROBLEMS / "plane_cremona.json")
    ra, rb = json.loads(a), json.loads(b)
    ra.pop("input"), rb.pop("input")
    assert ra == rb


def test_image_segre(capsys):
    code, out, _ = run_cli(capsys, "image", PROBLEMS / "segre.txt")
    assert code == 0
    assert json.loads(out)["image"] == {"generators": ["Y1*Y2 - Y0*Y3"], "dim": 3}


def test_jdrank_quartic(capsys):
    _, out, _ = run_cli(capsys, "jdrank", PROBLEMS / "p3_quartic.txt")
    assert json.loads(out)["jdrank"] == 3


def test_output_is_deterministic(capsys):
    outs = {run_cli(capsys, "check-birational", PROBLEMS / "segre.txt")[1] for _ in range(3)}
    assert len(outs) == 1


def test_text_format_round_trips(capsys):
    _, j, _ = run_cli(capsys, "check-birational", PROBLEMS / "plane_cremona.txt")
    _, t, _ = run_cli(capsys, "check-birational", PROBLEMS / "plane_cremona.txt", "--format", "text")
    assert parse_report(t, "text") == json.loads(j)


def test_timings_only_on_request(capsys):
    _, out, _ = run_cli(capsys, "jdrank", PROBLEMS / "identity_p2.txt", "--timings")
    assert "timings" in json.loads(out)
    _, out, _ = run_cli(capsys, "jdrank", PROBLEMS / "identity_p2.txt")
    assert "timings" not in json.loads(out)


def test_strict_indeterminate_exit_3(capsys):
    code, out, err = run_cli(capsys, "check-birational", PROBLEMS / "skew_lines_mixed.txt", "--strict")
    assert code == 3 and out == "" and "indeterminate" in err
    code, out, _ = run_cli(capsys, "check-birational", PROBLEMS / "skew_lines_mixed.txt")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "indeterminate" and rep["naive_rank"] == 3


def test_parse_error_exit_2_with_position(capsys, tmp_path):
    p = write(tmp_path, "bad.txt", "variables: X0, X1\n[map]\nX0\nX1 +* X0\n")
    code, out, err = run_cli(capsys, "jdrank", p)
    assert code == 2 and out == ""
    assert f"{p}:4:5:" in err


@pytest.mark.parametrize("text", [
    "variables: X0, X1\n[map]\nX0^2\nX1\n",           # degree mismatch
    "variables: X0, X0\n[map]\nX0\n",                  # duplicate names
    "variables: Y0, Y1\n[map]\nY0\nY1\n",              # clash with target names
    "characteristic: 4\nvariables: X0\n[map]\nX0\n",   # not a prime
    "variables: X0\n[maps]\nX0\n",                     # unknown section
    "variables: X0, X1\n[map]\n",                      # empty map
])
def test_validation_errors_exit_2(capsys, tmp_path, text):
    code, out, err = run_cli(capsys, "image", write(tmp_path, "p.txt", text))
    assert code == 2 and out == "" and err.startswith("biratcheck: error:")


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "image", tmp_path / "nope.txt")
    assert code == 2


def test_field_override(capsys):
    _, out, _ = run_cli(capsys, "jdrank", PROBLEMS / "plane_cremona.txt", "--field", "2")
    rep = json.loads(out)
    assert rep["input"]["characteristic"] == 2 and rep["jdrank"] == 2
    code, _, _ = run_cli(capsys, "jdrank", PROBLEMS / "plane_cremona.txt", "--field", "9")
    assert code == 2


def test_compose_and_verify(capsys):
    f, g = PROBLEMS / "plane_cremona.txt", PROBLEMS / "plane_cremona_inverse.txt"
    _, out, _ = run_cli(capsys, "compose", f, g)
    rep = json.loads(out)
    assert rep["composite"] == ["X0^2*X1*X2", "X0*X1^2*X2", "X0*X1*X2^2"] and rep["degree"] == 4
    _, out, _ = run_cli(capsys, "verify-inverse", f, g)
    assert json.loads(out)["verified"] is True


def test_restrict_and_primes_file(capsys, tmp_path):
    _, out, _ = run_cli(capsys, "restrict", PROBLEMS / "two_lines.txt")
    rows = json.loads(out)["restrictions"]
    assert [r["forms"] for r in rows] == [["X1", "X2"], ["X0", "X2"]]
    primes = write(tmp_path, "primes.txt", "[prime]\nX0\n[prime]\nX1\n")
    bare = write(tmp_path, "two.txt", "variables: X0, X1, X2\n[ideal]\nX0*X1\n[map]\nX0 + X1\nX2\n")
    _, out, _ = run_cli(capsys, "check-birational", bare, "--primes", primes)
    assert json.loads(out)["condition_i"] == COND_I_VERIFIED


def test_linear_rank_and_sgd_commands(capsys):
    _, out, _ = run_cli(capsys, "linear-rank", PROBLEMS / "p5_cubic.txt")
    assert json.loads(out)["linear_rank"]["fires"] is True
    _, out, _ = run_cli(capsys, "sgd", PROBLEMS / "plane_cremona.txt")
    assert json.loads(out)["sgd"]["sgd"] == 1


def test_problem_format_round_trip():
    for name, prob in list(FIXTURES.items()) + list(INVERSES.items()):
        back = parse_problem(format_problem(prob))
        assert back.echo() == prob.echo()
    assert parse_problem(problem_text("segre")).map == FIXTURES["segre"].map


def test_json_problem_errors():
    with pytest.raises(ProblemError):
        parse_problem('{"source_vars": ["X0"], "map": ["X0"], "extra": 1}')
    with pytest.raises(ProblemError):
        parse_problem('{"source_vars": ["X0"], "map": []}')


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "biratcheck.cli", "jdrank",
                          str(PROBLEMS / "identity_p1.txt")], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["jdrank"] == 1
