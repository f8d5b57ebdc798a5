import subprocess
import sys

import pytest

from wiremonoids.cli import main
from wiremonoids.rees import brandt_b21


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_zimin(capsys):
    assert run(capsys, "zimin", "3") == (0, "x1 x2 x1 x3 x1 x2 x1\n", "")


def test_mul_golden(capsys):
    h = "W3:1-2,1'-2',3-3';0"
    code, out, _ = run(capsys, "mul", h, h)
    assert (code, out) == (0, "W3:1-2,1'-2',3-3';1\n")


def test_star_rotate(capsys):
    assert run(capsys, "rotate", "W3:1-2,1'-2',3-3';0")[1] == "W3:1-1',2-3,2'-3';0\n"
    assert run(capsys, "star", "W2:1-2',2-1';3")[1] == "W2:1-2',1'-2;3\n"


def test_planar_exit_codes(capsys):
    assert run(capsys, "planar", "W2:1-2,1'-2';0")[0] == 0
    assert run(capsys, "planar", "W2:1-2',2-1';0")[0] == 1


def test_parse_error_is_usage(capsys):
    code, _, err = run(capsys, "star", "W2:1-1',2-3';0")
    assert code == 2 and "column 11" in err


def test_degree_mismatch(capsys):
    code, _, err = run(capsys, "mul", "W2:1-1',2-2';0", "W3:1-1',2-2',3-3';0")
    assert code == 2 and "2 vs 3" in err


def test_bad_usage(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "eval", "x1", "using", "x1=c", "in", "k3")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "jones", "3")
    assert code == 0 and out.strip().splitlines()[-1] == "# 5 jones matchings of degree 3"
    code, out, _ = run(capsys, "enumerate", "brauer", "3")
    assert len(out.strip().splitlines()) == 16


def test_eval(capsys):
    assert run(capsys, "eval", "x1 x2", "with", "x1=h1 x2=h2", "in", "k3")[1] == "W3:1-2,1'-3,2'-3';0\n"
    assert run(capsys, "eval", "x1 x2 x1", "with", "x1=c x2=1", "in", "k4")[1] == "W4:1-1',2-2',3-3',4-4';2\n"
    assert run(capsys, "eval", "x1*", "with", "x1=h1", "in", "k3", "--involution", "rotate")[1] == "W3:1-1',2-3,2'-3';0\n"
    assert run(capsys, "eval", "x1 x2*", "with", "x1=a x2=b", "in", "b21")[1] == "ab\n"
    assert run(capsys, "eval", "x1 x1", "with", "x1=e", "in", "tsl")[1] == "e\n"
    assert run(capsys, "eval", "x1 x2", "with", "x1=(1,1) x2=(2,2)", "in", "a2")[0] == 0
    code, _, err = run(capsys, "eval", "x1", "with", "x1=zz", "in", "b21")
    assert code == 2 and "unknown element" in err


def test_table_files(capsys, tmp_path):
    path = tmp_path / "b21.txt"
    path.write_text(brandt_b21().to_text())
    assert run(capsys, "check-identity", "x1 x2 x1 x2 x1 = x1 x2 x1", "in", str(path))[0] == 1
    assert run(capsys, "check-identity", "x1 x1 x1 = x1 x1", "in", str(path))[0] == 0
    code, out, _ = run(capsys, "eval", "x1 x2", "with", "x1=1 x2=2", "in", "table", str(path))
    assert (code, out) == (0, "3\n")
    code, out, _ = run(capsys, "export", "b21")
    path.write_text(out)
    assert run(capsys, "isoterm", "x1 x2 x1", "in", str(path), "maxlen", "5")[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 0\n0 z\n")
    code, _, err = run(capsys, "check-identity", "x1 = x1", "in", str(bad))
    assert code == 2 and "line 3" in err


def test_check_identity_counterexample(capsys):
    code, out, _ = run(capsys, "check-identity", "x1 x2 = x2 x1", "in", "b21")
    assert code == 1 and "counterexample: x1=a, x2=b" in out


def test_refute(capsys):
    code, out, _ = run(capsys, "refute", "x1 x2 = x2 x1", "in", "k3", "depth", "1")
    assert code == 1 and out == "refuted: x1=W3:1-2,1'-2',3-3';0, x2=W3:1-1',2-3,2'-3';0\n"
    assert run(capsys, "refute", "x1 = x1", "in", "k3", "depth", "2")[0] == 0


def test_isoterm(capsys):
    assert run(capsys, "isoterm", "x1 x2 x1", "in", "b21", "maxlen", "6")[0] == 0
    code, out, _ = run(capsys, "isoterm", "x1 x1", "in", "tsl", "maxlen", "3")
    assert code == 1 and "x1 x1 x1" in out.splitlines()


def test_rees_classify(capsys):
    assert run(capsys, "rees", "classify", "e,e;e,(0|1)", "over", "Z")[1] == "form 3 rows 1,2 cols 1,2\n"
    assert run(capsys, "rees", "classify", "0,(1);(2),0", "over", "Z4")[1] == "form 2 rows 1,2 cols 1,2\n"
    assert run(capsys, "rees", "classify", "e,e;e,e", "over", "Z")[0] == 1
    assert run(capsys, "rees", "classify", "e,q", "over", "Z")[0] == 2


def test_render(capsys):
    code, out, _ = run(capsys, "render", "W2:1-1',2-2';0")
    assert code == 0 and out.splitlines()[-1] == "circles: 0"
    code, out, _ = run(capsys, "render", "W2:1-1',2-2';1", "--format", "svg")
    assert out.startswith("<svg")


def test_verify_k3_quotient(capsys):
    code, out, _ = run(capsys, "verify", "k3-quotient")
    assert code == 0
    assert out.splitlines()[0] == "PASS k3-quotient"
    assert "h1h2 -> ab" in out
    assert "RESULT name=k3-quotient status=PASS" in out


def test_verify_unknown(capsys):
    assert run(capsys, "verify", "nope")[0] == 2


def test_verify_jobs(capsys):
    code, out, _ = run(capsys, "verify", "all", "--jobs", "4")
    # the rotation clause of the quotient criterion does not hold
    assert code == 1
    assert "FAIL k3-rotation" in out
    assert out.count("RESULT name=") == 14


@pytest.mark.parametrize("argv", [["-m", "wiremonoids", "zimin", "2"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, *argv], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "x1 x2 x1\n"
