import json
import subprocess
import sys
from fractions import Fraction

import pytest

from monideal.cli import main, run


def test_decompose():
    out = run(["decompose", "--dim", "3", "(x1 x2, x2^>2 x3^>2)"])
    assert out.splitlines() == ["(x1, x2^>2)", "(x1, x3^>2)", "(x2)"]


def test_dimension_inferred():
    assert run(["mdim", "--dim", "2", "()"]) == "mdim = 2"
    assert run(["mdim", "(x1 x2^>1)"]) == "mdim = 1"
    assert run(["chain", "--dim", "3", "(x2^>1)"]).splitlines() == ["T0 = {2}", "T1 = {1,2}", "T2 = {1,2,3}"]


def test_dist():
    out = run(["dist", "--dim", "2", "--tol", "1/1000000", "(x2)", "(x1)"])
    lo, hi = out.removeprefix("dist in [").rstrip("]").split(", ")
    lo, hi = Fraction(lo), Fraction(hi)
    assert lo <= 1 <= hi and hi - lo <= Fraction(1, 10**6)
    data = json.loads(run(["dist", "--json", "(x1, x2)", "(x1^3/2, x1^1/2 x2)"]))
    assert Fraction(data["lo"]) <= Fraction(1, 2) <= Fraction(data["hi"])


def test_misc_commands():
    assert run(["member", "x1 x2^3/2", "(x1 x2^>1)"]) == "true"
    assert run(["eq", "(x1) + (x2)", "(x2, x1)"]) == "true"
    assert run(["sum", "(x1)", "(x2)"]) == "(x2, x1)"
    assert run(["intersect", "(x1)", "(x2)"]) == "(x1 x2)"
    assert run(["generators", "(x2^3, x1 x2)"]).splitlines() == ["x2^3", "x1 x2"]
    assert run(["irreducible", "(x1, x2^>1)"]) == "true"
    assert run(["prime", "(x2^>0)"]) == "T = {2}"
    assert run(["prime", "--mode", "Z", "(x1)"]) == "T = {1}"
    assert run(["radius", "(x1^3/2, x1^1/2 x2)"]) == "radius = 1/2"
    assert len(run(["covers", "(x1 x2, x2^>2 x3^>2)"]).splitlines()) == 3
    assert run(["covers", "--dot", "(x1 x2)"]).startswith("graph G {")
    assert run(["plot", "(x1 x2^>1)"]).startswith("<?xml")


def test_json_file_argument(tmp_path):
    path = tmp_path / "i.json"
    path.write_text(run(["normalize", "--json", "(x1 x2^>1)"]))
    assert run(["normalize", f"@{path}"]) == "(x1 x2^>1)"


def test_exit_codes(capsys):
    assert main(["normalize", "(x1"]) == 2
    assert main(["generators", "(x1^>1)"]) == 1
    assert main(["decompose", "--dim", "2", "()"]) == 1
    assert main(["mdim", "()"]) == 2
    assert main(["normalize", "(x1)"]) == 0
    assert "(x1)" in capsys.readouterr().out


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "monideal", "decompose", "(x1 x2, x2^>2 x3^>2)"]
    outs = {subprocess.run(cmd, capture_output=True, text=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


@pytest.mark.parametrize("argv", [["mdim", "--mode", "Z", "(x1^1/2)"], ["plot", "(x1 x3)"]])
def test_errors_do_not_crash(argv):
    assert main(argv) in (1, 2)
