import io
import subprocess
import sys

import pytest

from conftest import golden
from unsharp.cli import main
from unsharp.render import parse_grid


def run(argv, stdin=""):
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def example(name):
    code, text = run(["example", name])
    assert code == 0
    return text


def test_check_examples():
    for name in ("ex1", "ex2"):
        code, text = run(["check"], example(name))
        assert code == 0 and "effect check: pass" in text


def test_check_failure_exit_code():
    text = example("ex1").replace("  a - e f", "  a - e e", 1)
    code, out = run(["check"], text)
    assert code == 1 and "[E" in out


def test_parse_error_exit_code(capsys):
    code, _ = run(["check"], "kind effect\nelements 0 1\nplus:\n 0 1\n 1 zz\n")
    assert code == 2
    assert "line 5" in capsys.readouterr().err


def test_missing_file_exit_code():
    assert run(["check", "/nonexistent/file"])[0] == 2


def test_convert_pipeline_reproduces_tables():
    code, curp = run(["convert", "--to", "curp"], example("ex1"))
    assert code == 1                     # adjointness post-check fails, output still written
    code, tables = run(["tables"], curp)
    assert code == 0
    blocks = tables.split("\n\n")
    for block, name in zip(blocks, ("ex1_odot.txt", "ex1_arrow.txt")):
        assert parse_grid(block)[2] == parse_grid(golden(name))[2]


def test_convert_back_and_forth():
    code, curp = run(["convert", "--to", "curp", "--no-check"], example("ex1"))
    assert code == 0
    code, back = run(["convert", "--to", "effect"], curp)
    assert code == 1 and back == example("ex1")   # input fails adjointness
    code, pea = run(["convert", "--to", "pea"], example("ex1"))
    assert code == 0 and "lcomp:" in pea
    code, urp = run(["convert", "--to", "urp", "--no-check"], pea)
    assert code == 0 and "squiggle:" in urp
    assert run(["roundtrip"], urp) == (1, "EQUAL\n")  # input fails adjointness


def test_non_commutative_pipeline():
    from test_pseudo import three_cycle
    from unsharp.fileformat import render
    pea = render(three_cycle())
    code, urp = run(["convert", "--to", "urp"], pea)
    assert code == 0
    assert run(["roundtrip"], urp) == (0, "EQUAL\n")
    code, back = run(["convert", "--to", "pea"], urp)
    assert code == 0 and back == pea
    assert run(["convert", "--to", "urp"], example("ex1"))[0] == 2


@pytest.mark.parametrize("name", ["ex1", "ex2"])
def test_roundtrip_prints_equal(name):
    assert run(["roundtrip"], example(name)) == (0, "EQUAL\n")
    _, pea = run(["convert", "--to", "pea"], example(name))
    assert run(["roundtrip"], pea) == (0, "EQUAL\n")


def test_roundtrip_diff():
    _, curp = run(["convert", "--to", "curp", "--no-check"], example("ex1"))
    broken = curp.replace("{0,a,b,c,d,e,f,g,1}", "{0,a,b,c,d,e,f,g}")
    code, out = run(["roundtrip"], broken)
    assert code == 1 and out.startswith("DIFFERENT arrow[1,1]: {0,a,b,c,d,e,f,g} != {0,a,b,c,d,e,f,g,1}")


def test_monotonicity_flags():
    code, out = run(["check", "--monotonous"], example("ex1"))
    assert code == 1 and "x=a, A={b,c}, B={0}" in out
    code, out = run(["check", "--monotonous", "--mode", "sampled", "--trials", "100000",
                     "--seed", "7"], example("ex2"))
    assert code == 1 and "hypothesis_hits" in out


def test_threshold_exit_code():
    code, _ = run(["check", "--monotonous"], example("ex2"))
    assert code == 3


def test_enumerate_tsv():
    code, out = run(["enumerate", "--order", "5", "--kind", "pea", "--predicate", "commutative"])
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0] == ["order", "kind", "commutative", "count", "total", "complete"]
    assert {tuple(r[2:4]) for r in rows[1:]} == {("1", "4"), ("0", "1")}


def test_enumerate_budget_exit_code():
    code, out = run(["enumerate", "--order", "6", "--node-budget", "10"])
    assert code == 3 and "false" in out
    assert run(["enumerate", "--order", "10"])[0] == 2


def test_hasse():
    code, out = run(["hasse"], example("ex1"))
    assert code == 0 and out.startswith("digraph hasse {") and '"0" -> "a";' in out
    edges = {line.strip() for line in out.splitlines() if "->" in line}
    covers = ["0 a", "0 b", "0 c", "a e", "a f", "b d", "b e", "b g", "c f", "c g", "d f",
              "e 1", "f 1", "g 1"]
    assert edges == {'"%s" -> "%s";' % tuple(c.split()) for c in covers}


def test_console_script_pipeline():
    ex = subprocess.run([sys.executable, "-m", "unsharp.cli", "example", "ex1"],
                        capture_output=True, text=True, check=True).stdout
    rt = subprocess.run([sys.executable, "-m", "unsharp.cli", "roundtrip"], input=ex,
                        capture_output=True, text=True)
    assert rt.returncode == 0 and rt.stdout == "EQUAL\n"
