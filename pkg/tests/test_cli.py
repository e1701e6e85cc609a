import io
import subprocess
import sys

import pytest

from hfsets.cli import main


def run(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv, expected", [
    (["show", "42", "--urelements", "0"], "{{{}},{{},{{}}},{{},{{{}}}}}\n"),
    (["show", "42", "-u", "3"], "{0,1,2,{1}}\n"),
    (["pair", "bitmerge", "60", "26"], "2008\n"),
    (["pair", "cantor", "3", "3"], "24\n"),
    (["pair", "kuratowski", "0", "1"], "10\n"),
    (["unpair", "bitmerge", "2008"], "60 26\n"),
    (["unpair", "cantor", "8"], "1 2\n"),
    (["bits", "42"], "11010\n"),
    (["bits", "0"], "\n"),
    (["unbits", "11010"], "42\n"),
    (["unbits", "1", "1010"], "42\n"),
    (["unbits"], "0\n"),
    (["set", "42"], "1 3 5\n"),
    (["unset", "3", "4", "6", "7", "8", "9", "10"], "2008\n"),
    (["hfs", "42", "-u", "3"], "S [U 0,U 1,U 2,S [U 1]]\n"),
    (["hypergraph", "2008"], "0 1\n2\n1 2\n0 1 2\n3\n0 3\n1 3\n"),
    (["hypergraph", "1"], "\n"),
    (["powset", "3"], "15\n"),
    (["ordinal", "4"], "2059\n"),
    (["choice", "16"], "16777216\n"),
    (["edges", "member", "42"], "".join(f"{a} {b}\n" for a, b in [
        (0, 1), (0, 3), (0, 5), (1, 2), (1, 3), (1, 42), (2, 5), (3, 42), (5, 42)])),
    (["dag", "1"], "0 1\n"),
    (["dual", "6"], "8\n"),
    (["self-duals", "0", "1000"],
     "".join(f"{n}\n" for n in [0, 1, 2, 3, 4, 5, 10, 11, 16, 17, 34, 35,
                                64, 65, 130, 131, 264, 265, 522, 523])),
    (["digraph", "255"], "0 0\n0 1\n1 0\n1 1\n2 0\n2 1\n3 0\n3 1\n"),
    (["enumerate", "bits", "--count", "4"], "\n0\n1\n00\n"),
    (["enumerate", "hfs", "-k", "3"], "S []\nS [S []]\nS [S [S []]]\n"),
    (["enumerate", "hfs", "-k", "2", "-u", "1"], "U 0\nS []\n"),
    (["enumerate", "hypergraphs", "-k", "4"], "[]\n[[]]\n[[0]]\n[[],[0]]\n"),
    (["enumerate", "digraphs", "-k", "3"], "[]\n[[0,0]]\n[[1,0]]\n"),
])
def test_commands(argv, expected):
    code, out, err = run(argv)
    assert (code, out, err) == (0, expected, "")


def test_deterministic():
    assert run(["dag", "2008", "--dot"]) == run(["dag", "2008", "--dot"])


def test_dot_output():
    code, out, _ = run(["dag", "42", "--dot"])
    assert code == 0
    assert out.startswith("digraph G {\n")
    assert '  0 [label="42"];' in out
    assert "  0 -> 1;" in out


@pytest.mark.parametrize("n", ["0", "42", "2008", "123456789"])
def test_dag_undag(n, monkeypatch):
    _, edges, _ = run(["dag", n])
    assert run(["undag"], edges, monkeypatch) == (0, n + "\n", "")


@pytest.mark.parametrize("n", ["0", "42", "2008", "16393"])
def test_ddag_undag_dual(n, monkeypatch):
    _, dual_edges, _ = run(["ddag", n])
    _, dual, _ = run(["dual", n])
    assert run(["undag", "--dual"], dual_edges, monkeypatch) == (0, dual, "")


def test_undag_cycle(monkeypatch):
    code, out, err = run(["undag"], "0 1\n1 2\n2 1\n", monkeypatch)
    assert code == 2 and out == ""
    assert "cycle" in err and len(err.splitlines()) == 1


def test_hypergraph_roundtrip(monkeypatch):
    for n in ["0", "1", "2008", "2009"]:
        _, text, _ = run(["hypergraph", n])
        assert run(["unhypergraph"], text, monkeypatch) == (0, n + "\n", "")


def test_digraph_roundtrip(monkeypatch):
    _, text, _ = run(["digraph", "2008"])
    assert run(["undigraph"], text, monkeypatch) == (0, "2008\n", "")


def test_big_numbers():
    n = str(3 ** 20000)
    code, out, _ = run(["unpair", "cantor", n])
    x, y = out.split()
    assert code == 0
    assert run(["pair", "cantor", x, y])[1] == n + "\n"


@pytest.mark.parametrize("argv, status", [
    (["frobnicate"], 1),
    ([], 1),
    (["bits", "-3"], 1),
    (["bits", "4x"], 1),
    (["pair", "cantor", "1"], 1),
    (["enumerate", "bits"], 1),
    (["unbits", "102"], 1),
    (["unset", "3", "1"], 2),
    (["choice", "3"], 2),
    (["ordinal", "6"], 3),
    (["powset", str(2 ** 31 - 1)], 3),
    (["pair", "kuratowski", "30", "0"], 3),
])
def test_error_status(argv, status):
    code, out, err = run(argv)
    assert code == status
    assert out == ""
    assert len(err.strip().splitlines()) == 1
    assert "Traceback" not in err


def test_malformed_number_names_argument():
    _, _, err = run(["pair", "cantor", "1", "y"])
    assert "Y" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "hfsets.cli", "pair", "bitmerge", "60", "26"],
                          capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "2008\n")
