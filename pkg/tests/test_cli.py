import json
import subprocess
import sys

import pytest

from opturan.cli import main
from opturan.graph import cycle_graph, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    (["--family", "cycle", "--k", "4", "--n", "6"], "7 (lambda=3)"),
    (["--family", "path", "--k", "3", "--n", "10"], "5"),
    (["--family", "path", "--k", "7", "--n", "14"], "20 (regime=connected)"),
    (["--family", "cycle", "--k", "5", "--n", "3"], "3 (boundary)"),
])
def test_value(capsys, argv, expected):
    code, out, _ = run(capsys, "value", *argv)
    assert code == 0 and out.splitlines()[0] == expected


def test_value_details(capsys):
    code, out, _ = run(capsys, "value", "--family", "path", "--k", "7", "--n", "14", "--details")
    assert "ex_bounded=19" in out.splitlines() and "regime=ConnectedWins" in out.splitlines()


def test_value_domain_error(capsys):
    code, out, err = run(capsys, "value", "--family", "cycle", "--k", "2", "--n", "5")
    assert code == 2 and out == "" and "error" in err


def test_table_cycle(capsys):
    code, out, _ = run(capsys, "table", "--family", "cycle", "--k", "3", "--n-range", "3..5")
    lines = out.splitlines()
    assert lines[0] == "n,k,family,value,param1,param2"
    assert [row.split(",")[3] for row in lines[1:]] == ["2", "4", "5"]


def test_table_path_regimes(capsys):
    code, out, _ = run(capsys, "table", "--family", "path", "--k", "7", "--n-range", "12..14")
    rows = [r.split(",") for r in out.splitlines()[1:]]
    assert [r[3] for r in rows] == ["18", "18", "20"]
    assert [r[4] for r in rows] == ["BoundedWins", "Tie", "ConnectedWins"]


def test_table_empty_and_bad_range(capsys):
    code, out, _ = run(capsys, "table", "--family", "cycle", "--k", "4", "--n-range", "9..5")
    assert code == 0 and out == "n,k,family,value,param1,param2\n"
    code, _, _ = run(capsys, "table", "--family", "cycle", "--k", "4", "--n-range", "x")
    assert code == 2


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--family", "cycle", "--k", "4", "--n", "6", "--format", "graph6")
    g6, sidecar = out.splitlines()
    data = json.loads(sidecar)
    assert code == 0 and data["graph6"] == g6 and data["size"] == 7
    assert all(data["checks"].values()) and len(data["checks"]) == 3
    side = tmp_path / "cert.json"
    code, out, _ = run(capsys, "construct", "--family", "path", "--k", "7", "--n", "14", "--sidecar", str(side))
    assert code == 0 and len(out.splitlines()) == 1
    assert json.loads(side.read_text())["status"] == "VALID"


def test_construct_is_deterministic(capsys):
    outs = {run(capsys, "construct", "--family", "path", "--k", "6", "--n", "40", "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_check(capsys, tmp_path):
    c4 = to_graph6(cycle_graph(4))
    code, out, _ = run(capsys, "check", "--forbid", "C4", "--input", c4)
    assert code == 1 and out == "contains C4\n"
    code, out, _ = run(capsys, "check", "--forbid", "C5", "--input", c4)
    assert code == 0 and out == "C5-free\n"
    f = tmp_path / "g.g6"
    f.write_text(c4 + "\n")
    code, out, _ = run(capsys, "check", "--forbid", "P5", "--input", str(f))
    assert code == 0 and out == "P5-free\n"
    code, _, _ = run(capsys, "check", "--forbid", "X4", "--input", c4)
    assert code == 2


def test_decompose_componentwise(capsys):
    # C5 plus a disjoint triangle
    from opturan.graph import Graph
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 6), (6, 7), (5, 7)])
    code, out, _ = run(capsys, "decompose", "--k", "4", "--input", to_graph6(g))
    lines = out.splitlines()
    assert code == 0 and len(lines) == 6
    assert lines[-1].endswith("5-6 5-7 6-7") and "order=3 size=3" in lines[-1]


def test_verify_cycle(capsys):
    code, out, _ = run(capsys, "verify", "--family", "cycle", "--n-max", "6")
    assert code == 0 and out.startswith("PASS 3≤k≤n≤6")
    code, _, _ = run(capsys, "verify", "--n-max", "9")
    assert code == 2


def test_console_script_stdin():
    c4 = to_graph6(cycle_graph(4))
    proc = subprocess.run([sys.executable, "-m", "opturan.cli", "check", "--forbid", "C4", "--input", "-"],
                          input=c4 + "\n", capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == "contains C4\n"
