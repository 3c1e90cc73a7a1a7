import json
import subprocess
import sys

import pytest

from misx.cli import load_graph, main
from misx.generators import complete, star, triangles_plus_isolated
from misx.graph6 import parse_graph6, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_triangle(capsys):
    code, out, _ = run(capsys, "analyze", "Bw", "--json", "-")
    d = json.loads(out)
    assert code == 0
    inv = d["invariants"]
    assert (inv["m"], inv["beta"], inv["nu"], inv["nu0"]) == (3, 2, 1, 1)
    cover = next(v for v in d["verdicts"] if v["theorem"] == "COVER_BOUND")
    assert cover["holds"] and not cover["extremal"]


def test_analyze_figure1(capsys, fig1_path):
    code, out, _ = run(capsys, "analyze", str(fig1_path), "--json", "-")
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1 and d["kind"] == "analysis"
    assert d["invariants"]["m"] == 4
    cover = next(v for v in d["verdicts"] if v["theorem"] == "COVER_BOUND")
    assert cover["extremal"] and cover["consistent"]
    assert d["cameron_walker"]["cw_bipartite"] is True


def test_analyze_null_graph(capsys):
    code, out, _ = run(capsys, "analyze", "?", "--json", "-")
    inv = json.loads(out)["invariants"]
    assert code == 0
    assert inv["m"] == 1 and inv["alpha"] == inv["beta"] == inv["nu"] == inv["nu0"] == 0


def test_analyze_human_mentions_every_tag(capsys):
    code, out, _ = run(capsys, "analyze", "Bw")
    assert code == 0
    for tag in ("COVER_BOUND", "MATCHING_BOUND", "INDUCED_LOWER", "KE_COROLLARY", "BRANCH_RECURRENCE"):
        assert tag in out


def test_analyze_json_file_and_text(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "analyze", "Bw", "--json", str(dest))
    assert code == 0 and "m=3" in out
    assert json.loads(dest.read_text())["input"]["graph6"] == "Bw"


def test_analyze_bad_input(capsys):
    code, _, err = run(capsys, "analyze", "B!x")
    assert code == 2 and "input error" in err


def test_analyze_budget_exceeded(capsys):
    code, _, err = run(capsys, "analyze", "Bw", "--budget", "1")
    assert code == 3 and "budget" in err


def test_size_warning(capsys, caplog):
    code, _, _ = run(capsys, "analyze", "Bw", "--warn-n", "2")
    assert code == 0 and "exceeds" in caplog.text


def test_edge_list_autodetect(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("3\n0 1\n1 2\n0 2\n")
    assert load_graph(str(f)) == complete(3)
    f.write_text("Bw\n")
    assert load_graph(str(f)) == complete(3)
    assert load_graph("0 1\n1 2\n2 0\n", "edgelist") == complete(3)
    assert load_graph(str(f), "graph6") == complete(3)


def test_sweep_all_labeled_5(capsys):
    code, out, _ = run(capsys, "sweep", "--all-labeled", "5", "--theorems", "all")
    assert code == 0
    assert "graphs processed: 1024" in out


def test_sweep_json_stdout(capsys):
    code, out, err = run(capsys, "sweep", "--all-labeled", "3", "--json", "-")
    d = json.loads(out)
    assert code == 0 and d["processed"] == 8 and "graphs processed" in err


def test_sweep_malformed_line(capsys, tmp_path):
    f = tmp_path / "catalog.g6"
    f.write_text("Bw\nB!\n@\n")
    code, out, _ = run(capsys, "sweep", "--graph6-file", str(f), "--json", str(tmp_path / "r.json"))
    assert code == 0
    assert "line 2" in out
    d = json.loads((tmp_path / "r.json").read_text())
    assert d["processed"] == 2 and d["parse_errors"][0]["where"] == "line 2"


def test_sweep_family_census(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, _, _ = run(capsys, "sweep", "--family", "triangles:s=3,t=2", "--theorems", "MATCHING_BOUND", "--json", str(dest))
    d = json.loads(dest.read_text())
    assert code == 0
    assert d["census"]["MATCHING_BOUND"]["count"] == 1
    assert parse_graph6(d["census"]["MATCHING_BOUND"]["graph6"][0]).n == 11


@pytest.mark.parametrize(
    "argv",
    [["sweep"], ["sweep", "--all-labeled", "3", "--family", "star:m=1"], ["sweep", "--all-labeled", "3", "--jobs", "0"]],
)
def test_sweep_bad_flags(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_sweep_bad_values(capsys):
    assert run(capsys, "sweep", "--all-labeled", "9")[0] == 2
    assert run(capsys, "sweep", "--all-labeled", "3", "--theorems", "FOO")[0] == 2
    assert run(capsys, "sweep", "--graph6-file", "/nonexistent.g6")[0] == 2
    assert run(capsys, "sweep", "--family", "nope:x=1")[0] == 2


def test_sweep_counterexample_exit_code(capsys, monkeypatch):
    from misx import verify
    from misx.verify import BoundVerdict

    def fake(g, theorems, cross_check):
        return {t: [BoundVerdict(t, {}, 0, holds=False, extremal=False)] for t in theorems}, None

    monkeypatch.setattr(verify, "evaluate", fake)
    code, out, _ = run(capsys, "sweep", "--all-labeled", "2", "--theorems", "COVER_BOUND")
    assert code == 4 and "counterexamples: 2" in out


def test_generate(capsys, tmp_path):
    assert run(capsys, "generate", "star:m=4")[1] == to_graph6(star(4)).decode() + "\n"
    assert run(capsys, "generate", "triangles:s=1,t=0")[1] == "Bw\n"
    a = run(capsys, "generate", "cw-bipartite:a=2,b=2,leaves=2,seed=1")[1]
    b = run(capsys, "generate", "cw-bipartite:a=2,b=2,leaves=2,seed=1")[1]
    assert a == b and parse_graph6(a.strip()).n == 8
    assert run(capsys, "generate", "cw-bipartite:a=2,b=2,leaves=2", "--seed", "1")[1] == a
    out = tmp_path / "fam.g6"
    assert run(capsys, "generate", "triangles:s=0..2", "--out", str(out))[0] == 0
    assert out.read_text().splitlines() == ["?", "Bw", to_graph6(triangles_plus_isolated(2, 0)).decode()]
    assert run(capsys, "generate", "star:m=x")[0] == 2


def test_enumerate_triangle(capsys):
    code, out, _ = run(capsys, "enumerate", "Bw")
    assert code == 0 and out.splitlines() == ["0", "1", "2"]


def test_enumerate_figure1(capsys, fig1_path):
    code, out, _ = run(capsys, "enumerate", str(fig1_path))
    sets = sorted(tuple(int(x) for x in line.split()) for line in out.splitlines())
    assert sets == [(0, 1, 4, 5, 6, 7), (2, 3), (2, 4, 5), (3, 6, 7)]


def test_enumerate_null_graph(capsys):
    assert run(capsys, "enumerate", "?")[1] == "()\n"


def test_enumerate_limit(capsys):
    code, out, err = run(capsys, "enumerate", "Bw", "--limit", "2")
    assert code == 3 and out.splitlines() == ["0", "1"]
    assert run(capsys, "enumerate", "Bw", "--limit", "3")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "misx", "analyze", "Bw"], capture_output=True, text=True)
    assert proc.returncode == 0 and "m=3" in proc.stdout
