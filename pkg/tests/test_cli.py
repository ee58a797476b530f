from __future__ import annotations

import csv
import json

from semistrong import families
from semistrong.cli import cli
from semistrong.formats import emit_edge_list, emit_graph6, emit_result
from semistrong.solver import solve


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io as _io
        import sys as _sys

        monkeypatch.setattr(_sys, "stdin", _io.StringIO(stdin))
    code = cli(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_pipe_color(capsys, monkeypatch):
    code, out, _ = run(capsys, ["gen", "--family", "cycle", "--n", "7"])
    assert code == 0
    code, out, _ = run(capsys, ["color", "--mode", "semistrong"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    doc = json.loads(out)
    assert doc["colors_used"] == 4
    assert doc["valid"] is True


def test_color_from_file(tmp_path, capsys):
    g = families.prism(5)
    path = tmp_path / "prism5.txt"
    path.write_text(emit_edge_list(g))
    out_path = tmp_path / "out.json"
    code, _, _ = run(capsys, ["color", "--mode", "semistrong", "--input", str(path), "--output", str(out_path)])
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["valid"] is True
    assert doc["colors_used"] <= 8


def test_color_graph6_input(tmp_path, capsys):
    path = tmp_path / "k4.g6"
    path.write_text(emit_graph6(families.complete_bipartite(2, 2)) + "\n")
    code, out, _ = run(capsys, ["color", "--mode", "relaxed01", "--format", "graph6", "--input", str(path)])
    assert code == 0
    assert json.loads(out)["colors_used"] == 2


def test_verify_valid_and_tampered(tmp_path, capsys):
    g = families.cycle(7)
    gpath = tmp_path / "c7.txt"
    gpath.write_text(emit_edge_list(g))
    res = solve(g, "semistrong")
    cpath = tmp_path / "coloring.json"
    cpath.write_text(emit_result(g, res))
    code, out, _ = run(capsys, ["verify", "--mode", "semistrong", "--graph", str(gpath), "--coloring", str(cpath)])
    assert code == 0
    assert json.loads(out)["valid"] is True

    doc = json.loads(emit_result(g, res))
    doc["colors"][0] = doc["colors"][2]  # tamper: two distance-2 edges share a color
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, ["verify", "--mode", "semistrong", "--graph", str(gpath), "--coloring", str(bad)])
    assert code == 1
    parsed = json.loads(out)
    assert parsed["valid"] is False
    assert parsed["witness"] is not None


def test_verify_relaxed_flags(tmp_path, capsys):
    g = families.cycle(4)
    gpath = tmp_path / "c4.txt"
    gpath.write_text(emit_edge_list(g))
    cpath = tmp_path / "c.json"
    cpath.write_text(json.dumps({"colors": [1, 2, 1, 2]}))
    code, out, _ = run(capsys, ["verify", "--mode", "relaxed", "--s", "0", "--t", "1", "--graph", str(gpath), "--coloring", str(cpath)])
    assert code == 0
    code, out, _ = run(capsys, ["verify", "--mode", "relaxed", "--s", "0", "--t", "0", "--graph", str(gpath), "--coloring", str(cpath)])
    assert code == 1


def test_exact_infeasible_at_max(tmp_path, capsys):
    gpath = tmp_path / "c4.txt"
    gpath.write_text(emit_edge_list(families.cycle(4)))
    code, out, _ = run(capsys, ["exact", "--mode", "semistrong", "--max-colors", "3", "--input", str(gpath)])
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] is None
    assert doc["proof"] == "exhausted"


def test_exact_c7(tmp_path, capsys):
    gpath = tmp_path / "c7.txt"
    gpath.write_text(emit_edge_list(families.cycle(7)))
    code, out, _ = run(capsys, ["exact", "--mode", "semistrong", "--max-colors", "6", "--input", str(gpath)])
    assert code == 0
    assert json.loads(out)["value"] == 4


def test_gen_family_flags(capsys):
    code, out, _ = run(capsys, ["gen", "--family", "complete_bipartite", "--n", "3", "--d", "3"])
    assert code == 0
    assert out.splitlines()[0] == "6 9"
    code, out, _ = run(capsys, ["gen", "--family", "h_graph", "--d", "3"])
    assert code == 0
    assert out.splitlines()[0] == "10 13"
    code, out, _ = run(capsys, ["gen", "--family", "random_max_degree", "--n", "10", "--d", "3", "--seed", "5"])
    assert code == 0


def test_gen_missing_params(capsys):
    code, _, err = run(capsys, ["gen", "--family", "prism"])
    assert code == 2
    assert "--n" in err


def test_usage_errors(capsys):
    assert run(capsys, ["color"])[0] == 2  # --mode required
    assert run(capsys, ["nonsense"])[0] == 2
    assert run(capsys, [])[0] == 2


def test_byte_stable_output(capsys, monkeypatch):
    text = emit_edge_list(families.prism(3))
    _, out1, _ = run(capsys, ["color", "--mode", "semistrong"], stdin=text, monkeypatch=monkeypatch)
    _, out2, _ = run(capsys, ["color", "--mode", "semistrong"], stdin=text, monkeypatch=monkeypatch)
    assert out1 == out2


def test_batch(tmp_path, capsys):
    d = tmp_path / "graphs"
    d.mkdir()
    (d / "c7.txt").write_text(emit_edge_list(families.cycle(7)))
    (d / "prism5.txt").write_text(emit_edge_list(families.prism(5)))
    (d / "two.g6").write_text(
        emit_graph6(families.hypercube(3)) + "\n" + emit_graph6(families.complete_bipartite(3, 3)) + "\n"
    )
    (d / "broken.txt").write_text("not a graph\n")
    report = tmp_path / "report.csv"
    code, _, _ = run(capsys, ["batch", "--dir", str(d), "--mode", "semistrong", "--report", str(report)])
    assert code == 0
    rows = list(csv.DictReader(report.read_text().splitlines()))
    assert len(rows) == 5
    by_name = {r["graph"]: r for r in rows}
    assert by_name["c7.txt"]["colors_used"] == "4"
    assert by_name["c7.txt"]["valid"] == "True"
    assert by_name["prism5.txt"]["strategy"] == "greedy_repair"
    assert by_name["two.g6:2"]["colors_used"] == "9"  # K33 rainbow
    assert by_name["broken.txt"]["strategy"].startswith("error:")
    assert by_name["broken.txt"]["valid"] == "False"
    assert all(r["fallbacks"] in ("0", "") for r in rows)


def test_batch_jobs_matches_serial(tmp_path, capsys):
    d = tmp_path / "graphs"
    d.mkdir()
    for i, g in enumerate([families.cycle(6), families.prism(4), families.hypercube(3)]):
        (d / f"g{i}.txt").write_text(emit_edge_list(g))
    r1 = tmp_path / "serial.csv"
    r2 = tmp_path / "jobs.csv"
    assert run(capsys, ["batch", "--dir", str(d), "--mode", "semistrong", "--report", str(r1)])[0] == 0
    assert run(capsys, ["batch", "--dir", str(d), "--mode", "semistrong", "--report", str(r2), "--jobs", "3"])[0] == 0

    def strip_time(path):
        rows = list(csv.DictReader(path.read_text().splitlines()))
        for row in rows:
            row.pop("wall_time_s")
        return rows

    assert strip_time(r1) == strip_time(r2)


def test_help_exits_zero(capsys):
    assert run(capsys, ["--help"])[0] == 0
    assert run(capsys, ["exact", "--help"])[0] == 0


def test_internal_error_exit_code(tmp_path, capsys, monkeypatch):
    import semistrong.cli as cli_mod
    from semistrong.solver import EngineInvariantError

    def boom(*a, **kw):
        raise EngineInvariantError("synthetic")

    monkeypatch.setattr(cli_mod, "solve", boom)
    gpath = tmp_path / "g.txt"
    gpath.write_text(emit_edge_list(families.cycle(7)))
    code, _, err = run(capsys, ["color", "--mode", "semistrong", "--input", str(gpath)])
    assert code == 3
    assert "internal error" in err
