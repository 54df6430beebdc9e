import json

import pytest

from aec.cli import RunReport, main, parse_seeds
from aec.coloring import EdgeColoring
from aec.formats import (
    FormatError,
    format_coloring,
    format_graph,
    graph_hash,
    parse_coloring,
    parse_graph,
    read_coloring,
    read_graph,
)
from aec.generator import named, random_regular
from aec.graph import Graph
from aec.verifier import verify


def test_graph_roundtrip():
    G = random_regular(20, seed=2)
    assert parse_graph(format_graph(G, "hello")) == G
    assert graph_hash(G) == graph_hash(parse_graph(format_graph(G)))


def test_isolated_vertices_kept():
    G = Graph(5, [(0, 1)])
    assert parse_graph(format_graph(G)).n == 5


def test_dimacs():
    G = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n")
    assert G == Graph(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("text", ["0 1 2\n", "0 x\n", "e 1 2\n", "# n=1\n0 3\n", "0 1\n1 0\n", "-1 2\n"])
def test_bad_graph_text(text):
    with pytest.raises(FormatError):
        parse_graph(text)


def test_coloring_roundtrip(c4):
    c = EdgeColoring.from_triples(c4, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 3)])
    for as_json in (False, True):
        assert parse_coloring(format_coloring(c, as_json), c4) == c
    with pytest.raises(FormatError):
        parse_coloring("0 2 1\n", c4)
    with pytest.raises(FormatError):
        parse_coloring("0 1 1\n1 0 2\n", c4)
    with pytest.raises(FormatError):
        parse_coloring("0 1 0\n", c4)


def test_parse_seeds():
    assert parse_seeds("0-3,7") == [0, 1, 2, 3, 7]
    assert parse_seeds("") == []


def test_gen_color_verify(tmp_path, capsys):
    g, c, t = tmp_path / "g.txt", tmp_path / "c.txt", tmp_path / "t.json"
    assert main(["gen", "--kind", "random", "--n", "30", "--seed", "4", "-o", str(g)]) == 0
    assert "seed=4" in g.read_text()
    assert main(["color", str(g), "-o", str(c), "--trace", str(t), "--stats"]) == 0
    G = read_graph(g)
    assert verify(G, read_coloring(c, G)).ok
    assert isinstance(json.loads(t.read_text()), list)
    assert "break_steps" in capsys.readouterr().err
    assert main(["verify", "--graph", str(g), "--coloring", str(c)]) == 0
    assert capsys.readouterr().out.startswith("ok")


def test_verify_rejects(tmp_path, capsys):
    g, c = tmp_path / "g.txt", tmp_path / "c.txt"
    g.write_text("0 1\n1 2\n2 3\n3 0\n")
    c.write_text("0 1 1\n1 2 2\n2 3 1\n0 3 2\n")
    assert main(["verify", "--graph", str(g), "--coloring", str(c)]) == 1
    assert "bichromatic cycle" in capsys.readouterr().out
    c.write_text("0 1 1\n")
    assert main(["verify", "--graph", str(g), "--coloring", str(c)]) == 1


def test_color_k5_json(tmp_path, capsys):
    g = tmp_path / "k5.txt"
    main(["gen", "--kind", "complete", "--n", "5", "-o", str(g)])
    assert main(["color", str(g), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["edges"]) == 10


def test_input_errors(tmp_path, capsys):
    g = tmp_path / "k6.txt"
    main(["gen", "--kind", "complete", "--n", "6", "-o", str(g)])
    assert main(["color", str(g)]) == 1
    assert "exceeds 4" in capsys.readouterr().err
    assert main(["color", str(tmp_path / "missing.txt")]) == 1
    assert main(["gen", "--kind", "random", "--n", "7", "--d", "3"]) == 1


def test_oracle(tmp_path, capsys):
    g = tmp_path / "c4.txt"
    g.write_text("0 1\n1 2\n2 3\n3 0\n")
    assert main(["oracle", str(g), "--k", "2"]) == 0
    assert capsys.readouterr().out.strip() == "infeasible"
    assert main(["oracle", str(g), "--k", "3"]) == 0
    assert capsys.readouterr().out.startswith("feasible (3 colors)")
    cache = json.loads((tmp_path / "c4.txt.oracle.json").read_text())
    assert set(next(iter(cache.values()))) == {"k2", "k3"}
    assert main(["oracle", str(g), "--k", "3"]) == 0
    assert "feasible" in capsys.readouterr().out
    assert main(["oracle", str(g), "--index"]) == 0
    assert "= 3" in capsys.readouterr().out


def test_bench_accounting(tmp_path, capsys):
    out = tmp_path / "b.tsv"
    assert main(["bench", "--n", "12", "24", "--seeds", "0-2", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].split("\t") == list(RunReport.COLUMNS)
    assert len(lines) == 7
    for line in lines[1:]:
        row = dict(zip(RunReport.COLUMNS, line.split("\t")))
        assert row["verdict"] == "ok"
        hits = {} if row["case_hits"] == "-" else dict(kv.split(":") for kv in row["case_hits"].split(","))
        assert sum(map(int, hits.values())) == int(row["break_steps"])
        assert int(hits.get("fallback", 0)) == int(row["fallback"])
    assert main(["bench", "--n", "12", "--seeds", ""]) == 0
    assert capsys.readouterr().out.count("\n") == 1
