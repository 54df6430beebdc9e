"""Text formats for graphs and colorings.

Graphs: one ``u v`` pair per line (0-based), ``#`` comments, blank lines
ignored; a header comment ``n=<count>`` keeps isolated trailing vertices.
DIMACS ``p edge n m`` / ``e u v`` (1-based) is accepted on input.

Colorings: one ``u v c`` line per edge, or JSON ``{"n": .., "edges": [[u, v, c], ..]}``.
"""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path

from .coloring import EdgeColoring
from .graph import Graph, GraphError


class FormatError(ValueError):
    pass


_N_HINT = re.compile(r"\bn=(\d+)\b")


def parse_graph(text: str) -> Graph:
    pairs: list[tuple[int, int]] = []
    n_hint = None
    dimacs = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _N_HINT.search(line)
            if m and n_hint is None:
                n_hint = int(m.group(1))
            continue
        tok = line.split()
        if tok[0] == "c":
            continue
        if tok[0] == "p":
            if len(tok) < 4 or tok[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: bad problem line {line!r}")
            dimacs = True
            n_hint = int(tok[2])
            continue
        if tok[0] == "e":
            if not dimacs:
                raise FormatError(f"line {lineno}: 'e' line before 'p edge' header")
            tok = tok[1:]
        if len(tok) != 2:
            raise FormatError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if dimacs:
            u, v = u - 1, v - 1
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex id")
        pairs.append((u, v))
    n = 1 + max((max(p) for p in pairs), default=-1)
    if n_hint is not None:
        if n_hint < n:
            raise FormatError(f"header declares n={n_hint} but vertex {n - 1} occurs")
        n = n_hint
    try:
        return Graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def format_graph(G: Graph, header: str = "") -> str:
    lines = [f"# {header}"] if header else []
    lines.append(f"# n={G.n} m={G.m}")
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def write_graph(G: Graph, path: str | Path, header: str = "") -> None:
    Path(path).write_text(format_graph(G, header))


def graph_hash(G: Graph) -> str:
    h = hashlib.sha256(f"{G.n};".encode())
    h.update(";".join(f"{u},{v}" for u, v in G.edges).encode())
    return h.hexdigest()[:16]


def parse_coloring(text: str, G: Graph) -> EdgeColoring:
    text = text.strip()
    if text.startswith("{"):
        try:
            doc = json.loads(text)
            triples = [tuple(int(x) for x in t) for t in doc["edges"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise FormatError(f"bad JSON coloring: {exc}") from None
    else:
        triples = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tok = line.split()
            if len(tok) != 3:
                raise FormatError(f"line {lineno}: expected 'u v c', got {line!r}")
            try:
                triples.append(tuple(int(t) for t in tok))
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer field in {line!r}") from None
    cols = [0] * G.m
    for u, v, c in triples:
        if not G.has_edge(u, v):
            raise FormatError(f"coloring names ({u}, {v}), which is not an edge")
        if c < 1:
            raise FormatError(f"color {c} on ({u}, {v}) is not positive")
        e = G.edge_id(u, v)
        if cols[e]:
            raise FormatError(f"edge ({u}, {v}) colored twice")
        cols[e] = c
    return EdgeColoring(G, cols)


def read_coloring(path: str | Path, G: Graph) -> EdgeColoring:
    return parse_coloring(Path(path).read_text(), G)


def format_coloring(c: EdgeColoring, as_json: bool = False) -> str:
    if as_json:
        doc = {"n": c.graph.n, "edges": [list(t) for t in c.triples()]}
        return json.dumps(doc, separators=(",", ":")) + "\n"
    return "".join(f"{u} {v} {x}\n" for u, v, x in c.triples())


def write_coloring(c: EdgeColoring, path: str | Path, as_json: bool = False) -> None:
    Path(path).write_text(format_coloring(c, as_json))
