"""Independent certification of edge colorings.

Acyclicity is checked with a union-find forest test per color pair and does
not reuse the alternating-walk code from :mod:`aec.bichromatic`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import EdgeColoring
from .graph import Graph


class PartialColoring(ValueError):
    """The coloring leaves some edge uncolored."""


@dataclass
class Verdict:
    proper: bool
    acyclic: bool
    colors_used: int
    within_bound: bool = True
    # ("incident", e1, e2) for a properness violation, ("cycle", (i, j), vertices) otherwise
    witness: tuple | None = field(default=None)

    @property
    def ok(self) -> bool:
        return self.proper and self.acyclic and self.within_bound

    def describe(self) -> str:
        if self.ok:
            return f"ok: proper, acyclic, {self.colors_used} colors"
        if not self.within_bound:
            return f"too many colors: {self.colors_used}"
        if not self.proper:
            _, e1, e2 = self.witness
            return f"improper: edges {e1} and {e2} share a color"
        _, pair, cyc = self.witness
        return f"bichromatic cycle in colors {pair}: {' '.join(map(str, cyc))}"


class _DSU:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        p = self.parent
        p.setdefault(x, x)
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _tree_path(edges: list[tuple[int, int]], a: int, b: int) -> list[int]:
    adj: dict[int, list[int]] = {}
    for x, y in edges:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    prev = {a: None}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            break
        for y in adj.get(x, ()):
            if y not in prev:
                prev[y] = x
                stack.append(y)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def is_proper(G: Graph, c: EdgeColoring) -> bool:
    for v in range(G.n):
        seen = set()
        for _, e in G.inc[v]:
            x = c.colors[e]
            if x:
                if x in seen:
                    return False
                seen.add(x)
    return True


def verify(G: Graph, c: EdgeColoring, k: int = 6) -> Verdict:
    if len(c.colors) != G.m:
        raise PartialColoring(f"coloring has {len(c.colors)} entries for {G.m} edges")
    missing = [G.edges[e] for e, x in enumerate(c.colors) if not x]
    if missing:
        raise PartialColoring(f"{len(missing)} uncolored edges, e.g. {missing[0]}")
    used = sorted(set(c.colors))
    n_used = len(used)
    within = n_used <= k and all(1 <= x <= k for x in used)

    for v in range(G.n):
        first: dict[int, int] = {}
        for _, e in G.inc[v]:
            x = c.colors[e]
            if x in first:
                return Verdict(False, False, n_used, within, ("incident", G.edges[first[x]], G.edges[e]))
            first[x] = e

    by_color: dict[int, list[tuple[int, int]]] = {}
    for e, x in enumerate(c.colors):
        by_color.setdefault(x, []).append(G.edges[e])
    for i, j in combinations(used, 2):
        dsu = _DSU()
        forest: list[tuple[int, int]] = []
        for a, b in by_color[i] + by_color[j]:
            if not dsu.union(a, b):
                cyc = _tree_path(forest, a, b)
                return Verdict(True, False, n_used, within, ("cycle", (i, j), tuple(cyc)))
            forest.append((a, b))
    return Verdict(True, True, n_used, within, None)
