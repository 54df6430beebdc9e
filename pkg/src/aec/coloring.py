"""Edge colorings, the Misra-Gries base coloring and color relabelling."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .graph import Anchor, FreeColor, Graph

K = 6
COLORS = tuple(range(1, K + 1))


class Infeasible(Exception):
    """No color permutation satisfies the requested anchors."""


class EdgeColoring:
    """Map edge id -> color in ``1..6``; ``0`` marks an uncolored edge."""

    __slots__ = ("graph", "colors")

    def __init__(self, graph: Graph, colors: Sequence[int] | None = None):
        self.graph = graph
        if colors is None:
            colors = [0] * graph.m
        elif len(colors) != graph.m:
            raise ValueError(f"expected {graph.m} colors, got {len(colors)}")
        self.colors = list(colors)

    @classmethod
    def from_triples(cls, graph: Graph, triples: Iterable[tuple[int, int, int]]) -> "EdgeColoring":
        c = cls(graph)
        for u, v, col in triples:
            c.colors[graph.edge_id(u, v)] = int(col)
        return c

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeColoring)
            and self.graph == other.graph
            and self.colors == other.colors
        )

    def __repr__(self) -> str:
        return f"EdgeColoring(m={len(self.colors)}, used={sorted(self.colors_used())})"

    def color(self, u: int, v: int) -> int:
        return self.colors[self.graph.edge_id(u, v)]

    def color_set(self, v: int) -> set[int]:
        cols = self.colors
        return {cols[e] for _, e in self.graph.inc[v] if cols[e]}

    def colors_used(self) -> set[int]:
        return {c for c in self.colors if c}

    def is_total(self) -> bool:
        return all(self.colors)

    def copy(self) -> "EdgeColoring":
        return EdgeColoring(self.graph, self.colors)

    def with_changes(self, assignments: Iterable[tuple[int, int]]) -> "EdgeColoring":
        out = self.copy()
        for e, col in assignments:
            out.colors[e] = col
        return out

    def triples(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.colors[i]) for i, (u, v) in enumerate(self.graph.edges)]


def color_set(c: EdgeColoring, v: int) -> set[int]:
    return c.color_set(v)


@dataclass(frozen=True)
class ColorPermutation:
    """Bijection on ``1..6`` stored as the image tuple ``(p(1), ..., p(6))``."""

    images: tuple[int, ...] = COLORS

    def __post_init__(self):
        if sorted(self.images) != list(COLORS):
            raise ValueError(f"not a permutation of 1..{K}: {self.images}")

    def __call__(self, col: int) -> int:
        return self.images[col - 1] if col else 0

    @classmethod
    def identity(cls) -> "ColorPermutation":
        return cls(COLORS)

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "ColorPermutation":
        """Extend a partial injective mapping to a full permutation, sending the
        remaining colors to the remaining targets in increasing order."""
        rest_src = [c for c in COLORS if c not in mapping]
        rest_dst = [c for c in COLORS if c not in mapping.values()]
        full = dict(mapping)
        # keep fixed points where possible
        for c in list(rest_src):
            if c in rest_dst:
                full[c] = c
                rest_src.remove(c)
                rest_dst.remove(c)
        full.update(zip(rest_src, rest_dst))
        return cls(tuple(full[c] for c in COLORS))

    def inverse(self) -> "ColorPermutation":
        inv = [0] * K
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return ColorPermutation(tuple(inv))

    def compose(self, other: "ColorPermutation") -> "ColorPermutation":
        """``self`` after ``other``."""
        return ColorPermutation(tuple(self(other(c)) for c in COLORS))

    def moved(self) -> int:
        return sum(1 for i, img in enumerate(self.images) if img != i + 1)

    def table(self) -> list[int]:
        """Lookup list indexed by color, with 0 -> 0."""
        return [0, *self.images]


def permute_colors(c: EdgeColoring, p: ColorPermutation) -> EdgeColoring:
    t = p.table()
    return EdgeColoring(c.graph, [t[x] for x in c.colors])


def _all_permutations_by_distance() -> list[ColorPermutation]:
    perms = [ColorPermutation(p) for p in permutations(COLORS)]
    perms.sort(key=lambda p: (p.moved(), p.images))
    return perms


_PERMS = _all_permutations_by_distance()


def anchor_permutations(c: EdgeColoring, constraints: Iterable) -> Iterator[ColorPermutation]:
    """All permutations realizing the anchors, fewest moved colors first.

    ``Anchor(edge, color)`` asks for ``p(c(edge)) == color``; ``FreeColor(color,
    vertex, extra)`` asks that ``color`` is neither at ``vertex`` after relabelling
    nor in ``extra``.
    """
    exact: dict[int, int] = {}
    frees = []
    for con in constraints:
        if isinstance(con, Anchor):
            src = c.color(*con.edge)
            if src == 0:
                raise ValueError(f"anchor edge {con.edge} is uncolored")
            if exact.get(src, con.color) != con.color:
                return
            exact[src] = con.color
        elif isinstance(con, FreeColor):
            if con.color in con.extra:
                return
            frees.append((con.color, c.color_set(con.vertex)))
        else:
            raise TypeError(f"unknown constraint {con!r}")
    if len(set(exact.values())) != len(exact):
        return
    for p in _PERMS:
        im = p.images
        if any(im[s - 1] != t for s, t in exact.items()):
            continue
        if any(col in {im[x - 1] for x in at} for col, at in frees):
            continue
        yield p


def find_anchor_permutation(c: EdgeColoring, constraints: Iterable) -> ColorPermutation:
    for p in anchor_permutations(c, list(constraints)):
        return p
    raise Infeasible("no color permutation satisfies the anchors")


# --------------------------------------------------------------------------
# base coloring


def _is_bipartite(G: Graph) -> bool:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return True


class _Palette:
    """Mutable coloring with per-vertex color -> edge lookup."""

    def __init__(self, G: Graph, k: int):
        self.G, self.k = G, k
        self.col = [0] * G.m
        self.at: list[dict[int, int]] = [{} for _ in range(G.n)]

    def set(self, e: int, c: int) -> None:
        a, b = self.G.edges[e]
        old = self.col[e]
        if old:
            del self.at[a][old]
            del self.at[b][old]
        self.col[e] = c
        if c:
            self.at[a][c] = e
            self.at[b][c] = e

    def free(self, x: int) -> int:
        at = self.at[x]
        for c in range(1, self.k + 1):
            if c not in at:
                return c
        raise RuntimeError(f"no free color at {x}")

    def flip_path(self, start: int, a: int, b: int) -> None:
        """Swap a/b along the maximal alternating path leaving ``start`` by color ``a``."""
        path, x, want = [], start, a
        while want in self.at[x]:
            e = self.at[x][want]
            if path and e == path[-1]:
                break
            path.append(e)
            x = self.G.other(e, x)
            want = b if want == a else a
            if x == start:
                break
        olds = [self.col[e] for e in path]
        for e in path:
            self.set(e, 0)
        for e, o in zip(path, olds):
            self.set(e, b if o == a else a)


def misra_gries(G: Graph, order: Sequence[int] | None = None) -> EdgeColoring:
    """Proper edge coloring with at most ``max_degree + 1`` colors (fan rotation
    plus cd-path inversion)."""
    k = G.max_degree() + 1
    P = _Palette(G, k)
    for e0 in order if order is not None else range(G.m):
        u, v0 = G.edges[e0]
        fan = [v0]
        in_fan = {v0}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for w, e in G.inc[u]:
                if w not in in_fan and P.col[e] and P.col[e] not in P.at[last]:
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = P.free(u)
        d = P.free(fan[-1])
        if c != d:
            P.flip_path(u, d, c)
        for i, w in enumerate(fan):
            if d in P.at[w]:
                continue
            if all(P.col[G.edge_id(u, fan[j + 1])] not in P.at[fan[j]] for j in range(i)):
                break
        else:  # pragma: no cover - excluded by the fan lemma
            raise RuntimeError("Misra-Gries: no rotation target")
        ids = [G.edge_id(u, x) for x in fan[: i + 1]]
        shifted = [P.col[x] for x in ids[1:]]
        for x in ids:
            P.set(x, 0)
        for x, col in zip(ids, shifted):
            P.set(x, col)
        P.set(ids[-1], d)
    return EdgeColoring(G, P.col)


def bipartite_edge_coloring(G: Graph, order: Sequence[int] | None = None) -> EdgeColoring:
    """Max-degree colors on bipartite graphs by alternating-path swaps."""
    k = max(G.max_degree(), 1)
    P = _Palette(G, k)
    for e in order if order is not None else range(G.m):
        u, v = G.edges[e]
        a, b = P.free(u), P.free(v)
        if a not in P.at[v]:
            P.set(e, a)
            continue
        # the (a, b) path from v never reaches u in a bipartite graph
        P.flip_path(v, a, b)
        P.set(e, a)
    return EdgeColoring(G, P.col)


def proper_edge_coloring(G: Graph, order: Sequence[int] | None = None) -> EdgeColoring:
    if G.max_degree() > 5:
        raise ValueError("base coloring supports max degree <= 5 only")
    if _is_bipartite(G):
        return bipartite_edge_coloring(G, order)
    return misra_gries(G, order)
