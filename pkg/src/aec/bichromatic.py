"""Bichromatic paths and cycles, and the cycle count tau.

For a proper coloring every two-color subgraph has maximum degree 2, so it
splits into vertex-disjoint paths and even cycles. All walks below exploit
that: from any vertex there is at most one edge of each color to follow.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .coloring import K, EdgeColoring
from .graph import Graph


class AmbiguousStart(ValueError):
    """Both colors of the pair occur at the start vertex and no first edge was given."""


class WalkClosed(Exception):
    """The alternating walk came back to its start: the component is a cycle."""

    def __init__(self, cycle: "BichromaticCycle"):
        super().__init__(f"walk closed into {cycle}")
        self.cycle = cycle


@dataclass(frozen=True)
class BichromaticPath:
    vertices: tuple[int, ...]
    color_pair: tuple[int, int]
    maximal: bool = True

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


@dataclass(frozen=True, order=True)
class BichromaticCycle:
    """Alternating cycle; ``vertices`` starts at its minimum vertex and continues
    toward the smaller of that vertex's two cycle neighbors."""

    vertices: tuple[int, ...]
    color_pair: tuple[int, int]

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]

    def edge_ids(self, G: Graph) -> list[int]:
        return [G.edge_id(a, b) for a, b in self.edges()]

    def to_json(self) -> dict:
        return {"pair": list(self.color_pair), "cycle": list(self.vertices)}


def canonical_cycle(vertices: Iterable[int], pair: tuple[int, int]) -> BichromaticCycle:
    vs = list(vertices)
    k = vs.index(min(vs))
    vs = vs[k:] + vs[:k]
    if len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    i, j = pair
    return BichromaticCycle(tuple(vs), (min(i, j), max(i, j)))


class ColorState:
    """Mutable coloring with O(1) lookup of the neighbor along a given color.

    ``nb[v][col]`` is the neighbor of ``v`` joined by an edge of color ``col``
    or ``-1``. Intended for inner loops that recolor and undo repeatedly.
    """

    __slots__ = ("G", "col", "nb", "eat")

    def __init__(self, c: EdgeColoring):
        G = c.graph
        self.G = G
        self.col = list(c.colors)
        self.nb = [[-1] * (K + 1) for _ in range(G.n)]
        self.eat = [[-1] * (K + 1) for _ in range(G.n)]
        for e, (a, b) in enumerate(G.edges):
            x = self.col[e]
            if x:
                self._link(e, a, b, x)

    def _link(self, e, a, b, x):
        nb, eat = self.nb, self.eat
        if nb[a][x] != -1 or nb[b][x] != -1:
            raise ValueError(f"improper: color {x} repeated at edge {self.G.edges[e]}")
        nb[a][x], nb[b][x] = b, a
        eat[a][x] = eat[b][x] = e

    def _unlink(self, a, b, x):
        self.nb[a][x] = self.nb[b][x] = -1
        self.eat[a][x] = self.eat[b][x] = -1

    def coloring(self) -> EdgeColoring:
        return EdgeColoring(self.G, self.col)

    def clone(self) -> "ColorState":
        out = ColorState.__new__(ColorState)
        out.G = self.G
        out.col = list(self.col)
        out.nb = [row[:] for row in self.nb]
        out.eat = [row[:] for row in self.eat]
        return out

    def free(self, v: int, x: int) -> bool:
        return self.nb[v][x] == -1

    def colors_at(self, v: int) -> set[int]:
        row = self.nb[v]
        return {x for x in range(1, K + 1) if row[x] != -1}

    def can_set(self, e: int, x: int) -> bool:
        a, b = self.G.edges[e]
        if x == self.col[e]:
            return True
        return (not x) or (self.nb[a][x] == -1 and self.nb[b][x] == -1)

    def set(self, e: int, x: int) -> None:
        a, b = self.G.edges[e]
        old = self.col[e]
        if old == x:
            return
        if old:
            self._unlink(a, b, old)
        self.col[e] = x
        if x:
            self._link(e, a, b, x)

    def apply(self, assignments) -> list[tuple[int, int]]:
        """Transactionally apply ``(edge, color)`` pairs in order; returns the undo
        list. Raises ValueError, leaving the state unchanged, if the result is
        improper."""
        # clear first so that swaps between incident edges are allowed
        undo = [(e, self.col[e]) for e, _ in assignments]
        final: dict[int, int] = {}
        for e, x in assignments:
            final[e] = x
        for e in final:
            self.set(e, 0)
        try:
            for e, x in final.items():
                if not self.can_set(e, x):
                    raise ValueError(f"color {x} not free at edge {self.G.edges[e]}")
                self.set(e, x)
        except ValueError:
            for e in final:
                self.set(e, 0)
            for e, x in reversed(undo):
                self.set(e, x)
            raise
        return undo

    def undo(self, undo: list[tuple[int, int]]) -> None:
        touched = {e for e, _ in undo}
        for e in touched:
            self.set(e, 0)
        first: dict[int, int] = {}
        for e, x in undo:
            first.setdefault(e, x)
        for e, x in first.items():
            self.set(e, x)

    # walks -----------------------------------------------------------------

    def walk(self, start: int, first: int, other: int) -> tuple[list[int], bool]:
        """Follow colors ``first, other, first, ...`` from ``start``.

        Returns the visited vertices and whether the walk closed at ``start``.
        """
        nb = self.nb
        out = [start]
        x, want = start, first
        while True:
            y = nb[x][want]
            if y == -1:
                return out, False
            if y == start:
                return out, True
            out.append(y)
            x = y
            want = other if want == first else first

    def component(self, u: int, i: int, j: int) -> list[int]:
        """Vertices of the (i, j)-component containing ``u`` (path order when a path)."""
        fwd, closed = self.walk(u, i, j)
        if closed:
            return fwd
        back, _ = self.walk(u, j, i)
        return back[:0:-1] + fwd

    def has_path(self, u: int, v: int, i: int, j: int) -> bool:
        if u == v:
            return True
        nb = self.nb
        for a, b in ((i, j), (j, i)):
            x, want = u, a
            while True:
                y = nb[x][want]
                if y == -1 or y == u:
                    break
                if y == v:
                    return True
                x = y
                want = b if want == a else a
        return False

    def cycle_through(self, e: int, other: int) -> BichromaticCycle | None:
        """The (c(e), other)-cycle containing edge ``e``, if any."""
        a, b = self.G.edges[e]
        x = self.col[e]
        if not x or other == x:
            return None
        # from b, alternate other, x, ... hoping to come back to a by color other
        nb = self.nb
        vs = [a, b]
        cur, want = b, other
        while True:
            y = nb[cur][want]
            if y == -1:
                return None
            if y == a:
                return canonical_cycle(vs, (x, other)) if want == other else None
            vs.append(y)
            cur = y
            want = x if want == other else other

    def cycles_touching(self, edges: Iterable[int]) -> set[BichromaticCycle]:
        out = set()
        for e in set(edges):
            x = self.col[e]
            if not x:
                continue
            for o in range(1, K + 1):
                if o != x:
                    cyc = self.cycle_through(e, o)
                    if cyc is not None:
                        out.add(cyc)
        return out

    def all_cycles(self) -> list[BichromaticCycle]:
        nb = self.nb
        found = []
        for i, j in combinations(range(1, K + 1), 2):
            seen = set()
            for s in range(self.G.n):
                if s in seen or nb[s][i] == -1 or nb[s][j] == -1:
                    continue
                vs, closed = self.walk(s, i, j)
                seen.update(vs)
                if closed:
                    found.append(canonical_cycle(vs, (i, j)))
        found.sort()
        return found

    def tau(self) -> int:
        return len(self.all_cycles())


def _state(c: EdgeColoring | ColorState) -> ColorState:
    return c if isinstance(c, ColorState) else ColorState(c)


def maximal_path_from(
    c: EdgeColoring, u: int, i: int, j: int, first_edge: int | None = None
) -> BichromaticPath:
    """The maximal (i, j)-alternating path leaving ``u``.

    Raises AmbiguousStart when both colors occur at ``u`` and ``first_edge`` is
    omitted, and WalkClosed when the walk is in fact a cycle.
    """
    st = _state(c)
    has_i, has_j = st.nb[u][i] != -1, st.nb[u][j] != -1
    if first_edge is not None:
        start = st.col[first_edge]
        if start not in (i, j) or u not in st.G.edges[first_edge]:
            raise ValueError("first edge must be incident to u and colored i or j")
    elif has_i and has_j:
        raise AmbiguousStart(f"both {i} and {j} occur at {u}")
    elif has_i:
        start = i
    elif has_j:
        start = j
    else:
        return BichromaticPath((u,), (i, j))
    other = j if start == i else i
    vs, closed = st.walk(u, start, other)
    if closed:
        raise WalkClosed(canonical_cycle(vs, (i, j)))
    return BichromaticPath(tuple(vs), (i, j), maximal=not (has_i and has_j))


def exists_ij_path(c: EdgeColoring, u: int, v: int, i: int, j: int) -> bool:
    return _state(c).has_path(u, v, i, j)


def enumerate_bichromatic_cycles(c: EdgeColoring) -> list[BichromaticCycle]:
    return _state(c).all_cycles()


def tau(c: EdgeColoring) -> int:
    return _state(c).tau()


def tau_delta(before: EdgeColoring, after: EdgeColoring, changed: Iterable[int] | None = None) -> int:
    """tau(after) - tau(before), counting only cycles through changed edges."""
    if changed is None:
        changed = [e for e, (x, y) in enumerate(zip(before.colors, after.colors)) if x != y]
    changed = list(changed)
    return len(ColorState(after).cycles_touching(changed)) - len(
        ColorState(before).cycles_touching(changed)
    )


def pair_components(c: EdgeColoring, i: int, j: int) -> tuple[list[list[int]], list[list[int]]]:
    """Split the (i, j)-subgraph into ``(paths, cycles)`` as vertex lists.

    Isolated vertices are not reported.
    """
    st = _state(c)
    seen = set()
    paths, cycles = [], []
    for s in range(st.G.n):
        if s in seen or (st.nb[s][i] == -1 and st.nb[s][j] == -1):
            continue
        comp = st.component(s, i, j)
        seen.update(comp)
        fwd, closed = st.walk(s, i, j)
        (cycles if closed else paths).append(comp)
    return paths, cycles


def trace_records(cycles: Iterable[BichromaticCycle]) -> list[dict]:
    return [cyc.to_json() for cyc in cycles]
