"""Simple undirected graphs with dense integer vertices and stable edge ids.

Edge ids are assigned by sorting the canonical ``(min, max)`` endpoint pairs,
so the same edge set always yields the same ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class BadVertexId(GraphError):
    pass


class SurgeryError(GraphError):
    pass


class SurgeryWouldCreateParallelEdge(SurgeryError):
    pass


class SurgeryDegreeOverflow(SurgeryError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``inc[v]`` lists ``(neighbor, edge_id)`` pairs sorted by neighbor.
    """

    __slots__ = ("n", "edges", "adj", "inc", "_eid")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise BadVertexId(f"negative vertex count {n}")
        canon = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise BadVertexId(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in canon:
                raise ParallelEdge(f"parallel edge {key}")
            canon.add(key)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        self._eid = {e: i for i, e in enumerate(self.edges)}
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        for lst in inc:
            lst.sort()
        self.inc = tuple(tuple(lst) for lst in inc)
        self.adj = tuple(tuple(w for w, _ in lst) for lst in self.inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._eid

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._eid[(u, v) if u < v else (v, u)]
        except KeyError:
            raise KeyError(f"no edge ({u}, {v})") from None

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def check_invariants(self) -> None:
        assert sum(len(a) for a in self.adj) == 2 * self.m
        for v, nbrs in enumerate(self.adj):
            for w in nbrs:
                assert v in self.adj[w]
                assert v != w

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` relabelled ``0..k-1``; also returns the
        list mapping new ids back to old ones."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        pairs = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), pairs), old

    def edge_subgraph(self, edge_ids: Iterable[int]) -> tuple["Graph", list[int], list[int]]:
        """Graph spanned by the given edges. Returns ``(H, vertex_back, edge_back)``
        where ``edge_back[h_edge] = g_edge``."""
        ids = sorted(set(edge_ids))
        old = sorted({x for e in ids for x in self.edges[e]})
        new = {v: i for i, v in enumerate(old)}
        H = Graph(len(old), [(new[self.edges[e][0]], new[self.edges[e][1]]) for e in ids])
        edge_back = [0] * H.m
        for e in ids:
            a, b = self.edges[e]
            edge_back[H.edge_id(new[a], new[b])] = e
        return H, old, edge_back


def from_edge_list(pairs: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
    pairs = [tuple(p) for p in pairs]
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return Graph(n, pairs)


def is_simple_4_regular(G: Graph) -> bool:
    return G.n > 0 and all(len(a) == 4 for a in G.adj)


def is_regular(G: Graph, d: int) -> bool:
    return all(len(a) == d for a in G.adj)


def triangles_at(G: Graph, v: int) -> list[tuple[int, int, int]]:
    """Triangles through ``v`` as sorted vertex triples."""
    out = []
    for a, b in combinations(G.adj[v], 2):
        if G.has_edge(a, b):
            out.append(tuple(sorted((v, a, b))))
    return out


def is_triangle_free(G: Graph) -> bool:
    return not any(triangles_at(G, v) for v in range(G.n))


def connected_components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in G.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


@dataclass
class BlockDecomposition:
    blocks: list[list[int]]  # edge ids per block
    cut_vertices: list[int]

    def block_vertices(self, G: Graph) -> list[list[int]]:
        return [sorted({x for e in blk for x in G.edges[e]}) for blk in self.blocks]


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Biconnected components by an iterative Hopcroft-Tarjan lowpoint DFS.

    Each block is a sorted list of edge ids; isolated vertices contribute no block.
    """
    disc = [-1] * G.n
    low = [0] * G.n
    blocks: list[list[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(G.n):
        if disc[root] != -1 or not G.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[int] = []
        # frames: (vertex, parent edge id, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            x, pe, i = stack[-1]
            if i < len(G.inc[x]):
                stack[-1] = (x, pe, i + 1)
                y, e = G.inc[x][i]
                if e == pe:
                    continue
                if disc[y] == -1:
                    edge_stack.append(e)
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, e, 0))
                elif disc[y] < disc[x]:
                    edge_stack.append(e)
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if not stack:
                    break
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] >= disc[p]:
                    if p != root:
                        cuts.add(p)
                    blk = []
                    while True:
                        e = edge_stack.pop()
                        blk.append(e)
                        if e == pe:
                            break
                    blocks.append(sorted(blk))
        if root_children > 1:
            cuts.add(root)
    blocks.sort()
    return BlockDecomposition(blocks=blocks, cut_vertices=sorted(cuts))


def is_biconnected(G: Graph) -> bool:
    """True for connected graphs with a single block and no cut vertex."""
    if G.n < 3 or len(connected_components(G)) != 1:
        return False
    bd = block_decomposition(G)
    return len(bd.blocks) == 1 and not bd.cut_vertices


# --------------------------------------------------------------------------
# surgery


@dataclass(frozen=True)
class Anchor:
    """The H-edge ``edge`` must carry ``color`` after normalization."""

    edge: tuple[int, int]
    color: int


@dataclass(frozen=True)
class FreeColor:
    """``color`` must avoid the colors at ``vertex`` in H and the set ``extra``."""

    color: int
    vertex: int
    extra: frozenset[int] = frozenset()


@dataclass
class SurgerySpec:
    """H = G - removed + fresh vertices + added edges.

    Fresh vertices are addressed as ``G.n, G.n + 1, ...`` inside ``added_edges``
    and the anchor constraints.
    """

    removed_vertices: tuple[int, ...] = ()
    added_vertices: int = 0
    added_edges: tuple[tuple[int, int], ...] = ()
    anchor_constraints: tuple = ()
    extension_rule: str = ""


@dataclass
class VertexMap:
    forward: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, v: int) -> int:
        return self.forward[v]

    def backward(self) -> dict[int, int]:
        return {h: g for g, h in self.forward.items()}


def apply_surgery(G: Graph, spec: SurgerySpec, max_degree: int = 4) -> tuple[Graph, VertexMap]:
    removed = set(spec.removed_vertices)
    for v in removed:
        if not 0 <= v < G.n:
            raise BadVertexId(f"cannot remove unknown vertex {v}")
    live = [v for v in range(G.n) if v not in removed]
    fwd = {v: i for i, v in enumerate(live)}
    for k in range(spec.added_vertices):
        fwd[G.n + k] = len(live) + k
    pairs = {(fwd[u], fwd[v]) for u, v in G.edges if u in fwd and v in fwd}
    for a, b in spec.added_edges:
        if a not in fwd or b not in fwd:
            raise BadVertexId(f"added edge ({a}, {b}) references a removed or unknown vertex")
        if a == b:
            raise SelfLoop(f"added self-loop at {a}")
        x, y = fwd[a], fwd[b]
        key = (x, y) if x < y else (y, x)
        if key in pairs:
            raise SurgeryWouldCreateParallelEdge(f"edge ({a}, {b}) already present")
        pairs.add(key)
    H = Graph(len(fwd), pairs)
    if H.max_degree() > max_degree:
        raise SurgeryDegreeOverflow(f"surgery result has degree {H.max_degree()} > {max_degree}")
    return H, VertexMap(fwd)
