"""Exact and heuristic acyclic edge coloring for small or non-regular graphs.

``exact_color`` is a backtracking oracle. ``heuristic_color`` handles graphs of
maximum degree at most 4 that are not 4-regular: a Misra-Gries seed followed by
a local search that drives the number of bichromatic cycles to zero.
"""

from __future__ import annotations

import logging
import random
import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bichromatic import BichromaticCycle, ColorState
from .coloring import K, ColorPermutation, EdgeColoring, permute_colors, proper_edge_coloring
from .graph import Graph, block_decomposition
from .verifier import verify

log = logging.getLogger(__name__)


class Exhausted(Exception):
    """The search budget ran out before a verdict was reached."""


BudgetExhausted = Exhausted


@dataclass
class SolverBudget:
    node_limit: int = 2_000_000
    time_limit: float | None = None
    restarts: int = 30

    def __post_init__(self):
        if self.node_limit <= 0 or self.restarts <= 0:
            raise ValueError("budget values must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")


class _Clock:
    def __init__(self, budget: SolverBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def tick(self, n: int = 1) -> None:
        self.nodes += n
        if self.nodes > self.budget.node_limit:
            raise Exhausted(f"node limit {self.budget.node_limit} reached")
        if self.deadline is not None and (self.nodes & 1023) == 0 and time.monotonic() > self.deadline:
            raise Exhausted(f"time limit {self.budget.time_limit}s reached")


# --------------------------------------------------------------------------
# exact backtracking


def bfs_edge_order(G: Graph) -> list[int]:
    """Edges in order of discovery by BFS, started at the highest-degree vertex."""
    seen_v = [False] * G.n
    seen_e = [False] * G.m
    order = []
    starts = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    for s in starts:
        if seen_v[s]:
            continue
        seen_v[s] = True
        q = deque([s])
        while q:
            x = q.popleft()
            for y, e in G.inc[x]:
                if not seen_e[e]:
                    seen_e[e] = True
                    order.append(e)
                if not seen_v[y]:
                    seen_v[y] = True
                    q.append(y)
    return order


def exact_color(G: Graph, k: int = 6, budget: SolverBudget | None = None) -> EdgeColoring | None:
    """A proper acyclic ``k``-edge-coloring, or ``None`` when none exists.

    Colors are tried in increasing order and a new color is only opened as the
    smallest unused one, which removes the color-permutation symmetry.
    Raises Exhausted if the node budget runs out first.
    """
    if not 1 <= k <= K:
        raise ValueError(f"k must be in 1..{K}")
    clock = _Clock(budget or SolverBudget())
    if G.m == 0:
        return EdgeColoring(G)
    if G.max_degree() > k:
        return None
    order = bfs_edge_order(G)
    ends = [G.edges[e] for e in order]
    col = [0] * G.m
    nb = [[-1] * (k + 1) for _ in range(G.n)]

    def closes_cycle(a: int, b: int, x: int) -> bool:
        # a new x-edge ab closes an (x, y)-cycle iff b reaches a along y, x, y, ...
        for y in range(1, k + 1):
            if y == x or nb[a][y] == -1 or nb[b][y] == -1:
                continue
            cur, want = b, y
            while True:
                nxt = nb[cur][want]
                if nxt == -1:
                    break
                if nxt == a:
                    return True
                cur = nxt
                want = x if want == y else y
        return False

    def rec(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        a, b = ends[idx]
        e = order[idx]
        for x in range(1, min(used + 1, k) + 1):
            if nb[a][x] != -1 or nb[b][x] != -1:
                continue
            clock.tick()
            if closes_cycle(a, b, x):
                continue
            nb[a][x], nb[b][x] = b, a
            col[e] = x
            if rec(idx + 1, max(used, x)):
                return True
            nb[a][x] = nb[b][x] = -1
            col[e] = 0
        return False

    import sys

    limit = sys.getrecursionlimit()
    if limit < G.m + 100:
        sys.setrecursionlimit(G.m + 100)
    try:
        found = rec(0, 0)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return None
    out = EdgeColoring(G, col)
    v = verify(G, out, k)
    assert v.ok, v.describe()
    return out


def acyclic_chromatic_index(G: Graph, budget: SolverBudget | None = None) -> int:
    """Least ``k`` for which :func:`exact_color` succeeds (at least the max degree)."""
    if G.m == 0:
        return 0
    for k in range(max(G.max_degree(), 1), K + 1):
        if exact_color(G, k, budget) is not None:
            return k
    raise Exhausted(f"no acyclic coloring with at most {K} colors")


# --------------------------------------------------------------------------
# exhaustive enumeration, used to double-check the backtracking verdicts


def simple_cycles(G: Graph) -> list[list[int]]:
    """All simple cycles as lists of edge ids in traversal order (each once)."""
    out = []
    for s in range(G.n):
        stack = [(s, [s], [])]
        while stack:
            x, vs, es = stack.pop()
            for y, e in G.inc[x]:
                if y == s and len(vs) >= 3 and vs[1] < vs[-1]:
                    out.append(es + [e])
                elif y > s and y not in vs:
                    stack.append((y, vs + [y], es + [e]))
    return out


def exhaustive_feasible(G: Graph, k: int, chunk: int = 1 << 20, max_total: int = 50_000_000) -> bool:
    """Whether a proper acyclic ``k``-edge-coloring exists, by enumerating all of
    ``k**(m-1)`` colorings with edge 0 fixed to color 1."""
    m = G.m
    if m == 0:
        return True
    if k < 1:
        return False
    total = k ** (m - 1)
    if total > max_total:
        raise ValueError(f"{total} colorings is too many to enumerate")
    pairs = [(e, f) for v in range(G.n) for (_, e), (_, f) in combinations(G.inc[v], 2)]
    even_cycles = [c for c in simple_cycles(G) if len(c) % 2 == 0]
    pe = np.array([p[0] for p in pairs], dtype=np.int64)
    pf = np.array([p[1] for p in pairs], dtype=np.int64)
    powers = k ** np.arange(m - 2, -1, -1, dtype=np.int64) if m > 1 else np.zeros(0, np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cols = np.empty((idx.size, m), dtype=np.int8)
        cols[:, 0] = 0
        if m > 1:
            cols[:, 1:] = (idx[:, None] // powers[None, :]) % k
        ok = np.all(cols[:, pe] != cols[:, pf], axis=1) if pairs else np.ones(idx.size, bool)
        for cyc in even_cycles:
            even = cols[:, cyc[0::2]]
            odd = cols[:, cyc[1::2]]
            bi = np.all(even == even[:, :1], axis=1) & np.all(odd == odd[:, :1], axis=1)
            ok &= ~bi
        if ok.any():
            return True
    return False


# --------------------------------------------------------------------------
# local search


def _kempe_path(st: ColorState, w: int, p: int, q: int) -> list[int] | None:
    """Edges of the (p, q)-path starting at ``w`` (``w`` must miss ``q``)."""
    if st.nb[w][q] != -1 or st.nb[w][p] == -1:
        return None
    out = []
    x, want = w, p
    while True:
        e = st.eat[x][want]
        if e == -1:
            return out
        out.append(e)
        x = st.G.other(e, x)
        want = q if want == p else p


def _moves_for(st: ColorState, cyc: BichromaticCycle, k: int):
    """Candidate recolor plans (lists of ``(edge, color)``) around ``cyc``."""
    G = st.G
    cyc_edges = cyc.edge_ids(G)
    near = set(cyc_edges)
    for v in cyc.vertices:
        for _, e in G.inc[v]:
            near.add(e)
    for e in sorted(near):
        for x in range(1, k + 1):
            if x != st.col[e] and st.can_set(e, x):
                yield [(e, x)]
    for w in cyc.vertices:
        present = st.colors_at(w)
        for p in sorted(present):
            for q in range(1, k + 1):
                if q in present:
                    continue
                path = _kempe_path(st, w, p, q)
                if path:
                    yield [(e, q if st.col[e] == p else p) for e in path]


def _evaluate(st: ColorState, plan) -> tuple[int, set, set] | None:
    changed = [e for e, _ in plan]
    before = st.cycles_touching(changed)
    try:
        undo = st.apply(plan)
    except ValueError:
        return None
    after = st.cycles_touching(changed)
    st.undo(undo)
    return len(after) - len(before), before, after


def reduce_cycles(
    st: ColorState,
    rng: random.Random,
    clock: _Clock,
    k: int = K,
    max_steps: int = 10_000,
    sideways: int = 50,
    stats: dict | None = None,
) -> bool:
    """Local search on ``st`` in place until no bichromatic cycle is left.

    Returns True on success, False when stuck (more than ``sideways``
    consecutive non-improving moves) or out of steps.
    """
    cycles = set(st.all_cycles())
    flat = 0
    for _ in range(max_steps):
        if not cycles:
            return True
        target = min(cycles)
        best, best_plans = None, []
        for plan in _moves_for(st, target, k):
            clock.tick()
            res = _evaluate(st, plan)
            if res is None:
                continue
            d = res[0]
            if best is None or d < best:
                best, best_plans = d, [(plan, res)]
            elif d == best:
                best_plans.append((plan, res))
        if best is None or best > 0:
            return False
        if best == 0:
            flat += 1
            if flat > sideways:
                return False
        else:
            flat = 0
        plan, (_, before, after) = best_plans[rng.randrange(len(best_plans))]
        st.apply(plan)
        cycles -= before
        cycles |= after
        if stats is not None:
            stats["moves"] = stats.get("moves", 0) + 1
    return not cycles


def _complete_partial(c: EdgeColoring, k: int) -> EdgeColoring | None:
    """Fill uncolored edges greedily with a free color; None if some edge is blocked."""
    G = c.graph
    st = ColorState(c)
    for e in range(G.m):
        if st.col[e]:
            continue
        a, b = G.edges[e]
        choices = [x for x in range(1, k + 1) if st.nb[a][x] == -1 and st.nb[b][x] == -1]
        if not choices:
            return None
        best = None
        for x in choices:
            st.set(e, x)
            n_cyc = len(st.cycles_touching([e]))
            st.set(e, 0)
            if best is None or n_cyc < best[0]:
                best = (n_cyc, x)
        st.set(e, best[1])
    return st.coloring()


def _color_connected_piece(
    G: Graph, budget: SolverBudget, seed: int, initial: EdgeColoring | None, stats: dict
) -> EdgeColoring:
    rng = random.Random(seed)
    clock = _Clock(budget)
    k = K
    seeds: list[EdgeColoring] = []
    if initial is not None:
        done = _complete_partial(initial, k) if not initial.is_total() else initial
        if done is not None:
            seeds.append(done)
    try:
        for r in range(budget.restarts):
            if r < len(seeds):
                start = seeds[r]
            else:
                order = list(range(G.m))
                if r > 0:
                    rng.shuffle(order)
                start = proper_edge_coloring(G, order)
                if r > 1:
                    perm = list(range(1, K + 1))
                    rng.shuffle(perm)
                    start = permute_colors(start, ColorPermutation(tuple(perm)))
            st = ColorState(start)
            if reduce_cycles(st, rng, clock, k, stats=stats):
                out = st.coloring()
                if verify(G, out, k).ok:
                    return out
            stats["restarts"] = stats.get("restarts", 0) + 1
    except Exhausted:
        log.debug("local search budget exhausted on piece with m=%d", G.m)
    stats["exact_escalations"] = stats.get("exact_escalations", 0) + 1
    out = exact_color(G, k, budget)
    if out is None:
        raise Exhausted(f"no acyclic {k}-coloring exists for a piece with m={G.m}")
    return out


def _align_at_cut(colored_at_v: set[int], block_at_v: set[int]) -> ColorPermutation:
    """Permutation moving ``block_at_v`` off ``colored_at_v`` with few moved colors."""
    clash = sorted(block_at_v & colored_at_v)
    spare = [x for x in range(1, K + 1) if x not in colored_at_v and x not in block_at_v]
    mapping = {}
    for x, y in zip(clash, spare):
        mapping[x] = y
        mapping[y] = x
    return ColorPermutation.from_mapping(mapping)


def heuristic_color(
    G: Graph,
    budget: SolverBudget | None = None,
    seed: int = 0,
    initial: EdgeColoring | None = None,
    stats: dict | None = None,
) -> EdgeColoring:
    """Proper acyclic edge coloring with at most 6 colors for max degree <= 4.

    The graph is split into blocks (bichromatic cycles never leave a block),
    each block is colored by local search, and block colorings are glued at cut
    vertices by color permutations. ``initial`` optionally seeds the search
    with a (possibly partial) coloring of G.
    """
    if G.max_degree() > 4:
        raise ValueError("heuristic_color needs max degree <= 4")
    budget = budget or SolverBudget()
    stats = stats if stats is not None else {}
    if G.m == 0:
        return EdgeColoring(G)
    if initial is not None and initial.is_total() and verify(G, initial).ok:
        return initial.copy()
    bd = block_decomposition(G)
    if len(bd.blocks) == 1:
        return _color_connected_piece(G, budget, seed, initial, stats)
    out = EdgeColoring(G)
    # walk blocks so that each new block meets the colored part in one cut vertex
    vsets = bd.block_vertices(G)
    of_vertex: dict[int, list[int]] = {}
    for b, vs in enumerate(vsets):
        for v in vs:
            of_vertex.setdefault(v, []).append(b)
    done = [False] * len(bd.blocks)
    for root in range(len(bd.blocks)):
        if done[root]:
            continue
        q = deque([(root, None)])
        done[root] = True
        while q:
            b, via = q.popleft()
            H, vback, eback = G.edge_subgraph(bd.blocks[b])
            init_h = None
            if initial is not None:
                init_h = EdgeColoring(H, [initial.colors[e] for e in eback])
            ch = _color_connected_piece(H, budget, seed + b, init_h, stats)
            if via is not None:
                hv = vback.index(via)
                p = _align_at_cut(out.color_set(via), ch.color_set(hv))
                ch = permute_colors(ch, p)
            for he, ge in enumerate(eback):
                out.colors[ge] = ch.colors[he]
            for v in vsets[b]:
                for nbk in of_vertex[v]:
                    if not done[nbk]:
                        done[nbk] = True
                        q.append((nbk, v))
    v = verify(G, out)
    if not v.ok:  # pragma: no cover - gluing is sound by construction
        raise Exhausted(f"block gluing failed: {v.describe()}")
    return out
