"""Drive a proper 6-edge-coloring of a triangle-free 4-regular graph to acyclic.

Each step picks the canonically smallest bichromatic cycle ``B`` and replaces
the coloring by one with strictly fewer bichromatic cycles. Steps are found by
the case rules in :mod:`aec.breaker_cases`; when none of them verifies, a
bounded best-first search over local recolorings takes over.
"""

from __future__ import annotations

import heapq
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .bichromatic import BichromaticCycle, ColorState
from .breaker_cases import RULES, Skip, View, labelings
from .coloring import K, ColorPermutation, EdgeColoring, proper_edge_coloring
from .graph import Graph
from .verifier import verify

log = logging.getLogger(__name__)

MAX_NESTING = 3


class ImproperResult(ValueError):
    """A recoloring plan would make the coloring improper."""


class CaseExhausted(RuntimeError):
    """Neither the case rules nor the local search could break the cycle."""


class NotFound(Exception):
    """The bounded local search found no improving plan."""


@dataclass
class RecoloringPlan:
    assignments: list[tuple[int, int]] = field(default_factory=list)  # (edge id, color)

    def triples(self, G: Graph) -> list[list[int]]:
        return [[*G.edges[e], x] for e, x in self.assignments]


@dataclass
class CaseTrace:
    cycle: BichromaticCycle
    case_path: list[str]
    plan: RecoloringPlan
    tau_before: int
    tau_after: int

    def to_json(self, G: Graph) -> dict:
        return {
            "kind": "break",
            "cycle": self.cycle.to_json(),
            "case_path": list(self.case_path),
            "plan": self.plan.triples(G),
            "tau_before": self.tau_before,
            "tau_after": self.tau_after,
        }


@dataclass
class BreakStats:
    steps: int = 0
    case_hits: Counter = field(default_factory=Counter)
    fallback: int = 0
    heuristic: int = 0
    symmetric: int = 0
    nested: int = 0

    @property
    def case_resolved(self) -> int:
        return self.steps - self.fallback - self.heuristic

    def merge(self, other: "BreakStats") -> None:
        self.steps += other.steps
        self.case_hits.update(other.case_hits)
        self.fallback += other.fallback
        self.heuristic += other.heuristic
        self.symmetric += other.symmetric
        self.nested += other.nested


def apply_plan(c: EdgeColoring, plan: RecoloringPlan) -> EdgeColoring:
    """Apply all assignments at once; ImproperResult leaves ``c`` untouched."""
    out = c.copy()
    for e, x in plan.assignments:
        out.colors[e] = x
    G = c.graph
    touched = {v for e, _ in plan.assignments for v in G.edges[e]}
    for v in touched:
        seen = set()
        for _, e in G.inc[v]:
            x = out.colors[e]
            if x and x in seen:
                raise ImproperResult(f"color {x} repeated at vertex {v}")
            seen.add(x)
    return out


def normalize_around_cycle(
    c: EdgeColoring, B: BichromaticCycle, uv: tuple[int, int] | None = None
) -> tuple[ColorPermutation, dict[str, int]]:
    """Permutation making ``B`` a (4, 1)-cycle with ``c(uv) = 1``, plus role labels.

    ``uv`` defaults to the first edge of ``B``. ``u1, u3`` (``v1, v3``) are the
    remaining neighbors of ``u`` (``v``) in increasing color order.
    """
    G = c.graph
    u, v = uv if uv is not None else B.vertices[:2]
    cuv = c.color(u, v)
    if cuv not in B.color_pair:
        raise ValueError("uv is not an edge of B")
    cb = B.color_pair[0] if B.color_pair[1] == cuv else B.color_pair[1]
    perm = ColorPermutation.from_mapping({cuv: 1, cb: 4})
    roles = {"u": u, "v": v}
    for x, tag in ((u, "u"), (v, "v")):
        other = v if x == u else u
        rest = sorted((c.colors[e], w) for w, e in G.inc[x] if w != other and c.colors[e] != cb)
        for (_, w), k in zip(rest, (1, 3)):
            roles[f"{tag}{k}"] = w
        for w, e in G.inc[x]:
            if c.colors[e] == cb:
                roles[f"{tag}2"] = w
    return perm, roles


# --------------------------------------------------------------------------
# engine


class _Engine:
    def __init__(self, st: ColorState, use_cases: bool, stats: BreakStats, node_limit: int = 4000):
        self.st = st
        self.use_cases = use_cases
        self.stats = stats
        self.node_limit = node_limit

    def _attempt(self, B, cand, depth):
        st = self.st
        final: dict[int, int] = {}
        for e, x in cand.plan:
            final[e] = x
        changed = [e for e, x in final.items() if st.col[e] != x]
        if not changed:
            return None
        before = st.cycles_touching(changed)
        try:
            undo = st.apply([(e, final[e]) for e in changed])
        except ValueError:
            return None
        after = st.cycles_touching(changed)
        if B in after:
            st.undo(undo)
            return None
        d = len(after) - len(before)
        label = cand.label + ("~" if cand.derived_by_symmetry else "")
        if d < 0:
            return [label], undo
        if d == 0 and after and depth + 1 < MAX_NESTING:
            sub = self.by_cases(min(after), depth + 1)
            if sub is not None:
                labels, undo2 = sub
                return [label, *labels], undo + undo2
        st.undo(undo)
        return None

    def by_cases(self, B: BichromaticCycle, depth: int = 0):
        for lab in labelings(self.st, B):
            view = View(self.st.clone(), lab)
            try:
                for cand in RULES[lab.case](view):
                    res = self._attempt(B, cand, depth)
                    if res is not None:
                        return res
            except Skip:
                continue
        return None

    def by_search(self, B: BichromaticCycle, radius: int, depth: int, node_limit: int):
        final = _search(self.st, B, radius, depth, node_limit)
        undo = self.st.apply(list(final.items()))
        return ["fallback"], undo

    def step(self, B: BichromaticCycle):
        if self.use_cases:
            res = self.by_cases(B)
            if res is not None:
                return res
        for radius, depth, mult in ((2, 4, 1), (3, 6, 4)):
            try:
                return self.by_search(B, radius, depth, self.node_limit * mult)
            except NotFound:
                continue
        raise CaseExhausted(f"no plan breaks {B}")


def _region(G: Graph, seeds, radius: int) -> set[int]:
    seen = set(seeds)
    frontier = list(seen)
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in G.adj[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _search(st: ColorState, B: BichromaticCycle, radius: int, depth: int, node_limit: int) -> dict[int, int]:
    """Best-first search for a short plan that lowers the cycle count.

    Moves recolor one region edge with a free color or swap the colors of two
    incident region edges. Raises NotFound when the node budget runs out.
    """
    if depth <= 0:
        raise NotFound("empty plans cannot lower the cycle count")
    G = st.G
    region = _region(G, B.vertices, radius)
    redges = [e for e, (a, b) in enumerate(G.edges) if a in region and b in region]
    orig = {e: st.col[e] for e in redges}
    through = {e: st.cycles_touching([e]) for e in redges}
    pairs = [
        (e, f)
        for v in sorted(region)
        for (_, e), (_, f) in combinations(G.inc[v], 2)
        if e in orig and f in orig
    ]

    def score(plan: dict[int, int]):
        changed = list(plan)
        before = set().union(*(through[e] for e in changed))
        try:
            undo = st.apply(list(plan.items()))
        except ValueError:
            return None
        after = st.cycles_touching(changed)
        st.undo(undo)
        return len(after) - len(before)

    heap = [(0, 0, 0, ())]
    seen = {()}
    counter = 1
    nodes = 0
    while heap:
        _, _, _, key = heapq.heappop(heap)
        if len(key) >= depth:
            continue
        base = dict(key)
        undo = st.apply(list(base.items())) if base else []
        moves = []
        for e in redges:
            for x in range(1, K + 1):
                if x != st.col[e] and st.can_set(e, x):
                    moves.append({e: x})
        for e, f in pairs:
            if st.col[e] != st.col[f]:
                moves.append({e: st.col[f], f: st.col[e]})
        st.undo(undo)
        for mv in moves:
            plan = dict(base)
            plan.update(mv)
            plan = {e: x for e, x in plan.items() if orig[e] != x}
            nkey = tuple(sorted(plan.items()))
            if not plan or nkey in seen:
                continue
            seen.add(nkey)
            nodes += 1
            if nodes > node_limit:
                raise NotFound(f"node limit {node_limit} reached")
            d = score(plan)
            if d is None:
                continue
            if d < 0:
                return plan
            heapq.heappush(heap, (d, len(nkey), counter, nkey))
            counter += 1
    raise NotFound("search space exhausted")


# --------------------------------------------------------------------------
# public operations


def break_cycle(
    G: Graph, c: EdgeColoring, B: BichromaticCycle, use_cases: bool = True
) -> tuple[EdgeColoring, CaseTrace]:
    st = ColorState(c)
    stats = BreakStats()
    tau0 = st.tau()
    labels, undo = _Engine(st, use_cases, stats).step(B)
    out = st.coloring()
    changed = sorted({e for e, _ in undo if out.colors[e] != c.colors[e]})
    plan = RecoloringPlan([(e, out.colors[e]) for e in changed])
    return out, CaseTrace(B, labels, plan, tau0, st.tau())


def fallback_search(
    G: Graph, c: EdgeColoring, B: BichromaticCycle, radius: int = 2, depth: int = 4, node_limit: int = 4000
) -> tuple[EdgeColoring, CaseTrace]:
    st = ColorState(c)
    tau0 = st.tau()
    plan = _search(st, B, radius, depth, node_limit)
    out = apply_plan(c, RecoloringPlan(sorted(plan.items())))
    return out, CaseTrace(B, ["fallback"], RecoloringPlan(sorted(plan.items())), tau0, ColorState(out).tau())


def color_triangle_free(
    G: Graph,
    *,
    use_cases: bool = True,
    seed: int = 0,
    initial: EdgeColoring | None = None,
    stats: BreakStats | None = None,
    traces: list | None = None,
) -> EdgeColoring:
    """Acyclic 6-edge-coloring of a triangle-free graph of max degree 4 by
    repeatedly breaking the smallest bichromatic cycle."""
    from .solvers import SolverBudget, heuristic_color

    stats = stats if stats is not None else BreakStats()
    c0 = initial if initial is not None else proper_edge_coloring(G)
    st = ColorState(c0)
    cycles = set(st.all_cycles())
    tau0 = len(cycles)
    engine = _Engine(st, use_cases, stats)
    steps = 0
    while cycles:
        B = min(cycles)
        tau_before = len(cycles)
        try:
            labels, undo = engine.step(B)
        except CaseExhausted:
            log.info("local rules exhausted on %s; running global search", B)
            out = heuristic_color(G, SolverBudget(), seed=seed, initial=st.coloring())
            stats.heuristic += 1
            stats.steps += 1
            stats.case_hits["heuristic"] += 1
            if traces is not None:
                changed = [e for e in range(G.m) if out.colors[e] != st.col[e]]
                plan = RecoloringPlan([(e, out.colors[e]) for e in changed])
                traces.append(CaseTrace(B, ["heuristic"], plan, tau_before, 0).to_json(G))
            st = ColorState(out)
            cycles = set()
            break
        changed = sorted({e for e, _ in undo})
        orig = {}
        for e, x in undo:
            orig.setdefault(e, x)
        changed = [e for e in changed if st.col[e] != orig[e]]
        after = st.cycles_touching(changed)
        redo = st.apply([(e, orig[e]) for e in changed])
        before = st.cycles_touching(changed)
        st.undo(redo)
        cycles = (cycles - before) | after
        steps += 1
        stats.steps += 1
        stats.case_hits[labels[0]] += 1
        if labels[0] == "fallback":
            stats.fallback += 1
        if labels[0].endswith("~"):
            stats.symmetric += 1
        if len(labels) > 1:
            stats.nested += 1
        if len(cycles) >= tau_before:  # pragma: no cover - guarded by _attempt
            raise AssertionError("cycle count did not drop")
        if traces is not None:
            plan = RecoloringPlan([(e, st.col[e]) for e in changed])
            traces.append(CaseTrace(B, labels, plan, tau_before, len(cycles)).to_json(G))
    assert steps <= tau0
    out = st.coloring()
    v = verify(G, out)
    if not v.ok:  # pragma: no cover
        raise CaseExhausted(f"final coloring rejected: {v.describe()}")
    return out
