import pytest

from aec.bichromatic import ColorState, tau
from aec.breaker_cases import RULES, View, labelings
from aec.coloring import EdgeColoring, proper_edge_coloring
from aec.cycle_breaker import (
    BreakStats,
    ImproperResult,
    NotFound,
    RecoloringPlan,
    apply_plan,
    break_cycle,
    color_triangle_free,
    fallback_search,
    normalize_around_cycle,
)
from aec.generator import named
from aec.graph import Graph
from aec.verifier import verify

from conftest import triangle_free_regular

U, V, U1, U2, U3, V1, V2, V3, X, Y = range(10)


def _fixture(extra):
    """The 6-cycle u v v2 x y u2 in colors (1, 4) plus the given colored edges."""
    base = [(U, V, 1), (V, V2, 4), (V2, X, 1), (X, Y, 4), (Y, U2, 1), (U, U2, 4)]
    triples = base + extra
    n = 1 + max(max(a, b) for a, b, _ in triples)
    G = Graph(n, [(a, b) for a, b, _ in triples])
    return G, EdgeColoring.from_triples(G, triples)


def _first_candidate(G, c, case):
    st = ColorState(c)
    (B,) = st.all_cycles()
    for lab in labelings(st, B):
        if lab.uv == (U, V) and all(k == x for k, x in lab.perm.items()):
            assert lab.case == case
            view = View(st.clone(), lab)
            return next(iter(RULES[case](view)))
    pytest.fail("no identity labeling at uv")


def _named(G, cand):
    return {tuple(sorted(G.edges[e])): x for e, x in cand.plan}


def test_rule_two_shared_colors_first_move():
    G, c = _fixture([(U, U1, 2), (U, U3, 5), (V, V1, 3), (V, V3, 6), (U2, 10, 3), (U2, 11, 6)])
    cand = _first_candidate(G, c, "1.1")
    assert _named(G, cand) == {(U, U1): 3, (U, V): 2}
    out = apply_plan(c, RecoloringPlan(cand.plan))
    assert tau(out) < tau(c)


def test_rule_four_shared_colors_first_move():
    extra = [(U, U1, 2), (U, U3, 5), (V, V1, 2), (V, V3, 5), (U2, 10, 2), (U2, 11, 5), (V2, 12, 2), (V2, 13, 5)]
    G, c = _fixture(extra)
    cand = _first_candidate(G, c, "3")
    assert _named(G, cand) == {(U, V): 3}
    assert verify(G, apply_plan(c, RecoloringPlan(cand.plan))).ok


def test_apply_plan_examples():
    G = Graph(3, [(0, 1), (1, 2)])
    c = EdgeColoring(G, [1, 2])
    assert apply_plan(c, RecoloringPlan([(0, 3)])).colors == [3, 2]
    # a swap is applied simultaneously
    assert apply_plan(c, RecoloringPlan([(0, 2), (1, 1)])).colors == [2, 1]
    with pytest.raises(ImproperResult):
        apply_plan(c, RecoloringPlan([(0, 2)]))
    assert c.colors == [1, 2]


def test_normalize_around_cycle():
    G, c = _fixture([(U, U1, 2), (U, U3, 5), (V, V1, 3), (V, V3, 6)])
    c = EdgeColoring(G, [{1: 6, 4: 2, 2: 1, 6: 4}.get(x, x) for x in c.colors])
    (B,) = ColorState(c).all_cycles()
    perm, roles = normalize_around_cycle(c, B, (U, V))
    assert perm(c.color(U, V)) == 1 and perm(c.color(U, U2)) == 4
    assert roles["u2"] == U2 and roles["v2"] == V2
    assert {roles["u1"], roles["u3"]} == {U1, U3}
    with pytest.raises(ValueError):
        normalize_around_cycle(c, B, (U, U1))


def test_fallback_depth_zero():
    G, c = _fixture([])
    (B,) = ColorState(c).all_cycles()
    with pytest.raises(NotFound):
        fallback_search(G, c, B, depth=0)
    out, tr = fallback_search(G, c, B)
    assert tr.tau_after < tr.tau_before and verify(G, out).ok


def test_break_cycle_drops_tau():
    Q4 = named("hypercube", {"dim": 4})
    c = proper_edge_coloring(Q4)
    st = ColorState(c)
    while st.tau():
        B = min(st.all_cycles())
        out, tr = break_cycle(Q4, st.coloring(), B)
        assert tr.tau_after < tr.tau_before == st.tau()
        st = ColorState(out)
    assert verify(Q4, st.coloring()).ok


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("use_cases", [True, False])
def test_triangle_free_pipeline(seed, use_cases):
    G = triangle_free_regular(12 + 4 * seed, seed)
    c0 = proper_edge_coloring(G)
    stats = BreakStats()
    traces = []
    out = color_triangle_free(G, initial=c0, stats=stats, traces=traces, use_cases=use_cases)
    assert verify(G, out).ok
    assert stats.steps == len(traces) <= tau(c0)
    for t in traces:
        assert t["tau_after"] < t["tau_before"]
    if not use_cases:
        assert stats.case_resolved == 0
