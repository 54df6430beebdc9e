from itertools import combinations

import pytest

from aec.coloring import find_anchor_permutation
from aec.generator import named, random_regular
from aec.graph import Anchor, Graph, apply_surgery, is_simple_4_regular
from aec.reducer import (
    SHAPES,
    ReduceStats,
    acyclic_edge_coloring,
    build_reduction,
    candidate_vertices,
    classify_triangle_config,
    configurations,
    neighbor_shape,
    solve_delta4,
)
from aec.verifier import verify


def chorded_ring(copies: int = 3) -> Graph:
    """Copies of a 4-cycle plus chord plus hub, with v2 of each copy joined to v0 of the next."""
    pairs = []
    for k in range(copies):
        v, v0, v1, v2, v3 = (5 * k + i for i in range(5))
        pairs += [(v, v0), (v, v1), (v, v2), (v, v3), (v0, v1), (v1, v2), (v2, v3), (v3, v0), (v1, v3)]
        pairs.append((v2, 5 * ((k + 1) % copies) + 1))
    return Graph(5 * copies, pairs)


def shared_apex_pair() -> Graph:
    """Two copies of a hub on a path v0 v1 v2 v3 where v1 and v2 share a further neighbor."""
    pairs = []
    stubs = []
    for off in (0, 6):
        v, v0, v1, v2, v3, w = (off + i for i in range(6))
        pairs += [(v, v0), (v, v1), (v, v2), (v, v3), (v0, v1), (v1, v2), (v2, v3), (v1, w), (v2, w)]
        stubs.append((v0, v3, w))
    (a0, a3, aw), (b0, b3, bw) = stubs
    pairs += [(a0, b0), (a0, b3), (a3, b3), (a3, bw), (aw, bw), (aw, b0)]
    return Graph(12, pairs)


def test_octahedron_is_colored_directly():
    C6 = named("circulant", {"n": 6, "offsets": (1, 2)})
    cfg = classify_triangle_config(C6, 0)
    assert (cfg.case_id, cfg.pattern) == ("1.2", "a")
    with pytest.raises(ValueError):
        build_reduction(C6, cfg)
    assert verify(C6, acyclic_edge_coloring(C6)).ok


def test_k5_classification(k5):
    assert neighbor_shape(k5, 0) == "K5"
    cfg = classify_triangle_config(k5, 0)
    assert cfg.case_id == "K5"
    with pytest.raises(ValueError):
        build_reduction(k5, cfg)


def test_triangle_free_vertex():
    Q4 = named("hypercube", {"dim": 4})
    assert neighbor_shape(Q4, 0) is None
    with pytest.raises(ValueError):
        classify_triangle_config(Q4, 0)


def _graphs():
    yield chorded_ring()
    yield shared_apex_pair()
    for s in range(40):
        yield random_regular(10 + s % 20, seed=s)
    for n in (7, 9, 11):
        yield named("circulant", {"n": n, "offsets": (1, 2)})


@pytest.mark.parametrize("G", list(_graphs()), ids=lambda G: f"n{G.n}m{G.m}h{hash(G) % 997}")
def test_bindings_satisfy_shape(G):
    for _, v, shape in candidate_vertices(G):
        for cfg in configurations(G, v):
            assert cfg.shape == shape
            if shape == "K5":
                continue
            r = cfg.roles
            order = [r["v0"], r["v1"], r["v2"], r["v3"]]
            got = {(i, j) for i, j in combinations(range(4), 2) if G.has_edge(order[i], order[j])}
            assert got == SHAPES[shape]
            assert all(G.has_edge(v, x) for x in order)


def _check_surgery(G, cfg):
    spec = build_reduction(G, cfg)
    H, vmap = apply_surgery(G, spec)
    assert H.n == G.n - len(spec.removed_vertices) + spec.added_vertices
    assert H.max_degree() <= 4
    assert cfg.v in spec.removed_vertices
    for con in spec.anchor_constraints:
        if isinstance(con, Anchor):
            a, b = con.edge
            assert H.has_edge(vmap[a], vmap[b])
    return spec, H, vmap


def test_surgery_case_1_1():
    G = chorded_ring()
    assert is_simple_4_regular(G)
    cfg = classify_triangle_config(G, 0)
    assert cfg.case_id == "1.1"
    spec, H, _ = _check_surgery(G, cfg)
    assert H.n == G.n - 4 and H.m == G.m - 11 + 2
    assert verify(G, acyclic_edge_coloring(G)).ok


def test_surgery_case_2_2_1():
    G = shared_apex_pair()
    assert is_simple_4_regular(G)
    cfg = classify_triangle_config(G, 0)
    assert cfg.case_id == "2.2.1" and cfg.roles["v5"] == cfg.roles["p2"]
    spec, H, _ = _check_surgery(G, cfg)
    assert spec.added_vertices == 0 and H.n == G.n - 3
    trace = []
    assert verify(G, acyclic_edge_coloring(G, trace=trace)).ok


def test_surgery_case_4():
    G = random_regular(15, seed=1)
    cfg = next(c for c in configurations(G, 10) if c.case_id == "4")
    spec, H, _ = _check_surgery(G, cfg)
    assert spec.added_vertices == 2 and H.n == G.n - 3
    assert is_simple_4_regular(H)


@pytest.mark.parametrize("seed", range(15))
def test_anchors_realizable(seed):
    G = random_regular(16 + seed, seed=seed)
    for _, v, _shape in candidate_vertices(G)[:4]:
        for cfg in configurations(G, v)[:2]:
            spec, H, vmap = _check_surgery(G, cfg)
            cH = solve_delta4(H)
            assert verify(H, cH).ok
            anchors = [
                Anchor((vmap[a.edge[0]], vmap[a.edge[1]]), a.color)
                for a in spec.anchor_constraints
                if isinstance(a, Anchor)
            ]
            p = find_anchor_permutation(cH, anchors)
            for a in anchors:
                assert p(cH.color(*a.edge)) == a.color


def test_c8_through_surgery():
    G = named("circulant", {"n": 8, "offsets": (1, 2)})
    trace, stats = [], ReduceStats()
    c = acyclic_edge_coloring(G, trace=trace, stats=stats)
    assert verify(G, c).ok
    assert stats.reductions >= 1
    rec = next(t for t in trace if t["kind"] == "reduce")
    keys = {"kind", "level", "case_id", "vertex", "removed", "added", "anchors", "method", "extension_plan"}
    assert keys <= rec.keys()
    assert rec["method"] in ("script", "completion", "global")


def test_triangle_free_goes_to_breaker():
    Q4 = named("hypercube", {"dim": 4})
    stats = ReduceStats()
    trace = []
    assert verify(Q4, acyclic_edge_coloring(Q4, stats=stats, trace=trace)).ok
    assert stats.reductions == 0 and stats.triangle_free_leaves == 1
    assert all(t["kind"] == "break" for t in trace)


def test_disconnected_and_small():
    G = Graph(9, [(0, 1), (1, 2), (2, 0), (3, 4), (5, 6), (6, 7), (7, 8), (5, 8)])
    assert verify(G, solve_delta4(G)).ok
    assert verify(Graph(3), acyclic_edge_coloring(Graph(3))).ok


@pytest.mark.parametrize("use_cases", [True, False])
@pytest.mark.parametrize("seed", range(10))
def test_random_regular_pipeline(seed, use_cases):
    G = random_regular(10 + 7 * seed, seed=seed)
    c = acyclic_edge_coloring(G, seed=seed, use_cases=use_cases)
    v = verify(G, c)
    assert v.ok and v.colors_used <= 6
