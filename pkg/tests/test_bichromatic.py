from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from aec.bichromatic import (
    AmbiguousStart,
    ColorState,
    enumerate_bichromatic_cycles,
    exists_ij_path,
    maximal_path_from,
    pair_components,
    tau,
)
from aec.coloring import EdgeColoring, proper_edge_coloring
from aec.graph import Graph

from conftest import bounded_graphs, to_nx


def brute_force_tau(G: Graph, c: EdgeColoring) -> int:
    """Count simple cycles whose edges alternate between two colors."""
    count = 0
    for cyc in nx.simple_cycles(to_nx(G)):
        if len(cyc) % 2:
            continue
        cols = [c.color(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
        if len(set(cols[0::2])) == 1 and len(set(cols[1::2])) == 1 and cols[0] != cols[1]:
            count += 1
    return count


def test_path_on_p3():
    G = Graph(3, [(0, 1), (1, 2)])
    c = EdgeColoring(G, [1, 2])
    P = maximal_path_from(c, 0, 1, 2)
    assert P.vertices == (0, 1, 2)
    assert exists_ij_path(c, 0, 2, 1, 2)
    assert not exists_ij_path(c, 0, 2, 1, 3)


def test_ambiguous_start(c4):
    c = EdgeColoring(c4, [1, 2, 2, 1])
    with pytest.raises(AmbiguousStart):
        maximal_path_from(c, 0, 1, 2)


def test_tau_examples(c4):
    # edges of C4 in sorted order: (0,1) (0,3) (1,2) (2,3)
    c = EdgeColoring.from_triples(c4, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)])
    assert tau(c) == 1
    K4 = Graph(4, list(combinations(range(4), 2)))
    match = {(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2, (0, 3): 3, (1, 2): 3}
    c = EdgeColoring.from_triples(K4, [(a, b, x) for (a, b), x in match.items()])
    assert tau(c) == 3
    assert {cyc.color_pair for cyc in enumerate_bichromatic_cycles(c)} == {(1, 2), (1, 3), (2, 3)}


@settings(max_examples=120, deadline=None)
@given(bounded_graphs(max_n=10))
def test_tau_matches_cycle_oracle(G):
    c = proper_edge_coloring(G)
    assert tau(c) == brute_force_tau(G, c)


@settings(max_examples=80, deadline=None)
@given(bounded_graphs(max_n=12))
def test_pair_decomposition(G):
    c = proper_edge_coloring(G)
    cols = sorted(c.colors_used())
    for i, j in combinations(cols, 2):
        paths, cycles = pair_components(c, i, j)
        vs = [v for comp in paths + cycles for v in comp]
        assert len(vs) == len(set(vs))
        touched = {v for e, (a, b) in enumerate(G.edges) if c.colors[e] in (i, j) for v in (a, b)}
        assert set(vs) == touched
        assert len(cycles) == sum(1 for cyc in enumerate_bichromatic_cycles(c) if cyc.color_pair == (i, j))


@settings(max_examples=60, deadline=None)
@given(bounded_graphs(max_n=12))
def test_state_apply_undo_roundtrip(G):
    c = proper_edge_coloring(G)
    st = ColorState(c)
    before = list(st.col)
    t0 = st.tau()
    if G.m:
        e = 0
        free = [x for x in range(1, 7) if st.can_set(e, x)]
        if free:
            undo = st.apply([(e, free[0])])
            st.undo(undo)
    assert list(st.col) == before and st.tau() == t0
