from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings

from aec.generator import named
from aec.graph import Graph
from aec.solvers import (
    Exhausted,
    SolverBudget,
    acyclic_chromatic_index,
    exact_color,
    exhaustive_feasible,
    heuristic_color,
)
from aec.verifier import verify

from conftest import bounded_graphs, random_bounded_graph


def test_cycle_indices(c4):
    assert exact_color(c4, 2) is None
    assert acyclic_chromatic_index(c4) == 3
    C5 = named("circulant", {"n": 5, "offsets": (1,)})
    assert acyclic_chromatic_index(C5) == 3


def test_k4_and_k5():
    K4 = Graph(4, list(combinations(range(4), 2)))
    assert acyclic_chromatic_index(K4) == 5
    K5e = Graph(5, [p for p in combinations(range(5), 2) if p != (0, 1)])
    k = acyclic_chromatic_index(K5e)
    assert 4 <= k <= 6
    assert verify(K5e, exact_color(K5e, k), k).ok


def test_trees_need_max_degree():
    star = Graph(5, [(0, i) for i in range(1, 5)])
    assert acyclic_chromatic_index(star) == 4
    path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert acyclic_chromatic_index(path) == 2


def test_budget():
    K5 = named("complete", {"n": 5})
    with pytest.raises(Exhausted):
        exact_color(K5, 4, SolverBudget(node_limit=5))
    with pytest.raises(ValueError):
        SolverBudget(node_limit=0)


@settings(max_examples=40, deadline=None)
@given(bounded_graphs(max_n=7))
def test_monotone_in_k(G):
    a = acyclic_chromatic_index(G)
    for k in range(max(a, 1), 7):
        c = exact_color(G, k)
        assert c is not None and verify(G, c, k).ok


@pytest.mark.parametrize("seed", range(12))
def test_exhaustive_agrees(seed):
    rng = np.random.default_rng(seed)
    G = random_bounded_graph(rng, 6, max_deg=3, p=0.7)
    if G.m > 10:
        pytest.skip("too many edges for enumeration")
    for k in range(1, 5):
        assert exhaustive_feasible(G, k) == (exact_color(G, k) is not None)


@pytest.mark.parametrize("seed", range(10))
def test_heuristic_valid(seed):
    rng = np.random.default_rng(seed)
    G = random_bounded_graph(rng, 24, max_deg=4, p=0.9)
    c = heuristic_color(G, seed=seed)
    assert verify(G, c).ok
