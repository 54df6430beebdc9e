import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aec.bichromatic import tau
from aec.coloring import (
    ColorPermutation,
    EdgeColoring,
    Infeasible,
    anchor_permutations,
    color_set,
    find_anchor_permutation,
    misra_gries,
    permute_colors,
    proper_edge_coloring,
)
from aec.generator import named, random_regular
from aec.graph import Anchor, FreeColor, Graph
from aec.verifier import is_proper

from conftest import bounded_graphs, random_bounded_graph


def test_small_base_colorings():
    C5 = named("circulant", {"n": 5, "offsets": (1,)})
    c = proper_edge_coloring(C5)
    assert is_proper(C5, c) and len(c.colors_used()) == 3
    K44 = named("complete_bipartite", {"a": 4, "b": 4})
    c = proper_edge_coloring(K44)
    assert is_proper(K44, c) and len(c.colors_used()) == 4
    K2 = Graph(2, [(0, 1)])
    assert proper_edge_coloring(K2).colors == [1]


def test_color_set_examples():
    G = Graph(4, [(0, 1), (0, 2), (0, 3)])
    c = EdgeColoring(G, [3, 1, 0])
    assert color_set(c, 0) == {1, 3}
    assert color_set(c, 3) == set()


def test_permutation_basics():
    ident = ColorPermutation.identity()
    assert all(ident(x) == x for x in range(1, 7)) and ident(0) == 0
    p = ColorPermutation.from_mapping({1: 4, 4: 1})
    assert p.images == (4, 2, 3, 1, 5, 6)
    assert p.compose(p.inverse()) == ident
    with pytest.raises(ValueError):
        ColorPermutation((1, 1, 2, 3, 4, 5))


@settings(max_examples=60, deadline=None)
@given(bounded_graphs(max_n=10), st.permutations(range(1, 7)))
def test_tau_invariant_under_permutation(G, images):
    c = proper_edge_coloring(G)
    p = ColorPermutation(tuple(images))
    d = permute_colors(c, p)
    assert tau(d) == tau(c)
    assert is_proper(G, d)


def test_anchor_transposition():
    G = Graph(3, [(0, 1), (1, 2)])
    c = EdgeColoring(G, [1, 4])
    p = find_anchor_permutation(c, [Anchor((0, 1), 4), Anchor((1, 2), 1)])
    assert p.images == (4, 2, 3, 1, 5, 6)
    assert find_anchor_permutation(c, [Anchor((0, 1), 1)]) == ColorPermutation.identity()


def test_anchor_infeasible():
    G = Graph(3, [(0, 1), (1, 2)])
    c = EdgeColoring(G, [1, 4])
    with pytest.raises(Infeasible):
        find_anchor_permutation(c, [Anchor((0, 1), 2), Anchor((1, 2), 2)])
    with pytest.raises(Infeasible):
        find_anchor_permutation(c, [FreeColor(3, 1, frozenset({3}))])


def test_anchor_free_color():
    G = Graph(3, [(0, 1), (1, 2)])
    c = EdgeColoring(G, [1, 2])
    for p in anchor_permutations(c, [Anchor((0, 1), 1), FreeColor(2, 1)]):
        assert p(1) == 1 and p(2) != 2
        break
    else:
        pytest.fail("no permutation found")


@pytest.mark.parametrize("seed", range(20))
def test_misra_gries_proper(seed):
    rng = np.random.default_rng(seed)
    G = random_bounded_graph(rng, int(rng.integers(3, 30)), max_deg=5)
    c = misra_gries(G)
    assert c.is_total() and is_proper(G, c)
    assert max(c.colors, default=0) <= G.max_degree() + 1


@pytest.mark.parametrize("n", [8, 20, 64])
def test_base_coloring_on_regular(n):
    G = random_regular(n, seed=n)
    c = proper_edge_coloring(G)
    assert is_proper(G, c) and len(c.colors_used()) <= 5
