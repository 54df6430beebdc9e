import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aec.generator import BadParams, GenSpec, named, random_regular, triangle_free_circulants
from aec.graph import is_simple_4_regular, is_triangle_free

from conftest import to_nx


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 60), st.integers(0, 10**6))
def test_random_regular_is_simple_and_regular(n, seed):
    G = random_regular(n, seed=seed)
    assert is_simple_4_regular(G) and G.n == n and G.m == 2 * n


def test_random_regular_is_deterministic():
    assert random_regular(40, seed=7) == random_regular(40, seed=7)
    assert random_regular(40, seed=7) != random_regular(40, seed=8)


@pytest.mark.parametrize("n, d", [(4, 4), (7, 3), (0, 4)])
def test_random_regular_bad_params(n, d):
    with pytest.raises(BadParams):
        random_regular(n, d)


def test_named_families():
    assert named("complete", {"n": 5}).m == 10
    assert named("complete_bipartite", {"a": 4, "b": 4}).m == 16
    Q4 = named("hypercube", {"dim": 4})
    assert nx.is_isomorphic(to_nx(Q4), nx.hypercube_graph(4))
    C = named("circulant", {"n": 10, "offsets": (1, 3)})
    assert nx.is_isomorphic(to_nx(C), nx.circulant_graph(10, [1, 3]))
    with pytest.raises(BadParams):
        named("petersen")
    with pytest.raises(BadParams):
        named("circulant", {"n": 10})
    with pytest.raises(BadParams):
        named("circulant", {"n": 10, "offsets": (11,)})


def test_triangle_free_circulants():
    out = triangle_free_circulants(50)
    assert len(out) == 50 and len(set(out)) == 50
    for n, a, b in out:
        G = named("circulant", {"n": n, "offsets": (a, b)})
        assert is_simple_4_regular(G) and is_triangle_free(G)


def test_genspec():
    spec = GenSpec("random_regular", 20, seed=3)
    assert "seed=3" in spec.header() and "rng=numpy.PCG64" in spec.header()
    assert spec.build() == random_regular(20, seed=3)
    assert GenSpec("hypercube", 16).build().n == 16
    with pytest.raises(BadParams):
        GenSpec("hypercube", 12).build()
    with pytest.raises(BadParams):
        GenSpec("random_regular", 7, d=3)
    with pytest.raises(BadParams):
        GenSpec("mystery", 4)
