import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from aec.graph import Graph


def to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


def from_nx(g) -> Graph:
    g = nx.convert_node_labels_to_integers(g)
    return Graph(g.number_of_nodes(), g.edges())


def triangle_free_regular(n: int, seed: int) -> Graph:
    """Random 4-regular triangle-free graph: degree-preserving switches that
    remove triangles one at a time."""
    rng = random.Random(seed)
    g = nx.random_regular_graph(4, n, seed=seed)
    while True:
        tri = sorted(v for v, t in nx.triangles(g).items() if t)
        if not tri:
            return Graph(n, g.edges())
        u = rng.choice(tri)
        w = rng.choice(sorted(g[u]))
        x, y = rng.choice(sorted(g.edges()))
        if len({u, w, x, y}) < 4 or g.has_edge(u, x) or g.has_edge(w, y):
            continue
        g.remove_edge(u, w)
        g.remove_edge(x, y)
        g.add_edge(u, x)
        g.add_edge(w, y)


def random_bounded_graph(rng: np.random.Generator, n: int, max_deg: int = 4, p: float = 0.6) -> Graph:
    """Random simple graph with maximum degree at most ``max_deg``."""
    deg = [0] * n
    pairs = []
    cand = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for k in rng.permutation(len(cand)):
        a, b = cand[k]
        if deg[a] < max_deg and deg[b] < max_deg and rng.random() < p:
            pairs.append((a, b))
            deg[a] += 1
            deg[b] += 1
    return Graph(n, pairs)


@st.composite
def bounded_graphs(draw, min_n=2, max_n=10, max_deg=4):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.floats(0.2, 1.0))
    return random_bounded_graph(np.random.default_rng(seed), n, max_deg, p)


@pytest.fixture
def k5():
    return Graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])


@pytest.fixture
def c4():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
