"""Exact acyclic chromatic indices of a few small graphs.

Run: python3 demos/small_oracle.py
"""

import time

from aec.generator import named
from aec.solvers import acyclic_chromatic_index, exact_color
from aec.verifier import verify

GRAPHS = {
    "C4": ("circulant", {"n": 4, "offsets": (1,)}),
    "C5": ("circulant", {"n": 5, "offsets": (1,)}),
    "K4": ("complete", {"n": 4}),
    "K5": ("complete", {"n": 5}),
    "K4,4": ("complete_bipartite", {"a": 4, "b": 4}),
    "octahedron": ("circulant", {"n": 6, "offsets": (1, 2)}),
    "Q4": ("hypercube", {"dim": 4}),
}


def main() -> None:
    print(f"{'graph':12s} {'n':>3s} {'m':>3s} {'a_prime':>7s} {'seconds':>8s}")
    for name, (kind, params) in GRAPHS.items():
        G = named(kind, params)
        t0 = time.perf_counter()
        a = acyclic_chromatic_index(G)
        assert verify(G, exact_color(G, a), a).ok
        print(f"{name:12s} {G.n:3d} {G.m:3d} {a:7d} {time.perf_counter() - t0:8.3f}")


if __name__ == "__main__":
    main()
