"""Show the reductions applied to graphs with triangles.

Each trace record names the configuration found at a triangle vertex, the
vertices removed, the edges added to the smaller graph, and how the coloring
of the smaller graph was extended back.

Run: python3 demos/triangle_surgery.py
"""

from aec.generator import named, random_regular
from aec.graph import Graph
from aec.reducer import ReduceStats, acyclic_edge_coloring
from aec.verifier import verify


def chorded_ring(copies: int = 3) -> Graph:
    pairs = []
    for k in range(copies):
        v, v0, v1, v2, v3 = (5 * k + i for i in range(5))
        pairs += [(v, v0), (v, v1), (v, v2), (v, v3), (v0, v1), (v1, v2), (v2, v3), (v3, v0), (v1, v3)]
        pairs.append((v2, 5 * ((k + 1) % copies) + 1))
    return Graph(5 * copies, pairs)


def show(name: str, G: Graph) -> None:
    trace, stats = [], ReduceStats()
    c = acyclic_edge_coloring(G, trace=trace, stats=stats)
    print(f"{name}: n={G.n} m={G.m} -> {verify(G, c).describe()}")
    for rec in trace:
        if rec["kind"] == "reduce":
            print(f"  level {rec['level']}: case {rec['case_id']} at {rec['vertex']}, removed {rec['removed']},"
                  f" added {rec['added']}, extended by {rec['method']}")
    leaves = stats.to_json()
    print(f"  leaves: exact {leaves['exact_leaves']}, global search {leaves['heuristic_leaves']},"
          f" triangle-free {leaves['triangle_free_leaves']}, break steps {leaves['break_steps']}")


def main() -> None:
    show("chorded ring", chorded_ring())
    show("C8(1,2)", named("circulant", {"n": 8, "offsets": (1, 2)}))
    show("C11(1,2)", named("circulant", {"n": 11, "offsets": (1, 2)}))
    show("random 4-regular, n=40", random_regular(40, seed=1))


if __name__ == "__main__":
    main()
