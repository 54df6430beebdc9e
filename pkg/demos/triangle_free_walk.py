"""Break the bichromatic cycles of a base coloring of the 4-cube one at a time.

Run: python3 demos/triangle_free_walk.py
"""

from aec.bichromatic import tau
from aec.coloring import proper_edge_coloring
from aec.cycle_breaker import BreakStats, color_triangle_free
from aec.generator import named
from aec.verifier import verify


def main() -> None:
    G = named("hypercube", {"dim": 4})
    c0 = proper_edge_coloring(G)
    print(f"Q4: n={G.n} m={G.m}, base coloring uses {len(c0.colors_used())} colors, tau={tau(c0)}")
    traces, stats = [], BreakStats()
    out = color_triangle_free(G, initial=c0, stats=stats, traces=traces)
    for k, t in enumerate(traces, 1):
        print(f"step {k:2d}: tau {t['tau_before']:2d} -> {t['tau_after']:2d} via {'/'.join(t['case_path'])}"
              f"  cycle {t['cycle']['pair']}  recolor {t['plan']}")
    print(f"final: {verify(G, out).describe()}; {stats.steps} steps, {stats.fallback} by local search")


if __name__ == "__main__":
    main()
