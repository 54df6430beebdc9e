"""End-to-end acceptance checks, one PASS/FAIL line per criterion."""

import json
import statistics
import time
from collections import Counter

import numpy as np
import pytest

from aec.bichromatic import ColorState, exists_ij_path, maximal_path_from, tau
from aec.cli import main
from aec.coloring import misra_gries, proper_edge_coloring
from aec.cycle_breaker import BreakStats, color_triangle_free
from aec.formats import read_coloring, write_graph
from aec.generator import named, random_regular, triangle_free_circulants
from aec.graph import Graph
from aec.reducer import acyclic_edge_coloring
from aec.solvers import acyclic_chromatic_index, exact_color, exhaustive_feasible
from aec.verifier import verify

from conftest import random_bounded_graph

BATCH = 500


def report(capsys, num: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[criterion {num}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def batch_size(seed: int) -> int:
    return 6 + seed % 122 if seed < 400 else 128


@pytest.fixture(scope="module")
def batch(tmp_path_factory):
    """Color seeds 0..499 through the CLI and read the results back."""
    d = tmp_path_factory.mktemp("batch")
    rows = []
    t_start = time.perf_counter()
    for seed in range(BATCH):
        n = batch_size(seed)
        G = random_regular(n, seed=seed)
        g, c, t = d / f"g{seed}.txt", d / f"c{seed}.txt", d / f"t{seed}.json"
        write_graph(G, g)
        t0 = time.perf_counter()
        code = main(["color", str(g), "-o", str(c), "--trace", str(t), "--seed", str(seed)])
        wall = time.perf_counter() - t0
        ok = code == 0 and verify(G, read_coloring(c, G)).ok
        steps = [r for r in json.loads(t.read_text()) if r["kind"] == "break"] if code == 0 else []
        rows.append({"n": n, "ok": ok, "wall": wall, "steps": steps})
    return rows, time.perf_counter() - t_start


def test_criterion_1_end_to_end(batch, capsys):
    rows, total = batch
    good = sum(r["ok"] for r in rows)
    med = statistics.median(r["wall"] for r in rows if r["n"] == 128)
    ok = good == BATCH and med <= 1.0 and total <= 300.0
    report(capsys, 1, ok, f"{good}/{BATCH} verified, median wall at n=128 {med:.3f}s, batch {total:.1f}s")


def test_criterion_2_triangle_free_engine(capsys):
    graphs = [("Q4", named("hypercube", {"dim": 4})), ("K4,4", named("complete_bipartite", {"a": 4, "b": 4}))]
    graphs += [(f"C{n}({a},{b})", named("circulant", {"n": n, "offsets": (a, b)}))
               for n, a, b in triangle_free_circulants(50)]
    bad = []
    total_steps = 0
    for name, G in graphs:
        c0 = proper_edge_coloring(G)
        tau0 = tau(c0)
        traces: list = []
        stats = BreakStats()
        out = color_triangle_free(G, initial=c0, stats=stats, traces=traces)
        total_steps += len(traces)
        if not verify(G, out).ok or tau(out) != 0:
            bad.append(f"{name}: final coloring rejected")
        if len(traces) > tau0:
            bad.append(f"{name}: {len(traces)} steps > tau0 {tau0}")
        if any(t["tau_after"] >= t["tau_before"] for t in traces):
            bad.append(f"{name}: a step did not lower tau")
    ok = not bad
    detail = f"{len(graphs)} graphs, {total_steps} steps, all strictly decreasing" if ok else "; ".join(bad[:5])
    report(capsys, 2, ok, detail)


def test_criterion_3_oracle_anchors(capsys):
    C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    K5 = named("complete", {"n": 5})
    t0 = time.perf_counter()
    c4_none = exact_color(C4, 2) is None
    c4_col = exact_color(C4, 3)
    c4_idx = acyclic_chromatic_index(C4)
    t_c4 = time.perf_counter() - t0
    t0 = time.perf_counter()
    k5_idx = acyclic_chromatic_index(K5)
    k5_col = exact_color(K5, k5_idx)
    t_k5 = time.perf_counter() - t0
    t0 = time.perf_counter()
    pipe = acyclic_edge_coloring(K5)
    t_pipe = time.perf_counter() - t0
    vp = verify(K5, pipe)
    ok = (
        c4_none and c4_idx == 3 and verify(C4, c4_col, 3).ok
        and 5 <= k5_idx <= 6 and verify(K5, k5_col, k5_idx).ok
        and vp.ok and vp.colors_used <= 6
        and max(t_c4, t_k5, t_pipe) <= 30.0
    )
    detail = (f"a'(C4)={c4_idx} (k=2 infeasible: {c4_none}), a'(K5)={k5_idx}, "
              f"pipeline K5 uses {vp.colors_used} colors, slowest check {max(t_c4, t_k5, t_pipe):.2f}s")
    report(capsys, 3, ok, detail)


def small_instances() -> list[tuple[str, Graph]]:
    out = [
        ("K5", named("complete", {"n": 5})),
        ("K4", named("complete", {"n": 4})),
        ("C4", named("circulant", {"n": 4, "offsets": (1,)})),
        ("C5", named("circulant", {"n": 5, "offsets": (1,)})),
        ("K4,4", named("complete_bipartite", {"a": 4, "b": 4})),
    ]
    rng = np.random.default_rng(2024)
    K44 = named("complete_bipartite", {"a": 4, "b": 4})
    for k in range(15):
        keep = rng.random(K44.m) < 0.45 + 0.03 * k
        out.append((f"K4,4-sub{k}", Graph(8, [e for e, f in zip(K44.edges, keep) if f])))
    k = 0
    while len(out) < 50:
        n = int(rng.integers(3, 9))
        G = random_bounded_graph(rng, n, max_deg=4, p=float(rng.uniform(0.3, 0.9)))
        out.append((f"rand{k}", G))
        k += 1
    return out


def test_criterion_4_oracle_cross_check(capsys):
    graphs = small_instances()
    bad = []
    checked = 0
    for name, G in graphs:
        c = exact_color(G, 6)
        if c is None or not verify(G, c, 6).ok:
            bad.append(f"{name}: no verified 6-coloring")
            continue
        if G.m <= 10 and G.m:
            a = acyclic_chromatic_index(G)
            for k in (a - 1, a):
                if k < 1:
                    continue
                checked += 1
                if exhaustive_feasible(G, k) != (exact_color(G, k) is not None):
                    bad.append(f"{name}: exhaustive and backtracking disagree at k={k}")
    ok = not bad and len(graphs) == 50
    detail = f"{len(graphs)} instances feasible at k=6, {checked} exhaustive comparisons agree"
    report(capsys, 4, ok, detail if ok else "; ".join(bad[:5]))


def test_criterion_5_base_coloring(capsys):
    rng = np.random.default_rng(5)
    bad = 0
    worst = 0
    for _ in range(1000):
        G = random_bounded_graph(rng, int(rng.integers(2, 40)), max_deg=4, p=float(rng.uniform(0.1, 1.0)))
        c = misra_gries(G)
        used = len(c.colors_used())
        worst = max(worst, used)
        if not c.is_total() or not verify(G, c, 5).proper or used > 5:
            bad += 1
    report(capsys, 5, bad == 0, f"1000 graphs, {bad} failures, at most {worst} colors")


def _bfs_component(st: ColorState, u: int, i: int, j: int) -> set[int]:
    seen, todo = {u}, [u]
    while todo:
        x = todo.pop()
        for col in (i, j):
            y = st.nb[x][col]
            if y != -1 and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def test_criterion_6_alternating_paths(capsys):
    rng = np.random.default_rng(6)
    samples = bad = 0
    while samples < 10_000:
        G = random_bounded_graph(rng, int(rng.integers(3, 16)), max_deg=4, p=float(rng.uniform(0.3, 1.0)))
        order = [int(e) for e in rng.permutation(G.m)]
        c = proper_edge_coloring(G, order)
        st = ColorState(c)
        for _ in range(20):
            u = int(rng.integers(G.n))
            missing = [x for x in range(1, 7) if x not in st.colors_at(u)]
            j = int(rng.choice(missing))
            i = int(rng.choice([x for x in range(1, 7) if x != j]))
            samples += 1
            P = maximal_path_from(st, u, i, j)
            comp = _bfs_component(st, u, i, j)
            first, second = (i, j) if i in st.colors_at(u) else (j, i)
            walk_ok = all(
                st.col[G.edge_id(a, b)] == (first, second)[k % 2]
                for k, (a, b) in enumerate(zip(P.vertices, P.vertices[1:]))
            )
            on = set(P.vertices)
            if on != comp or len(on) != len(P.vertices) or not walk_ok:
                bad += 1
                continue
            if any(exists_ij_path(st, u, w, i, j) for w in range(G.n) if w not in on):
                bad += 1
            elif not all(exists_ij_path(st, u, w, i, j) for w in P.vertices[1:]):
                bad += 1
    report(capsys, 6, bad == 0, f"{samples} samples, {bad} disagreements with the search oracle")


def test_criterion_7_telemetry(batch, capsys):
    rows, _ = batch
    labels = Counter()
    for r in rows:
        for s in r["steps"]:
            labels[s["case_path"][0]] += 1
    steps = sum(labels.values())
    searched = labels["fallback"] + labels["heuristic"]
    cased = steps - searched
    frac = cased / steps if steps else float("nan")
    correct = all(r["ok"] for r in rows)
    detail = (f"{steps} break steps over the criterion-1 batch: {cased} by case rules ({frac:.1%}), "
              f"{labels['fallback']} by local search, {labels['heuristic']} by global search")
    report(capsys, 7, correct, detail)


def test_criterion_8_determinism(tmp_path, capsys):
    graphs = {
        "rr40": random_regular(40, seed=11),
        "rr97": random_regular(97, seed=3),
        "q4": named("hypercube", {"dim": 4}),
        "c13": named("circulant", {"n": 13, "offsets": (1, 5)}),
    }
    mismatches = []
    runs = 0
    for name, G in graphs.items():
        g = tmp_path / f"{name}.txt"
        write_graph(G, g)
        for flags in ([], ["--no-case-table"], ["--json", "--seed", "7"]):
            outs = []
            for k in range(2):
                c, t = tmp_path / f"{name}.{k}.col", tmp_path / f"{name}.{k}.trace"
                assert main(["color", str(g), "-o", str(c), "--trace", str(t), *flags]) == 0
                outs.append((c.read_bytes(), t.read_bytes()))
            runs += 1
            if outs[0] != outs[1]:
                mismatches.append(f"{name} {' '.join(flags)}")
    ok = not mismatches
    report(capsys, 8, ok, f"{runs} paired runs byte-identical" if ok else "differ: " + ", ".join(mismatches))

