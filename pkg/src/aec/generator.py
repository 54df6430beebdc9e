"""Test instances: seeded random regular graphs and named families."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .graph import Graph, is_triangle_free


class RetryLimit(RuntimeError):
    """The configuration model produced no simple pairing within the retry budget."""


class BadParams(ValueError):
    pass


KINDS = ("random_regular", "circulant", "hypercube", "complete", "complete_bipartite")


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int = 0
    offsets: tuple[int, ...] = field(default_factory=tuple)
    seed: int = 0
    d: int = 4

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParams(f"unknown kind {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.kind == "random_regular" and (self.n < self.d + 1 or (self.n * self.d) % 2):
            raise BadParams(f"random_regular needs n >= {self.d + 1} and n*d even, got n={self.n}")

    def header(self) -> str:
        parts = [f"kind={self.kind}", f"n={self.n}"]
        if self.kind == "random_regular":
            parts += [f"d={self.d}", f"seed={self.seed}", "rng=numpy.PCG64"]
        if self.offsets:
            parts.append("offsets=" + ",".join(map(str, self.offsets)))
        return "aec gen " + " ".join(parts)

    def build(self) -> Graph:
        if self.kind == "random_regular":
            return random_regular(self.n, self.d, self.seed)
        if self.kind == "circulant":
            return named("circulant", {"n": self.n, "offsets": self.offsets})
        if self.kind == "hypercube":
            dim = self.n.bit_length() - 1
            if self.n != 1 << dim:
                raise BadParams(f"hypercube size must be a power of two, got {self.n}")
            return named("hypercube", {"dim": dim})
        if self.kind == "complete":
            return named("complete", {"n": self.n})
        a, b = self.offsets or (self.n // 2, self.n - self.n // 2)
        return named("complete_bipartite", {"a": a, "b": b})


def random_regular(n: int, d: int = 4, seed: int = 0, max_tries: int = 100_000) -> Graph:
    """Simple d-regular graph from the configuration model.

    Whole pairings with a loop or a repeated pair are rejected and resampled,
    so every simple d-regular graph on labelled vertices is equally likely.
    """
    if n < d + 1 or (n * d) % 2:
        raise BadParams(f"need n >= d+1 and n*d even, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_tries):
        pairs = rng.permutation(stubs).reshape(-1, 2)
        lo, hi = pairs.min(axis=1), pairs.max(axis=1)
        if (lo == hi).any():
            continue
        keys = lo * n + hi
        if np.unique(keys).size != keys.size:
            continue
        return Graph(n, zip(lo.tolist(), hi.tolist()))
    raise RetryLimit(f"no simple pairing after {max_tries} tries (n={n}, d={d})")


def _circulant(n: int, offsets) -> Graph:
    if n < 3 or not offsets:
        raise BadParams("circulant needs n >= 3 and at least one offset")
    pairs = set()
    for a in offsets:
        if not 0 < a < n:
            raise BadParams(f"offset {a} out of range for n={n}")
        for i in range(n):
            j = (i + a) % n
            pairs.add((min(i, j), max(i, j)))
    return Graph(n, pairs)


def named(kind: str, params: dict | None = None) -> Graph:
    """Named families: ``complete`` (n), ``complete_bipartite`` (a, b),
    ``hypercube`` (dim) and ``circulant`` (n, offsets)."""
    p = dict(params or {})
    try:
        if kind == "complete":
            n = int(p["n"])
            if n < 1:
                raise BadParams("complete graph needs n >= 1")
            return Graph(n, combinations(range(n), 2))
        if kind == "complete_bipartite":
            a, b = int(p["a"]), int(p["b"])
            if a < 1 or b < 1:
                raise BadParams("complete bipartite graph needs both sides non-empty")
            return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
        if kind == "hypercube":
            dim = int(p["dim"])
            if dim < 1:
                raise BadParams("hypercube needs dim >= 1")
            n = 1 << dim
            return Graph(n, [(x, x ^ (1 << k)) for x in range(n) for k in range(dim) if x < x ^ (1 << k)])
        if kind == "circulant":
            return _circulant(int(p["n"]), tuple(int(a) for a in p["offsets"]))
    except KeyError as exc:
        raise BadParams(f"{kind} is missing parameter {exc.args[0]!r}") from None
    raise BadParams(f"unknown family {kind!r}")


def triangle_free_circulants(count: int, n_min: int = 9, n_max: int = 200) -> list[tuple[int, int, int]]:
    """The first ``count`` pairs ``(n, a, b)`` with C_n(a, b) 4-regular and triangle-free,
    in order of n then offsets."""
    out = []
    for n in range(n_min, n_max + 1):
        for a in range(1, (n + 1) // 2):
            for b in range(a + 1, (n + 1) // 2):
                if 2 * b == n:
                    continue
                G = _circulant(n, (a, b))
                if G.m == 2 * n and is_triangle_free(G):
                    out.append((n, a, b))
                    if len(out) == count:
                        return out
    return out
