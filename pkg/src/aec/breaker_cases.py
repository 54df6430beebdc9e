"""Case rules for breaking one bichromatic cycle in a triangle-free 4-regular graph.

Every rule works on a *normalized view* of the coloring around an edge ``uv``
of the cycle ``B``: ``B`` is a (4, 1)-cycle, ``c(uv) = 1`` and
``c(uu2) = c(vv2) = 4``. The two remaining edges at ``u`` are ``uu1`` and
``uu3``, those at ``v`` are ``vv1`` and ``vv3``; their normalized colors
depend on how many colors ``u`` and ``v`` share:

* two shared colors:   ``(uu1, uu3, vv1, vv3) = (2, 5, 3, 6)``
* three shared colors: ``(uu1, uu3, vv1, vv3) = (2, 5, 3, 5)``
* four shared colors:  ``(uu1, uu3, vv1, vv3) = (2, 5, 2, 5)``

A rule is a generator. It inspects color sets ``C(x)`` and alternating-path
queries and yields :class:`Candidate` plans in the order the case analysis
prescribes. The executor verifies each candidate (properness and a strict
drop in the number of bichromatic cycles) and asks for the next one when a
candidate fails. Plans are never trusted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .bichromatic import BichromaticCycle, ColorState

_TOKEN = re.compile(r"[uvx]\d?")


class Skip(Exception):
    """The rule cannot proceed on this labeling (bad edge name, improper step)."""


@dataclass
class Candidate:
    label: str
    plan: list[tuple[int, int]]  # (edge id, actual color), applied simultaneously
    derived_by_symmetry: bool = False


@dataclass
class Labeling:
    case: str
    uv: tuple[int, int]
    roles: dict[str, int]
    perm: dict[int, int]  # actual color -> normalized color


class View:
    """Normalized read/write access to a private copy of the coloring."""

    def __init__(self, st: ColorState, lab: Labeling):
        self.st = st
        self.lab = lab
        self.roles = dict(lab.roles)
        self.perm = dict(lab.perm)
        self.inv = {n: a for a, n in self.perm.items()}
        self.prefix: list[tuple[int, int]] = []
        self.prefix_labels: list[str] = []

    # queries ---------------------------------------------------------------

    def C(self, name: str) -> set[int]:
        return {self.perm[x] for x in self.st.colors_at(self.roles[name])}

    def p(self, i: int, j: int, a: str, b: str) -> bool:
        """Is there an (i, j)-alternating path between roles ``a`` and ``b``?"""
        return self.st.has_path(self.roles[a], self.roles[b], self.inv[i], self.inv[j])

    def edge(self, name: str) -> int:
        toks = _TOKEN.findall(name)
        if len(toks) != 2 or "".join(toks) != name:
            raise Skip(f"bad edge name {name}")
        a, b = (self.roles.get(t) for t in toks)
        if a is None or b is None or not self.st.G.has_edge(a, b):
            raise Skip(f"{name} is not an edge here")
        return self.st.G.edge_id(a, b)

    def c(self, name: str) -> int:
        return self.perm[self.st.col[self.edge(name)]]

    def bind(self, name: str, vertex: int) -> None:
        if vertex < 0:
            raise Skip(f"cannot bind {name}")
        self.roles[name] = vertex

    def nbr(self, name: str, color: int) -> int:
        return self.st.nb[self.roles[name]][self.inv[color]]

    # plans -----------------------------------------------------------------

    def _assign(self, kw: dict[str, int]) -> list[tuple[int, int]]:
        return [(self.edge(k), self.inv[x]) for k, x in kw.items()]

    def let(self, label: str, _sym: bool = False, **kw: int) -> Candidate:
        return Candidate(label, self.prefix + self._assign(kw), _sym)

    def first(self, label: str = "", **kw: int) -> None:
        """Recolor now; later queries see the change and plans include it."""
        plan = self._assign(kw)
        try:
            self.st.apply(plan)
        except ValueError as exc:
            raise Skip(str(exc)) from None
        self.prefix += plan
        if label:
            self.prefix_labels.append(label)

    def rename(self, a: int, b: int) -> None:
        """Swap the normalized names of colors ``a`` and ``b``."""
        xa, xb = self.inv[a], self.inv[b]
        self.perm[xa], self.perm[xb] = b, a
        self.inv = {n: x for x, n in self.perm.items()}


# --------------------------------------------------------------------------
# labelings


CASE_ORDER = ("1.1", "1.2", "1.3", "2.1", "2.2", "2.3", "2.4", "3")


def labelings(st: ColorState, B: BichromaticCycle) -> list[Labeling]:
    """All normalizations of ``B`` at each of its edges, strongest case first."""
    G = st.G
    out: list[tuple[int, int, Labeling]] = []
    vs = B.vertices
    L = len(vs)
    serial = 0
    for k in range(L):
        x, y = vs[k], vs[(k + 1) % L]
        for u, v in ((x, y), (y, x)):
            cuv = st.col[G.edge_id(u, v)]
            cb = B.color_pair[0] if B.color_pair[1] == cuv else B.color_pair[1]
            u2, v2 = st.nb[u][cb], st.nb[v][cb]
            Cu = sorted(st.colors_at(u) - {cuv, cb})
            Cv = sorted(st.colors_at(v) - {cuv, cb})
            if len(Cu) != 2 or len(Cv) != 2 or u2 < 0 or v2 < 0:
                continue
            shared = set(Cu) & set(Cv)
            perms: list[dict[int, int]] = []
            if not shared:
                for a1, a3 in (Cu, Cu[::-1]):
                    for b1, b3 in (Cv, Cv[::-1]):
                        perms.append({cuv: 1, cb: 4, a1: 2, a3: 5, b1: 3, b3: 6})
            elif len(shared) == 1:
                (s,) = shared
                (a1,) = set(Cu) - shared
                (b1,) = set(Cv) - shared
                (rest,) = set(range(1, 7)) - {cuv, cb, s, a1, b1}
                perms.append({cuv: 1, cb: 4, a1: 2, s: 5, b1: 3, rest: 6})
            else:
                r = sorted(set(range(1, 7)) - {cuv, cb, *Cu})
                for a1, a3 in (Cu, Cu[::-1]):
                    for r3, r6 in (r, r[::-1]):
                        perms.append({cuv: 1, cb: 4, a1: 2, a3: 5, r3: 3, r6: 6})
            for perm in perms:
                inv = {n: a for a, n in perm.items()}
                if len(shared) == 0:
                    vc1, vc3 = inv[3], inv[6]
                elif len(shared) == 1:
                    vc1, vc3 = inv[3], inv[5]
                else:
                    vc1, vc3 = inv[2], inv[5]
                roles = {
                    "u": u, "v": v, "u2": u2, "v2": v2,
                    "u1": st.nb[u][inv[2]], "u3": st.nb[u][inv[5]],
                    "v1": st.nb[v][vc1], "v3": st.nb[v][vc3],
                }
                if len(set(roles.values())) != 8:
                    continue  # a triangle through u or v; the rules do not apply
                Cu2 = {perm[c] for c in st.colors_at(u2)} - {1, 4}
                case = _subcase(len(shared), Cu2)
                if case is None:
                    continue
                out.append((CASE_ORDER.index(case), serial, Labeling(case, (u, v), roles, perm)))
                serial += 1
    out.sort(key=lambda t: (t[0], t[1]))
    return [lab for _, _, lab in out]


def _subcase(shared: int, rest_u2: set[int]) -> str | None:
    if shared == 0:
        return {frozenset({3, 6}): "1.1", frozenset({2, 6}): "1.2", frozenset({2, 5}): "1.3"}.get(
            frozenset(rest_u2)
        )
    if shared == 1:
        return {
            frozenset({2, 3}): "2.1",
            frozenset({2, 5}): "2.2",
            frozenset({2, 6}): "2.3",
            frozenset({5, 6}): "2.4",
        }.get(frozenset(rest_u2))
    return "3"


# --------------------------------------------------------------------------
# two shared colors


def case_1_1(v: View):
    Cu1, Cu3 = v.C("u1"), v.C("u3")
    both = Cu1 | Cu3
    for a, b in ((3, 6), (6, 3)):
        if a not in both:
            sym = a == 6
            if not v.p(4, a, "u1", "u2"):
                yield v.let("1.1", sym, uu1=a, uv=2)
            else:
                yield v.let("1.1", sym, uu3=a, uv=5)
            return
    if 1 not in Cu1 and not v.p(1, 5, "u1", "u3"):
        yield v.let("1.1", uu1=1, uv=2)
    if 4 not in Cu1 and not v.p(4, 5, "u1", "u3"):
        yield v.let("1.1", uu1=4, uu2=2)
    if 1 not in Cu3 and not v.p(1, 2, "u1", "u3"):
        yield v.let("1.1", True, uu3=1, uv=5)
    if 4 not in Cu3 and not v.p(4, 2, "u1", "u3"):
        yield v.let("1.1", True, uu3=4, uu2=5)

    if 2 not in Cu3:
        yield from _case_1_1_1(v, Cu1, Cu3)
    elif 5 in Cu1:
        yield from _case_1_1_2(v, Cu1, Cu3)


def _case_1_1_1(v: View, Cu1, Cu3):
    if 1 not in Cu1:
        yield v.let("1.1.1", uu1=1, uu3=2, uv=5)
    if 4 not in Cu1:
        yield v.let("1.1.1", uu1=4, uu2=5, uu3=2)
    if not (Cu1 == {1, 2, 3, 4} and Cu3 == {1, 4, 5, 6}):
        return
    if 1 not in v.C("v1"):
        yield v.let("1.1.1", uu2=5, uu3=3)
    if 1 not in v.C("v3"):
        yield v.let("1.1.1", uu1=6, uu2=2)
    Cv2 = v.C("v2")
    if Cv2 == {1, 2, 4, 5}:
        for i in sorted({2, 5, 4} - v.C("v3")):
            if not v.p(3, i, "v1", "v3"):
                yield v.let("1.1.1", vv3=i, vv2=6)
        for i in sorted({2, 5, 4} - v.C("v1")):
            if not v.p(6, i, "v1", "v3"):
                yield v.let("1.1.1", True, vv1=i, vv2=3)
        return
    if 5 not in Cv2 and 2 in Cv2:
        # swap uu1 and uu3 and rename, so that 2 is missing at v2 again
        v.first("1.1.1", uu1=5, uu3=2)
        v.rename(2, 5)
        Cv2 = v.C("v2")
    if 2 in Cv2:
        return
    if Cv2 == {1, 3, 4, 6}:
        if not v.p(2, 3, "v1", "v2") and not v.p(2, 6, "v2", "v3"):
            yield v.let("1.1.1(i)", vv2=2)
        elif 2 not in v.C("v3"):
            v.first(vv3=2)
            if not v.p(4, 6, "u2", "v"):
                yield v.let("1.1.1(i)", uv=6)
            else:
                yield v.let("1.1.1(i)", uu1=6, uu3=2, uv=5)
        else:
            yield v.let("1.1.1(i)", vv1=4, vv2=2, vv3=3)
    elif Cv2 == {1, 3, 4, 5}:
        if not v.p(2, 3, "v1", "v2"):
            yield v.let("1.1.1(ii)", vv2=2)
        elif 2 not in v.C("v3"):
            yield v.let("1.1.1(ii)", vv3=2, uv=6)
        else:
            Cv1 = v.C("v1")
            if 4 not in Cv1 and not v.p(4, 6, "v1", "v3"):
                yield v.let("1.1.1(ii)", vv1=4, vv2=2, uv=3)
            elif 4 not in Cv1:
                yield v.let("1.1.1(ii)", vv1=4, vv2=6, vv3=5, uv=3)
            elif 5 not in v.C("v3"):
                yield v.let("1.1.1(ii)", vv2=6, vv3=5)
            else:
                yield v.let("1.1.1(ii)", vv2=6, vv3=4)


def _case_1_1_2(v: View, Cu1, Cu3):
    if Cu1 == {1, 2, 3, 5} and Cu3 == {2, 4, 5, 6}:
        v.bind("x1", v.nbr("u1", 1))
        v.bind("x2", v.nbr("u1", 3))
        if not v.p(5, 6, "u1", "u3"):
            yield v.let("1.1.2", uu1=6, uv=2)
        elif not v.p(3, 2, "x2", "u3"):
            yield v.let("1.1.2", uu2=5, uu3=3)
        else:
            hit = False
            for xi in ("x1", "x2"):
                spare = sorted({4, 6} - v.C(xi))
                if spare:
                    hit = True
                    yield v.let("1.1.2", uu2=5, uu3=v.c("u1" + xi), uv=2, uu1=spare[0])
            if not hit:
                yield v.let("1.1.2", u1x1=3, u1x2=1, uu3=1, uv=5)
    elif Cu1 == {1, 2, 4, 5} and Cu3 == {2, 3, 5, 6}:
        v.bind("x1", v.nbr("u1", 1))
        v.bind("x2", v.nbr("u1", 4))
        Cx2 = v.C("x2")
        for a in (3, 6):
            if a not in Cx2:
                sym = a == 6
                if not v.p(a, 5, "u1", "u3"):
                    yield v.let("1.1.2", sym, uu1=a, uv=2)
                else:
                    yield v.let("1.1.2", sym, uu1=a, uu2=5, uu3=4, uv=2)
                return
        Cx1 = v.C("x1")
        for a in (3, 6):
            if a not in Cx1:
                sym = a == 6
                v.first(uu1=a)
                if not v.p(a, 4, "u1", "u2"):
                    yield v.let("1.1.2", sym, uu3=1, uv=2)
                else:
                    yield v.let("1.1.2", sym, uu2=2, uu3=4, uv=1)
                return
        yield v.let("1.1.2", u1x1=4, u1x2=1, uu3=1, uv=5)


def case_1_2(v: View):
    if v.C("v2") == {1, 2, 4, 5}:
        return  # handled by the labeling with u and v exchanged
    Cu1, Cu3 = v.C("u1"), v.C("u3")
    for i in sorted({1, 3} - Cu3):
        if not v.p(i, 2, "u1", "u3"):
            yield v.let("1.2", uu3=i, uv=5)
    if 2 not in Cu3:
        yield from _case_1_2_1(v, Cu1, Cu3)
    elif not v.p(2, 3, "u1", "u2"):
        yield from _case_1_2_2_1(v)
    else:
        yield from _case_1_2_2_2(v, Cu1, Cu3)


def _case_1_2_1(v: View, Cu1, Cu3):
    if 4 not in Cu1:
        yield v.let("1.2.1", uu1=4, uu2=5, uu3=2)
    if 1 not in Cu1 and not v.p(4, 2, "u2", "u3"):
        yield v.let("1.2.1", uu1=1, uu3=2, uv=5)
    if Cu3 == {1, 3, 5, 6}:
        v.first(uu3=4)
        if 5 not in v.C("u1"):
            yield v.let("1.2.1", uu2=5)
        else:
            yield v.let("1.2.1", uu2=3, uv=5)
    elif Cu3 == {1, 3, 4, 5}:
        if not v.p(4, 6, "u2", "u3"):
            yield v.let("1.2.1", uu3=6, uv=5)
        elif 1 not in Cu1:
            if 5 not in Cu1:
                yield v.let("1.2.1(i)", uu1=1, uv=2)
            if 6 not in Cu1:
                yield v.let("1.2.1(i)", uu1=6, uv=2)
            if Cu1 == {2, 4, 5, 6}:
                v.first(uu3=6)
                if not v.p(3, 6, "u1", "u3"):
                    yield v.let("1.2.1(i)", uu1=3, uu2=5, uv=2)
                else:
                    yield v.let("1.2.1(i)", uu2=3, uv=5)
        elif 3 not in Cu1 and 5 not in Cu1:
            v.first(uu1=3)
            if not v.p(2, 4, "u2", "v2"):
                yield v.let("1.2.1(ii)", uv=2)
            else:
                yield v.let("1.2.1(ii)", uu3=2, uv=5)
        elif 6 not in Cu1:
            if 3 not in Cu1:
                yield v.let("1.2.1(ii)", uu1=3, uu2=5, uu3=6, uv=2)
            else:
                v.first(uu1=6)
                if not v.p(4, 2, "u2", "v2"):
                    yield v.let("1.2.1(ii)", uv=2)
                else:
                    yield v.let("1.2.1(ii)", uu3=2, uv=5)


def _case_1_2_2_1(v: View):
    lab = "1.2.2.1"
    if not v.p(1, 3, "u2", "v1"):
        yield v.let(lab, uu2=3)
        return
    Cv1, Cv2 = v.C("v1"), v.C("v2")
    if Cv1 == {1, 2, 3, 5}:
        yield v.let(lab, uu2=3)
        return
    spare = sorted({2, 5} - (Cv1 | Cv2))
    if spare:
        a = spare[0]
        if not v.p(6, a, "v1", "v3"):
            yield v.let(lab, vv1=a, uv=3)
        else:
            yield v.let(lab, vv2=a, uu2=3, uv=4)
        return
    if not (2 in Cv1 - Cv2 and 5 in Cv2 - Cv1):
        return
    p23 = v.p(2, 3, "v1", "v2")
    if not p23 and not v.p(2, 6, "v2", "v3"):
        yield v.let(lab, vv2=2, uu2=3, uv=4)
    elif p23:
        Cv3 = v.C("v3")
        miss = sorted({1, 2} - Cv3)
        if miss:
            yield v.let(lab, uv=6, vv3=miss[0])
        elif 4 not in Cv1 and not v.p(4, 6, "v1", "v3"):
            yield v.let(lab, vv1=4, vv2=2, uv=3)
        elif 4 not in Cv1:
            yield v.let(lab, vv1=5, uv=3)
        elif not v.p(4, 5, "v1", "v2"):
            yield v.let(lab, vv1=5, uv=3)
        elif 5 not in Cv3:
            yield v.let(lab, vv3=5, uv=6)
        else:
            yield v.let(lab, uu2=3, vv3=3, vv1=5, vv2=6, uv=4)
    else:
        Cv3 = v.C("v3")
        if Cv1 == {1, 2, 3, 4}:
            if not v.p(4, 5, "v1", "v2"):
                yield v.let(lab, vv1=5, uv=3)
            elif 5 not in Cv3:
                yield v.let(lab, vv3=5, uu2=3, uv=6)
            elif 3 not in Cv3:
                yield v.let(lab, uu2=3, vv3=3, vv2=2, vv1=6, uv=4)
            else:
                yield v.let(lab, vv1=6, vv2=2, vv3=4, uv=3)
        elif Cv1 == {1, 2, 3, 6}:
            if 3 not in Cv3:
                yield v.let(lab, vv3=3, uu2=3, vv1=4, vv2=2, uv=6)
            elif 4 not in Cv3:
                yield v.let(lab, vv2=2, vv3=4, uv=6)
            else:
                yield v.let(lab, vv1=5, vv3=1, uv=3)


def _case_1_2_2_2(v: View, Cu1, Cu3):
    lab = "1.2.2.2"
    if 4 not in Cu1 | Cu3:
        yield v.let(lab, uu1=4, uu2=3, uv=2)
    elif 4 not in Cu3 and 6 not in Cu1 | Cu3:
        yield v.let(lab, uu3=6, uv=5)
    elif Cu3 == {1, 2, 3, 5} and Cu1 == {2, 3, 4, 6}:
        if not v.p(4, 2, "u2", "v2"):
            yield v.let(lab, uu1=1, uv=2)
        else:
            yield v.let(lab, uu1=5, uu2=3, uu3=4, uv=2)
    elif Cu3 == {2, 3, 5, 6} and Cu1 == {1, 2, 3, 4}:
        if not v.p(4, 2, "u2", "v2"):
            yield v.let(lab, uu1=5, uu3=1, uv=2)
        else:
            yield v.let(lab, uu1=5, uu2=3, uu3=4, uv=2)
    elif Cu3 == {2, 3, 4, 5} and {1, 2, 3} <= Cu1:
        if 4 not in Cu1 and 5 not in Cu1:
            yield v.let(lab, uu1=4, uu2=3, uv=2)
        if 5 not in Cu1 and 6 not in Cu1:
            yield v.let(lab, uu3=6, uu2=5)
        if Cu1 == {1, 2, 3, 5}:
            if not v.p(5, 6, "u1", "v3"):
                yield v.let(lab, uu1=6, uu3=1, uv=5)
            else:
                yield v.let(lab, uu1=6, uu2=5, uu3=1, uv=2)


def case_1_3(v: View):
    if v.C("v2") != {1, 3, 4, 6}:
        return
    Cu1, Cu3 = v.C("u1"), v.C("u3")
    for i in sorted({1, 3, 6} - Cu1):
        if not v.p(5, i, "u1", "u3"):
            yield v.let("1.3", uu1=i, uv=2)
    for i in sorted({1, 3, 6} - Cu3):
        if not v.p(2, i, "u1", "u3"):
            yield v.let("1.3", True, uu3=i, uv=5)
    if 5 not in Cu1:
        lab = "1.3.1"
        miss = sorted({1, 3, 6} - Cu3)
        if miss:
            yield v.let(lab, uu1=5, uv=2, uu3=miss[0])
        elif not v.p(3, 2, "u2", "v1"):
            if not v.p(3, 5, "u2", "u3"):
                yield v.let(lab, uu1=4, uu2=3, uv=2)
            else:
                yield v.let(lab, uu1=5, uu2=3, uu3=4, uv=2)
        elif v.p(6, 2, "u2", "v3"):
            if not v.p(1, 2, "u1", "v2"):
                yield v.let(lab, vv2=2)
            else:
                yield v.let(lab, vv2=2, uu3=2, uu1=5)
        return
    lab = "1.3.2"
    Cv1, Cv3 = v.C("v1"), v.C("v3")
    if not (2 in Cu3 and 3 in Cv3 and 6 in Cv1):
        return
    if Cu1 == {1, 2, 3, 5} and 6 in Cu3 and 4 not in Cu3:
        miss = sorted({1, 2} - Cv3)
        if miss:
            yield v.let(lab, uu1=4, uu2=6, uv=miss[0])
        else:
            yield v.let(lab, uu2=6, vv2=5, uv=4)
    elif (Cu1 == {1, 2, 3, 5} and Cu3 == {2, 4, 5, 6}) or (
        Cu1 == {1, 2, 4, 5} and Cu3 == {2, 3, 5, 6}
    ):
        for name in ("v1", "v3"):
            if 1 not in v.C(name):
                yield v.let(lab, uu2=v.c("v" + name))
        if Cv1 == {1, 2, 3, 6} and Cv3 == {1, 3, 5, 6}:
            yield v.let(lab, vv2=5, vv3=4)
        if Cv1 == {1, 3, 5, 6} and Cv3 == {1, 2, 3, 6}:
            yield v.let(lab, vv1=4, vv2=5)


# --------------------------------------------------------------------------
# three shared colors


def case_2(v: View):
    if not v.p(4, 6, "u2", "v") and not v.p(5, 6, "u2", "v"):
        yield v.let("2", uv=6)
    Cu1, Cu2, Cu3 = v.C("u1"), v.C("u2"), v.C("u3")
    if 6 not in Cu3 and not v.p(2, 6, "u1", "u3"):
        yield v.let("2", uu3=6)
    if 1 not in Cu3 and not v.p(1, 2, "u1", "u3"):
        yield v.let("2", uu3=1, uv=6)
    if 6 not in Cu2 and not v.p(2, 6, "u1", "u2"):
        yield v.let("2", uu2=6)
    sub = v.lab.case
    if sub == "2.1":
        yield from _case_2_1(v, Cu1, Cu3)
    elif sub == "2.2":
        yield from _case_2_2(v, Cu1, Cu3)
    elif sub == "2.3":
        yield from _case_2_3(v, Cu1, Cu3)
    elif sub == "2.4":
        yield from _case_2_4(v)


def _case_2_1(v: View, Cu1, Cu3):
    if 4 not in Cu1 and not v.p(4, 5, "u1", "u3"):
        yield v.let("2.1", uu1=4, uu2=6)
    if 4 in Cu1 and 1 in Cu3:
        lab = "2.1.1"
        if Cu1 == {2, 3, 4, 6}:
            if 2 not in Cu3:
                yield v.let(lab, uu1=1, uu2=5, uu3=2, uv=6)
            else:
                yield v.let(lab, uu1=5, uu2=6, uu3=4)
        elif 3 not in Cu1:
            alt = sorted({1, 5} - Cu1)
            if 2 not in Cu3 and not v.p(2, 4, "u2", "u3"):
                if alt:
                    yield v.let(lab, uu3=2, uv=6, uu1=alt[0])
            elif Cu3 == {1, 4, 5, 6} and v.p(2, 4, "u2", "u3"):
                if not v.p(4, 3, "u1", "u2"):
                    yield v.let(lab + "(i)", uu1=3, uv=2)
                elif alt:
                    yield v.let(lab + "(i)", uu3=3, uv=2, uu1=alt[0])
            elif Cu3 == {1, 2, 5, 6}:
                lab += "(ii)"
                if not v.p(3, 6, "u3", "v1"):
                    yield v.let(lab, uu3=3, uv=6)
                elif Cu1 == {1, 2, 4, 6}:
                    yield v.let(lab, uu1=5, uu2=6, uu3=4, uv=2)
                elif Cu1 == {2, 4, 5, 6}:
                    if not v.p(2, 3, "u3", "v1"):
                        yield v.let(lab, uu1=1, uu3=3, uv=2)
                    elif not v.p(2, 5, "v2", "v3"):
                        yield v.let(lab, vv2=2)
                    else:
                        Cv1 = v.C("v1")
                        if 1 not in Cv1 and 5 not in Cv1:
                            yield v.let(lab, vv1=1, uv=3)
                        elif 4 not in v.C("v3"):
                            yield v.let(lab, vv3=4, vv2=2)
                        else:
                            yield v.let(lab, vv1=4, vv2=2, vv3=3)
    else:
        lab = "2.1.2"
        if 4 not in Cu1 and 1 in Cu3:
            yield v.let(lab, uu1=4, uu2=6, uu3=2)
        elif 4 in Cu1 and 1 not in Cu3:
            yield v.let(lab, uu1=5, uu3=1, uv=6)
        elif 4 not in Cu1 and 1 not in Cu3:
            if not v.p(3, 6, "u1", "v1"):
                yield v.let(lab, uu1=3, uu3=1, uv=6)
            else:
                yield v.let(lab, uu1=3, uu3=1, uv=2)


def _case_2_2(v: View, Cu1, Cu3):
    if v.C("v2") - {1, 4} == {2, 3}:
        return
    if 4 not in Cu1 and not v.p(4, 5, "u1", "u3"):
        yield v.let("2.2", uu1=4, uu2=6)
    if 4 in Cu1 and 1 in Cu3:
        lab = "2.2.1"
        if Cu1 == {1, 2, 4, 6}:
            if 2 not in Cu3:
                yield v.let(lab, uu1=3, uv=2)
            else:
                yield v.let(lab, uu1=3, uu2=6, uu3=4, uv=2)
        elif 1 not in Cu1:
            if 2 not in Cu3 and 4 not in Cu3:
                yield v.let(lab, uu1=1, uu3=2, uv=6)
            elif Cu3 == {1, 4, 5, 6}:
                if 5 not in Cu1:
                    yield v.let(lab + "(i)", uu1=1, uv=2)
                else:
                    yield v.let(lab + "(i)", uu1=3, uv=2)
            elif Cu3 == {1, 2, 5, 6}:
                lab += "(ii)"
                if 3 not in Cu1:
                    yield v.let(lab, uu1=3, uu2=6)
                elif not v.p(2, 5, "u3", "v3"):
                    yield v.let(lab, uu1=1, uv=2)
                elif not v.p(2, 3, "v1", "v2"):
                    yield v.let(lab, vv2=2)
                else:
                    Cv1, Cv3 = v.C("v1"), v.C("v3")
                    if 4 not in Cv1:
                        yield v.let(lab, vv1=4, vv2=2)
                    elif 1 not in Cv3:
                        if 6 not in v.C("v2"):
                            yield v.let(lab, vv2=6)
                        else:
                            yield v.let(lab, vv1=5, vv3=1, uv=6)
                    elif 1 not in Cv1:
                        yield v.let(lab, vv1=1, vv3=3, uv=6)
                    elif 6 not in v.C("v2"):
                        yield v.let(lab, vv2=6)
                    else:
                        yield v.let(lab, vv1=5, vv3=3, uv=6)
    else:
        lab = "2.2.2"
        if 4 not in Cu1 and 1 in Cu3:
            yield v.let(lab, uu1=4, uu2=6, uu3=2)
        elif 4 not in Cu1 and 1 not in Cu3:
            yield v.let(lab, uu1=3, uu3=1, uv=2)
        elif 4 in Cu1 and 1 not in Cu3:
            if not v.p(1, 3, "u1", "u3"):
                yield v.let(lab, uu1=3, uu3=1, uv=2)
            else:
                yield v.let(lab, uu1=5, uu2=3, uu3=1, uv=6)


def _case_2_3(v: View, Cu1, Cu3):
    if v.C("v2") - {1, 4} in ({2, 3}, {3, 5}):
        return
    if not v.p(2, 3, "u1", "u2"):
        lab = "2.3.1"
        v.first(uu2=3)
        if not v.p(1, 3, "u2", "v2"):
            yield v.let(lab)
            return
        Cv1 = v.C("v1")
        if Cv1 - {1, 3} not in ({4, 6}, {5, 6}):
            yield v.let(lab)  # the new (1, 3)-cycle is broken by a nested step
            return
        Cv2, Cv3 = v.C("v2"), v.C("v3")
        if 6 not in Cv3:
            yield v.let(lab, uv=6)
        elif Cv2 == {1, 3, 4, 6}:
            if 4 not in Cv3:
                yield v.let(lab, vv2=2, uv=4)
            else:
                yield v.let(lab, vv1=2, uu2=4, uv=3)
        elif Cv2 == {1, 4, 5, 6} and Cv1 == {1, 3, 5, 6}:
            if 3 not in Cv3 and 4 not in Cv3:
                yield v.let(lab, vv1=4, vv2=3)
            elif Cv3 == {1, 3, 5, 6}:
                yield v.let(lab, vv2=2, uv=4)
            else:
                yield v.let(lab, uu2=4, vv1=2, uv=3)
        return
    if 3 not in Cu1:
        return
    Cv2 = v.C("v2")
    if Cv2 == {1, 4, 5, 6}:
        lab = "2.3.2.1"
        if not v.p(2, 5, "v2", "v3"):
            yield v.let(lab, vv2=2)
            return
        Cv1 = v.C("v1")
        if 2 not in Cv1 and not v.p(5, 3, "u3", "v3"):
            yield v.let(lab, vv1=2, uv=3)
        elif 2 not in Cv1:
            yield v.let(lab, vv1=2, vv2=3)
        elif 4 not in v.C("v3") and not v.p(3, 4, "v1", "v3"):
            yield v.let(lab, vv3=4, vv2=2)
        else:
            miss = sorted({1, 6} - Cv1)
            if miss:
                b = miss[0]
                yield v.let(lab, vv1=5, vv2=3, vv3=b, uv=7 - b)
    elif Cv2 == {1, 3, 4, 6}:
        lab = "2.3.2.2"
        Cv3 = v.C("v3")
        if 2 not in Cu3:
            if 4 not in Cu1 | Cu3:
                yield v.let(lab, uu1=4, uu2=3, uv=2)
            elif 1 not in Cu1 and not v.p(2, 4, "u2", "u3"):
                yield v.let(lab, uu1=1, uu3=2, uv=6)
            elif Cu3 == {1, 3, 5, 6}:
                yield v.let(lab, uu1=5, uu2=3, uu3=4, uv=2)
            elif Cu3 == {1, 4, 5, 6}:
                if 5 not in Cu1:
                    yield v.let(lab, uu1=5, uu3=3, uv=2)
                elif 1 not in Cu1:
                    if not v.p(1, 5, "u1", "u3"):
                        yield v.let(lab, uu1=1, uv=2)
                    else:
                        yield v.let(lab, uu1=1, uu2=5, uu3=2, uv=6)
                elif not v.p(5, 6, "u1", "u3"):
                    yield v.let(lab, uu1=6, uv=2)
                else:
                    yield v.let(lab, uu1=6, uu2=5, uu3=2)
        elif 3 in Cv3:
            if 4 not in Cu3:
                if 5 not in Cu1:
                    yield v.let(lab, uu1=5, uu2=3, uu3=4, uv=2)
                elif 4 not in Cu1:
                    miss = sorted({1, 6} - Cv3)
                    if miss:
                        yield v.let(lab, uu1=4, uu2=3, uv=miss[0])
                    else:
                        yield v.let(lab, uu1=4, uu2=3, uv=2)
                elif Cu1 == {2, 3, 4, 5} and Cu3 == {1, 2, 5, 6}:
                    if 2 not in Cv3:
                        yield v.let(lab, vv3=2, uu3=3, uv=5)
                    elif 1 not in Cv3 and 6 not in Cv3:
                        yield v.let(lab, vv1=4, vv2=2)
                    elif 4 not in v.C("v1"):
                        yield v.let(lab, vv1=4, vv2=2)
                    else:
                        yield v.let(lab, vv1=5, vv2=2, vv3=4, uv=3)
            else:
                if 3 not in Cu3 and 2 not in Cv3:
                    yield v.let(lab, uu3=3, vv3=2, uv=5)
                elif Cu3 == {2, 3, 4, 5} and Cu1 == {1, 2, 3, 6}:
                    yield v.let(lab, uu1=5, uu3=1, uv=2)


def _case_2_4(v: View):
    if v.C("v2") - {1, 4} != {5, 6}:
        return
    if not v.p(5, 3, "u2", "u3"):
        lab = "2.4.1"
        v.first(uu2=3)
        if not v.p(1, 3, "u2", "v2"):
            yield v.let(lab)
            return
        Cv1 = v.C("v1")
        if Cv1 - {1, 3} != {5, 6}:
            yield v.let(lab)
            return
        Cv3 = v.C("v3")
        if 6 not in Cv3:
            yield v.let(lab, uv=6)
        elif 3 not in Cv3 and 4 not in Cv3:
            yield v.let(lab, vv1=4, vv2=3)
        elif Cv3 == {1, 3, 5, 6}:
            yield v.let(lab, vv2=2, uv=4)
        else:
            yield v.let(lab, uu2=4, vv1=2, uv=3)
    elif v.p(2, 5, "v2", "v3"):
        lab = "2.4.2"
        Cv1 = v.C("v1")
        if 2 not in Cv1:
            yield v.let(lab, vv1=2, uv=3)
            return
        Cv3 = v.C("v3")
        if 3 not in Cv3:
            if 4 not in Cv1:
                yield v.let(lab, vv1=4, vv2=3)
            if 1 not in Cv1:
                yield v.let(lab, vv1=1, vv3=3, uv=6)
            if Cv1 == {1, 2, 3, 4}:
                yield v.let(lab, vv1=6, vv2=3)
        elif {1, 6} - Cv3:
            b = min({1, 6} - Cv3)
            if 5 not in Cv1:
                yield v.let(lab, vv1=5, vv2=3, vv3=b, uv=7 - b)
            else:
                yield v.let(lab, vv1=4, vv2=3, vv3=b, uv=7 - b)


# --------------------------------------------------------------------------
# four shared colors


def case_3(v: View):
    if v.C("u2") != {1, 2, 4, 5} or v.C("v2") != {1, 2, 4, 5}:
        return
    for j in (3, 6):
        if not v.p(2, j, "u", "v") and not v.p(5, j, "u", "v"):
            yield v.let("3", uv=j)
    if not v.p(2, 3, "u", "v"):
        return
    if not v.p(3, 5, "v2", "v3"):
        yield v.let("3", vv2=3)
    if not v.p(3, 5, "u2", "u3"):
        yield v.let("3", True, uu2=3)
    Cu1, Cu3 = v.C("u1"), v.C("u3")
    if 1 not in Cu1 and not v.p(1, 5, "u1", "u3"):
        yield v.let("3", uu1=1, uv=3)
    elif 4 not in Cu3:
        yield v.let("3", uu2=3, uu3=4)
    elif Cu3 == {3, 4, 5, 6} and Cu1 == {1, 2, 3, 6}:
        yield v.let("3", uu1=5, uu3=1, uv=3)


RULES = {
    "1.1": case_1_1,
    "1.2": case_1_2,
    "1.3": case_1_3,
    "2.1": case_2,
    "2.2": case_2,
    "2.3": case_2,
    "2.4": case_2,
    "3": case_3,
}
