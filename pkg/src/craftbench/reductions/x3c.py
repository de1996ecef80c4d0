"""Exact Cover by 3-Sets to intervalizing coloured trees with many colours."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from craftbench.graph import ColoredGraph, Graph, IntervalModel
from craftbench.problems import X3cInstance
from craftbench.reductions.subgraph import PreconditionError

A, B, C, D = 1, 2, 3, 4


def colour_e(x: int) -> int:
    return D + x


def colour_f(x: int, n: int) -> int:
    return D + n + x


@dataclass
class X3cMap:
    n: int
    m: int
    roles: list[tuple] = field(default_factory=list)
    index: dict[tuple, int] = field(default_factory=dict)

    def __getitem__(self, role: tuple) -> int:
        return self.index[role]

    @property
    def path_length(self) -> int:
        return 2 * (self.m - self.n // 3) + 1

    def set_component(self, j: int) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r[0] == "set" and r[1] == j]


def x3c_to_icg(x3c: X3cInstance) -> tuple[ColoredGraph, X3cMap]:
    """Tree coloured with 2n + 4 colours (e_x, f_x per element plus a, b, c, d)."""
    n, m = x3c.n, x3c.m
    if n < 3:
        raise PreconditionError("universe must be non-empty")
    if m <= n // 3:
        raise PreconditionError(f"need m > n/3 (m = {m}, n = {n}); decide this case directly")

    g, colours = Graph(0), []
    xmap = X3cMap(n, m)

    def vertex(role, colour, *nbrs):
        v = g.add_vertex()
        colours.append(colour)
        xmap.roles.append(role)
        xmap.index[role] = v
        for w in nbrs:
            g.add_edge(v, w)
        return v

    prev = None
    for i in range(xmap.path_length):
        prev = vertex(("p", i), A if i % 2 == 0 else B, *([prev] if prev is not None else []))
    vertex(("rbar",), D, prev)
    p0 = xmap[("p", 0)]
    for x in range(1, n + 1):
        v = vertex(("v", x), colour_e(x), p0)
        vertex(("lbar", x), D, v)
    for j, xs in enumerate(x3c.sets, start=1):
        central = vertex(("set", j, "central"), A)
        for side in (0, 1):
            cv = vertex(("set", j, "c", side), C, central)
            vertex(("set", j, "b", side), B, cv)
        for x in sorted(xs):
            for copy in (0, 1):
                fv = vertex(("set", j, "f", x, copy), colour_f(x, n), central)
                vertex(("set", j, "e", x, copy), colour_e(x), fv)
    vertex(("connector",), D, p0, *(xmap[("set", j, "central")] for j in range(1, m + 1)))
    return ColoredGraph(g, colours), xmap


def build_icg_witness_x3c(xmap: X3cMap, x3c: X3cInstance, cover: Sequence[int]) -> IntervalModel:
    """Interval model from an exact cover (1-based set indices).

    Cover components are packed inside the common part of the v-intervals with
    their f-intervals sticking out on both sides; every other component sits
    inside its own odd path vertex.
    """
    if len(cover) != x3c.n // 3 or not x3c.is_exact_cover(cover):
        raise ValueError(f"{sorted(cover)} is not an exact cover")
    n = x3c.n
    rest = [j for j in range(1, x3c.m + 1) if j not in set(cover)]
    iv: dict[tuple, tuple[int, int]] = {}

    zone0 = 100 * (n + 1)
    v_right = zone0 + 1000 * len(cover) + 100
    for x in range(1, n + 1):
        iv[("v", x)] = (-10 * x, v_right + 10 * x)
        iv[("lbar", x)] = (100 * x, 100 * x + 50)

    for c, j in enumerate(sorted(cover)):
        z = zone0 + 1000 * c
        iv[("set", j, "central")] = (z, z + 900)
        iv[("set", j, "c", 0)] = (z + 10, z + 30)
        iv[("set", j, "b", 0)] = (z + 15, z + 25)
        iv[("set", j, "c", 1)] = (z + 870, z + 890)
        iv[("set", j, "b", 1)] = (z + 875, z + 885)
        for t, x in enumerate(sorted(x3c.sets[j - 1])):
            iv[("set", j, "f", x, 0)] = (-10 * x - 6, z + 100 + 100 * t)
            iv[("set", j, "e", x, 0)] = (-10 * x - 8, -10 * x - 4)
            iv[("set", j, "f", x, 1)] = (z + 150 + 100 * t, v_right + 10 * x + 6)
            iv[("set", j, "e", x, 1)] = (v_right + 10 * x + 4, v_right + 10 * x + 8)

    start = v_right + 10 * n + 100
    base = [None] + [start + 1500 * (k - 1) for k in range(1, len(rest) + 1)]
    iv[("p", 0)] = (v_right - 50, base[1] + 200)
    for k, j in enumerate(rest, start=1):
        u = base[k]
        iv[("p", 2 * k - 1)] = (u + 100, u + 1300)
        iv[("p", 2 * k)] = (u + 1200, u + 1700)
        iv[("set", j, "central")] = (u + 300, u + 1100)
        iv[("set", j, "c", 0)] = (u + 50, u + 310)
        iv[("set", j, "b", 0)] = (u + 60, u + 80)
        iv[("set", j, "c", 1)] = (u + 1090, u + 1350)
        iv[("set", j, "b", 1)] = (u + 1320, u + 1340)
        for t, x in enumerate(sorted(x3c.sets[j - 1])):
            lo = u + 350 + 200 * t
            iv[("set", j, "f", x, 0)] = (lo, lo + 50)
            iv[("set", j, "e", x, 0)] = (lo + 10, lo + 20)
            iv[("set", j, "f", x, 1)] = (lo + 100, lo + 150)
            iv[("set", j, "e", x, 1)] = (lo + 110, lo + 120)
    last = base[len(rest)]
    iv[("rbar",)] = (last + 1500, last + 1550)
    iv[("connector",)] = (zone0 - 20, last + 1450)

    return IntervalModel.from_real([iv[role] for role in xmap.roles])


def host_odd_path_vertex(xmap: X3cMap, model: IntervalModel, j: int) -> int | None:
    """Index i of the odd path vertex whose interval contains set j's central vertex."""
    cl, cr = model.intervals[xmap[("set", j, "central")]]
    for i in range(1, xmap.path_length, 2):
        pl, pr = model.intervals[xmap[("p", i)]]
        if pl < cl and cr < pr:
            return i
    return None
