"""Orthogonal Vector Crafting to intervalizing 5-coloured trees."""

from __future__ import annotations

from dataclasses import dataclass, field

from craftbench.bitstring import Mode
from craftbench.crafting import CraftingInstance, Witness, locate, verify_witness
from craftbench.graph import ColoredGraph, Graph, IntervalModel
from craftbench.reductions.subgraph import PreconditionError

BARRIER_SIZE = 18


@dataclass
class Icg5Map:
    s_len: int
    lengths: tuple[int, ...]
    roles: list[tuple] = field(default_factory=list)
    index: dict[tuple, int] = field(default_factory=dict)

    def __getitem__(self, role: tuple) -> int:
        return self.index[role]

    def get(self, role: tuple):
        return self.index.get(role)

    def barrier(self, side: str) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r[0] == "barrier" and r[1] == side]


class _Builder:
    def __init__(self):
        self.g = Graph(0)
        self.colors: list[int] = []
        self.map = None

    def vertex(self, role: tuple, colour: int, *nbrs: int) -> int:
        v = self.g.add_vertex()
        self.colors.append(colour)
        self.map.roles.append(role)
        self.map.index[role] = v
        for w in nbrs:
            self.g.add_edge(v, w)
        return v


# barrier parts: (name, colour); the clique vertex "e" is the endpoint
_LEFT_CLIQUE = [("L2", 2), ("L3", 3), ("L4", 4), ("L5", 5)]
_RIGHT_CLIQUE = [("e", 2), ("R3", 3), ("R4", 4), ("R5", 5)]


def _barrier(b: _Builder, side: str, path_end: int) -> None:
    centre = b.vertex(("barrier", side, "C"), 1)
    for name, colour in _LEFT_CLIQUE + _RIGHT_CLIQUE:
        v = b.vertex(("barrier", side, name), colour, centre)
        if name == "e":
            b.g.add_edge(v, path_end)
            k3 = b.vertex(("barrier", side, "k3"), 3, v)
            b.vertex(("barrier", side, "k2"), 2, k3)
        else:
            b.vertex(("barrier", side, "P" + name), 1, v)


def ovc_to_icg5(inst: CraftingInstance, permissive: bool = False) -> tuple[ColoredGraph, Icg5Map]:
    """Five-coloured tree that can be intervalized iff the OVC instance is solvable.

    The s-path has vertices p_0..p_{2|s|}: character i of s is represented by
    p_{2i-1}, the even vertices separate consecutive characters.
    """
    if inst.mode is not Mode.ORTHOGONALITY:
        raise PreconditionError("ovc_to_icg5 expects an orthogonality instance")
    if not permissive:
        for j, t in enumerate(inst.ts, start=1):
            if str(t) != str(t)[::-1]:
                raise PreconditionError(f"t_{j} = {t} is not a palindrome")

    size = len(inst.s)
    b = _Builder()
    b.map = Icg5Map(size, tuple(len(t) for t in inst.ts))

    prev = None
    for i in range(2 * size + 1):
        p = b.vertex(("p", i), 1 if i % 2 == 0 else 2, *([prev] if prev is not None else []))
        if i % 2 == 0:
            b.vertex(("n", i), 3, p)
        prev = p
    _barrier(b, "left", b.map[("p", 0)])
    _barrier(b, "right", b.map[("p", 2 * size)])

    for j, t in enumerate(inst.ts, start=1):
        prev = None
        for k in range(2 * len(t) + 1):
            q = b.vertex(("q", j, k), 3 if k % 2 else 2, *([prev] if prev is not None else []))
            if k % 2:
                b.vertex(("m", j, k), 1, q)
            prev = q
        b.vertex(("end", j, 0), 3, b.map[("q", j, 0)])
        b.vertex(("end", j, 1), 3, b.map[("q", j, 2 * len(t))])

    b.vertex(("connector",), 5, b.map[("p", 1)],
             *(b.map[("q", j, 1)] for j in range(1, inst.n + 1)))

    for i in range(1, size + 1):
        if inst.s.at(i):
            _marks(b, ("p", i), b.map[("p", 2 * i - 1)])
    for j, t in enumerate(inst.ts, start=1):
        for pos in range(1, len(t) + 1):
            if t.at(pos):
                _marks(b, ("q", j, pos), b.map[("q", j, 2 * pos - 1)])

    return ColoredGraph(b.g, b.colors), b.map


def _marks(b: _Builder, owner: tuple, v: int) -> None:
    for side in (0, 1):
        mk = b.vertex(("mark", owner, side), 4, v)
        b.vertex(("marknb", owner, side), 3, mk)


# Left barrier layout relative to the left end O of p_0.  The right barrier
# uses the mirror image about the centre of the construction.
_BARRIER_LAYOUT = {
    "C": (-100, -50),
    "L2": (-110, -94), "L3": (-120, -93), "L4": (-130, -92), "L5": (-140, -91),
    "PL2": (-112, -108), "PL3": (-122, -118), "PL4": (-132, -128), "PL5": (-142, -138),
    "R3": (-51, -40), "R4": (-52, -30), "R5": (-53, -20), "e": (-55, 5),
    "PR3": (-42, -38), "PR4": (-32, -28), "PR5": (-22, -18),
    "k3": (-58, -54), "k2": (-60, -57),
}


def build_icg5_witness(imap: Icg5Map, inst: CraftingInstance, w: Witness) -> IntervalModel:
    """Integer interval model weaving the q-paths into the p-path in Pi order.

    Character i of s sits at x = 100 i; the q-vertex of colour 3 that is
    placed on position i contains p_{2i-1}, and marking vertices stick out on
    both sides of it.  Orthogonality guarantees only one owner of marks per
    position.
    """
    if not verify_witness(inst, w):
        raise ValueError("witness does not solve the instance")
    size = len(inst.s)
    iv: dict[int, tuple[float, float]] = {}

    def put(role, lo, hi):
        iv[imap[role]] = (lo, hi)

    centre = lambda k: 100 * k  # noqa: E731
    left_end, right_end = centre(1) - 90, centre(size) + 90

    put(("p", 0), left_end, centre(1) - 10)
    put(("n", 0), centre(1) - 52, centre(1) - 48)
    for k in range(1, size + 1):
        x = centre(k)
        put(("p", 2 * k - 1), x - 20, x + 20)
        put(("p", 2 * k), x + 10, x + 90)
        put(("n", 2 * k), x + 48, x + 52)

    for k in range(1, size + 1):
        x = centre(k)
        block, pos = locate(inst, w, k)
        j = w.perm[block - 1]
        length = len(inst.ts[j - 1])
        put(("q", j, 2 * pos - 1), x - 25, x + 25)
        put(("m", j, 2 * pos - 1), x - 3, x + 3)
        if pos < length:
            put(("q", j, 2 * pos), x + 22, x + 78)
        else:
            put(("q", j, 2 * pos), x + 22, x + 40)
            put(("end", j, 1), x + 35, x + 38)
        if pos == 1:
            put(("q", j, 0), x - 40, x - 22)
            put(("end", j, 0), x - 38, x - 35)
        owner = None
        if inst.s.at(k):
            owner = ("p", k)
        if inst.ts[j - 1].at(pos):
            owner = ("q", j, pos)
        if owner is not None:
            put(("mark", owner, 0), x - 30, x - 15)
            put(("marknb", owner, 0), x - 31, x - 28)
            put(("mark", owner, 1), x + 15, x + 30)
            put(("marknb", owner, 1), x + 28, x + 31)

    mirror = left_end + right_end
    for part, (lo, hi) in _BARRIER_LAYOUT.items():
        put(("barrier", "left", part), left_end + lo, left_end + hi)
        put(("barrier", "right", part), mirror - (left_end + hi), mirror - (left_end + lo))
    put(("connector",), left_end - 15, right_end + 15)

    missing = [imap.roles[v] for v in range(len(imap.roles)) if v not in iv]
    if missing:
        raise AssertionError(f"layout left vertices unplaced: {missing[:5]}")
    return IntervalModel.from_real([iv[v] for v in range(len(imap.roles))])


def expected_size(inst: CraftingInstance) -> int:
    """Vertex count of ``ovc_to_icg5(inst)``."""
    size = len(inst.s)
    ones = inst.s.count_ones() + sum(t.count_ones() for t in inst.ts)
    return (2 * BARRIER_SIZE + (2 * size + 1) + (size + 1) + 1
            + sum(3 * len(t) + 3 for t in inst.ts) + 4 * ones)
