"""Orthogonal Vector Crafting to minimum-size path/tree decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field

from craftbench.bitstring import Mode, is_palindrome
from craftbench.crafting import CraftingInstance, Witness, locate, verify_witness
from craftbench.graph import Graph, PathDecomposition
from craftbench.reductions.subgraph import PreconditionError

BASE_WIDTH = 16
S_CLIQUE = 6
T_CLIQUE = 2


@dataclass
class MspdMap:
    width: int
    s_cliques: list[list[int]]  # C_1..C_{|s|+1}
    s_marks: dict[int, int]  # i -> s_i, for s(i) = 1
    t_cliques: dict[int, list[list[int]]]  # string j -> T_{j,1}..T_{j,|t_j|+1}
    t_marks: dict[tuple[int, int], int]  # (j, pos) -> t_{j,pos}
    universal: list[int] = field(default_factory=list)
    provenance: list[tuple] = field(default_factory=list)


def _clique(g: Graph, size: int, prov: list, tag: tuple) -> list[int]:
    vs = [g.add_vertex() for _ in range(size)]
    prov.extend((*tag, k) for k in range(size))
    for a in range(size):
        for b in range(a + 1, size):
            g.add_edge(vs[a], vs[b])
    return vs


def _join(g: Graph, xs, ys) -> None:
    for x in xs:
        for y in ys:
            g.add_edge(x, y)


def ovc_to_mspd(inst: CraftingInstance, k: int = BASE_WIDTH,
                permissive: bool = False) -> tuple[Graph, int, MspdMap]:
    """Graph, bag budget |s| and bookkeeping; the question is width <= k with <= |s| bags."""
    if k < BASE_WIDTH:
        raise ValueError(f"width {k} < {BASE_WIDTH} is not supported")
    if inst.mode is not Mode.ORTHOGONALITY:
        raise PreconditionError("ovc_to_mspd expects an orthogonality instance")
    if not permissive:
        for j, t in enumerate(inst.ts, start=1):
            if not is_palindrome(t):
                raise PreconditionError(f"t_{j} = {t} is not a palindrome")

    g, prov = Graph(0), []
    size = len(inst.s)
    cs = [_clique(g, S_CLIQUE, prov, ("C", i)) for i in range(1, size + 2)]
    for a, b in zip(cs, cs[1:]):
        _join(g, a, b)
    s_marks = {}
    for i in range(1, size + 1):
        if inst.s.at(i):
            v = g.add_vertex()
            prov.append(("s", i))
            _join(g, [v], cs[i - 1] + cs[i])
            s_marks[i] = v

    t_cliques, t_marks = {}, {}
    for j, t in enumerate(inst.ts, start=1):
        ts_ = [_clique(g, T_CLIQUE, prov, ("T", j, p)) for p in range(1, len(t) + 2)]
        for a, b in zip(ts_, ts_[1:]):
            _join(g, a, b)
        for p in range(1, len(t) + 1):
            if t.at(p):
                v = g.add_vertex()
                prov.append(("t", j, p))
                _join(g, [v], ts_[p - 1] + ts_[p])
                t_marks[(j, p)] = v
        t_cliques[j] = ts_

    universal = []
    for u in range(k - BASE_WIDTH):
        v = g.add_vertex()
        prov.append(("U", u))
        universal.append(v)
    for v in universal:
        for x in range(g.n):
            if x != v:
                g.add_edge(v, x)

    smap = MspdMap(k, cs, s_marks, t_cliques, t_marks, universal, prov)
    return g, size, smap


def bag_recipe(smap: MspdMap, inst: CraftingInstance, w: Witness) -> list[dict]:
    """Per bag index i, the string/position pair covering i (via ``locate``)."""
    out = []
    for i in range(1, len(inst.s) + 1):
        block, pos = locate(inst, w, i)
        out.append({"i": i, "string": w.perm[block - 1], "pos": pos})
    return out


def build_mspd_witness(smap: MspdMap, inst: CraftingInstance, w: Witness) -> PathDecomposition:
    """Bag i holds C_i, C_{i+1}, the two T-cliques flanking the character placed
    at position i, and whichever of s_i / t_{j,pos} exists."""
    if not verify_witness(inst, w):
        raise ValueError("witness does not solve the instance")
    bags = []
    for row in bag_recipe(smap, inst, w):
        i, j, p = row["i"], row["string"], row["pos"]
        bag = set(smap.s_cliques[i - 1]) | set(smap.s_cliques[i])
        bag |= set(smap.t_cliques[j][p - 1]) | set(smap.t_cliques[j][p])
        if i in smap.s_marks:
            bag.add(smap.s_marks[i])
        if (j, p) in smap.t_marks:
            bag.add(smap.t_marks[(j, p)])
        bag |= set(smap.universal)
        bags.append(bag)
    return PathDecomposition(bags)


def decode_perm_from_decomposition(smap: MspdMap, d: PathDecomposition) -> Witness:
    """Read Pi off a path decomposition in the normal form produced by the builder."""
    order = []
    for bag in d.bags:
        for j, cliques in smap.t_cliques.items():
            if set(cliques[0]) <= bag and set(cliques[1]) <= bag:
                order.append(j)
    return Witness(tuple(order))
