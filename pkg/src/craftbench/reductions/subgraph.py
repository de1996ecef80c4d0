"""String Crafting to (induced) subgraph containment between caterpillar forests."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from craftbench.bitstring import BitString, Mode, is_palindrome
from craftbench.crafting import CraftingInstance, Witness
from craftbench.graph import Graph
from craftbench.reductions.sat_sc import DecodeError


class Variant(enum.Enum):
    CATERPILLAR = "caterpillar"
    CONNECTED = "connected"
    INDUCED = "induced"
    INDUCED_CONNECTED = "induced-connected"

    @property
    def induced(self) -> bool:
        return self in (Variant.INDUCED, Variant.INDUCED_CONNECTED)

    @property
    def connected(self) -> bool:
        return self in (Variant.CONNECTED, Variant.INDUCED_CONNECTED)


class PreconditionError(ValueError):
    pass


# Vertex roles.  ``pos`` is the 1-based character position inside the string
# the caterpillar was built from; a subdivision vertex of path edge
# (pos, pos+1) carries ``pos``.
PATH, HAIR, SUB, HUB, HUB_SUB, HUB_LEAF = "path", "hair", "sub", "hub", "hubsub", "hubleaf"

# Other vertices have degree <= 4, so a hub of degree >= 5 can only map to the hub.
HUB_MIN_DEGREE = 5


@dataclass(frozen=True)
class Role:
    kind: str
    part: int  # 0 for the host, j for the component of t_j
    pos: int = 0


@dataclass
class SubgraphMap:
    variant: Variant
    host_roles: list[Role]
    pattern_roles: list[Role]
    lengths: tuple[int, ...]  # |t_j|

    def host_position(self, v: int) -> float:
        role = self.host_roles[v]
        if role.kind in (PATH, HAIR):
            return float(role.pos)
        if role.kind == SUB:
            return role.pos + 0.5
        raise DecodeError(f"host vertex {v} ({role.kind}) has no string position")

    def component_vertices(self, j: int) -> list[int]:
        return [v for v, r in enumerate(self.pattern_roles) if r.part == j]


def check_regime(ts, permissive: bool = False) -> None:
    if permissive:
        return
    for j, t in enumerate(ts, start=1):
        text = str(t)
        if not is_palindrome(t):
            raise PreconditionError(f"t_{j} = {text} is not a palindrome")
        if text[0] != "1" or text[-1] != "1":
            raise PreconditionError(f"t_{j} = {text} does not start and end with 1")


def _caterpillar(g: Graph, roles: list[Role], word: BitString, part: int,
                 subdivide_path: bool) -> list[int]:
    """Append the caterpillar of ``word`` to ``g``; returns its path vertices."""
    path = []
    for pos, bit in enumerate(word, start=1):
        v = g.add_vertex()
        roles.append(Role(PATH, part, pos))
        if path:
            if subdivide_path:
                w = g.add_vertex()
                roles.append(Role(SUB, part, pos - 1))
                g.add_edge(path[-1], w)
                g.add_edge(w, v)
            else:
                g.add_edge(path[-1], v)
        path.append(v)
        if bit:
            h = g.add_vertex()
            roles.append(Role(HAIR, part, pos))
            g.add_edge(v, h)
    return path


def _hub(g: Graph, roles: list[Role], targets: list[tuple[int, int]], subdivide: bool,
         pad: int = 0) -> int:
    """Add a hub joined to each (vertex, part) target, optionally through a
    subdivision, plus ``pad`` pendant leaves."""
    u = g.add_vertex()
    roles.append(Role(HUB, 0))
    for k in range(pad):
        leaf = g.add_vertex()
        roles.append(Role(HUB_LEAF, 0, k + 1))
        g.add_edge(u, leaf)
    for v, part in targets:
        if subdivide:
            w = g.add_vertex()
            roles.append(Role(HUB_SUB, part, roles[v].pos))
            g.add_edge(u, w)
            g.add_edge(w, v)
        else:
            g.add_edge(u, v)
    return u


def sc_to_subgraph(inst: CraftingInstance, variant: Variant = Variant.CATERPILLAR,
                   permissive: bool = False) -> tuple[Graph, Graph, SubgraphMap]:
    """Host caterpillar from s, pattern forest from the t_i.

    ``permissive`` skips the palindrome / start-and-end-with-1 checks; it exists
    for the small illustrative instances that do not satisfy them.
    """
    if inst.mode is not Mode.DOMINATION:
        raise PreconditionError("sc_to_subgraph expects a domination instance")
    check_regime(inst.ts, permissive)
    sub = variant.induced

    host, host_roles = Graph(0), []
    host_path = _caterpillar(host, host_roles, inst.s, 0, sub)
    pattern, pattern_roles = Graph(0), []
    firsts = []
    for j, t in enumerate(inst.ts, start=1):
        firsts.append((_caterpillar(pattern, pattern_roles, t, j, sub)[0], j))
    if variant.connected:
        # with few components the pattern hub would not stand out by degree
        pad = max(0, HUB_MIN_DEGREE - inst.n)
        _hub(host, host_roles, [(v, 0) for v in host_path], sub, pad)
        _hub(pattern, pattern_roles, firsts, sub, pad)
    smap = SubgraphMap(variant, host_roles, pattern_roles, tuple(len(t) for t in inst.ts))
    return host, pattern, smap


def encode_embedding(smap: SubgraphMap, inst: CraftingInstance, w: Witness) -> dict[int, int]:
    """Subgraph embedding realising a crafting witness (pattern vertex -> host vertex)."""
    host_index = {(r.kind, r.pos): v for v, r in enumerate(smap.host_roles) if r.kind != HUB_SUB}
    host_hub_sub = {r.pos: v for v, r in enumerate(smap.host_roles) if r.kind == HUB_SUB}
    offset = {}
    acc = 0
    for j in w.perm:
        offset[j] = acc
        acc += smap.lengths[j - 1]
    f = {}
    for v, r in enumerate(smap.pattern_roles):
        if r.kind == HUB:
            f[v] = host_index[(HUB, 0)]
        elif r.kind == HUB_LEAF:
            f[v] = host_index[(HUB_LEAF, r.pos)]
        elif r.kind == HUB_SUB:
            f[v] = host_hub_sub[offset[r.part] + r.pos]
        else:
            f[v] = host_index[(r.kind, offset[r.part] + r.pos)]
    return f


def decode_perm_from_embedding(smap: SubgraphMap, embedding) -> Witness:
    """Order the pattern components by where their path vertices land on the host path.

    ``embedding`` is a vertex map (dict) or an object with ``mapping`` or
    ``branch_sets`` attributes as produced by the embedding oracles.
    """
    image = _images(embedding)
    n = len(smap.lengths)
    keys = []
    for j in range(1, n + 1):
        positions = []
        for v in smap.component_vertices(j):
            if smap.pattern_roles[v].kind == PATH:
                positions.extend(smap.host_position(h) for h in image[v])
        if not positions:
            raise DecodeError(f"component {j} has no mapped path vertices")
        keys.append((min(positions), j))
    keys.sort()
    if len({k for k, _ in keys}) != n:
        raise DecodeError("two components start at the same host position")
    return Witness(tuple(j for _, j in keys))


def _images(embedding) -> dict[int, list[int]]:
    if isinstance(embedding, dict):
        return {v: [h] for v, h in embedding.items()}
    if getattr(embedding, "branch_sets", None):
        return {v: sorted(b) for v, b in embedding.branch_sets.items()}
    return {v: [h] for v, h in embedding.mapping.items()}
