"""Exhaustive pattern containment: (induced) subgraphs and the minor family.

Subgraph search is plain backtracking over a BFS order of the pattern.
Isomorphic pattern components are forced to use increasing root images,
which removes the factorial blow-up on patterns made of many equal pieces.
Minors are searched as subgraphs of contractions, and topological minors by
routing internally disjoint paths.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from craftbench.graph import Graph
from craftbench.oracles.budget import Budget

DEFAULT_BUDGET = 2_000_000


class Relation(enum.Enum):
    SUBGRAPH = "subgraph"
    INDUCED = "induced"
    MINOR = "minor"
    INDUCED_MINOR = "induced-minor"
    TOP_MINOR = "top-minor"
    SHALLOW_MINOR = "shallow-minor"


@dataclass
class EmbeddingWitness:
    relation: Relation
    mapping: dict[int, int] = field(default_factory=dict)
    branch_sets: dict[int, frozenset[int]] = field(default_factory=dict)
    paths: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)
    radius: int | None = None


def _adj(g: Graph) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


class _Plan:
    """Pattern vertex order, anchors and symmetry constraints."""

    def __init__(self, p: Graph):
        padj = _adj(p)
        comps = sorted(p.components(), key=lambda c: (-len(c), c))
        nxg = p.to_networkx()
        subgraphs = [nxg.subgraph(c) for c in comps]
        # representative component for each isomorphism class plus root choice
        reps: list[int] = []
        roots: list[int] = []
        self.prev_twin: list[int | None] = []
        for ci, comp in enumerate(comps):
            twin = None
            for ri in reversed(reps):
                if len(comps[ri]) == len(comp) and nx.is_isomorphic(subgraphs[ri], subgraphs[ci]):
                    twin = ri
                    break
            if twin is None:
                root = min(comp, key=lambda v: (-len(padj[v]), v))
                reps.append(ci)
                self.prev_twin.append(None)
            else:
                iso = nx.vf2pp_isomorphism(subgraphs[twin], subgraphs[ci])
                root = iso[roots[twin]]
                reps.append(ci)
                self.prev_twin.append(twin)
            roots.append(root)
        self.order: list[int] = []
        self.anchor: dict[int, int | None] = {}
        self.comp_of: dict[int, int] = {}
        self.comp_end: set[int] = set()
        self.sizes = [len(c) for c in comps]
        children: dict[int, list[int]] = {}
        for ci, root in enumerate(roots):
            # depth-first, leaves first: a component is finished before the
            # next one starts, so failures surface early
            self.anchor[root] = None
            stack = [root]
            while stack:
                v = stack.pop()
                self.order.append(v)
                self.comp_of[v] = ci
                kids = [w for w in padj[v] if w not in self.anchor]
                kids.sort(key=lambda w: (len(padj[w]) > 1, w))
                for w in kids:
                    self.anchor[w] = v
                children[v] = kids
                stack.extend(reversed(kids))
            self.comp_end.add(len(self.order) - 1)
        # in a forest, isomorphic sibling subtrees can be swapped freely, so
        # their roots are forced into increasing host order
        self.sibling_twin: dict[int, int] = {}
        if p.m == p.n - len(comps):
            label: dict[int, int] = {}
            shapes: dict[tuple, int] = {}
            for v in reversed(self.order):
                key = tuple(sorted(label[w] for w in children[v]))
                label[v] = shapes.setdefault(key, len(shapes))
            for v in self.order:
                last: dict[int, int] = {}
                for w in children[v]:
                    if label[w] in last:
                        self.sibling_twin[w] = last[label[w]]
                    last[label[w]] = w
        self.roots = roots
        self.padj = padj


def _subgraph_search(p: Graph, g: Graph, induced: bool, budget: Budget) -> dict[int, int] | None:
    if p.n > g.n or p.m > g.m:
        return None
    if p.n == 0:
        return {}
    gadj = _adj(g)
    gdeg = [len(a) for a in gadj]
    pdeg = sorted((p.degree(v) for v in range(p.n)), reverse=True)
    if any(d > h for d, h in zip(pdeg, sorted(gdeg, reverse=True))):
        return None
    plan = _Plan(p)
    f: dict[int, int] = {}
    used = [False] * g.n
    root_image: dict[int, int] = {}
    order = plan.order

    def free_piece_ok(next_comp: int) -> bool:
        if next_comp >= len(plan.sizes):
            return True
        need = max(plan.sizes[next_comp:])
        seen = [False] * g.n
        best = 0
        for v in range(g.n):
            if used[v] or seen[v]:
                continue
            size, stack = 0, [v]
            seen[v] = True
            while stack:
                x = stack.pop()
                size += 1
                for y in gadj[x]:
                    if not used[y] and not seen[y]:
                        seen[y] = True
                        stack.append(y)
            best = max(best, size)
            if best >= need:
                return True
        return False

    def candidates(x: int):
        a = plan.anchor[x]
        if a is None:
            twin = plan.prev_twin[plan.comp_of[x]]
            lo = root_image[twin] + 1 if twin is not None else 0
            pool = range(lo, g.n)
        else:
            pool = sorted(gadj[f[a]])
            twin = plan.sibling_twin.get(x)
            if twin is not None:
                pool = [v for v in pool if v > f[twin]]
        need = len(plan.padj[x])
        for v in pool:
            if not used[v] and gdeg[v] >= need:
                yield v

    inv: dict[int, int] = {}
    pending = [len(a) for a in plan.padj]  # pattern neighbours not yet placed
    free_nb = gdeg[:]  # host neighbours not yet used

    def consistent(x: int, v: int) -> bool:
        for y in plan.padj[x]:
            if y in f and f[y] not in gadj[v]:
                return False
        if induced:
            for w in gadj[v]:
                if used[w] and inv[w] not in plan.padj[x]:
                    return False
        return True

    def place(x: int, v: int, sign: int) -> None:
        for y in plan.padj[x]:
            pending[y] -= sign
        for w in gadj[v]:
            free_nb[w] -= sign

    def forward_ok(x: int, v: int) -> bool:
        """Every placed vertex keeps enough free host neighbours for the
        pattern neighbours it still has to receive."""
        if pending[x] > free_nb[v]:
            return False
        for w in gadj[v]:
            if used[w] and pending[inv[w]] > free_nb[w]:
                return False
        return True

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for v in candidates(x):
            budget.tick()
            if not consistent(x, v):
                continue
            f[x] = v
            inv[v] = x
            used[v] = True
            place(x, v, 1)
            if plan.anchor[x] is None:
                root_image[plan.comp_of[x]] = v
            ok = forward_ok(x, v)
            if ok and k in plan.comp_end:
                ok = free_piece_ok(plan.comp_of[x] + 1)
            if ok and rec(k + 1):
                return True
            place(x, v, -1)
            del f[x], inv[v]
            used[v] = False
        return False

    return dict(f) if rec(0) else None


def _radius_ok(gadj: list[set[int]], part: frozenset[int], r: int) -> bool:
    for centre in sorted(part):
        dist = {centre: 0}
        queue = deque([centre])
        while queue:
            x = queue.popleft()
            for y in gadj[x]:
                if y in part and y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if len(dist) == len(part) and max(dist.values()) <= r:
            return True
    return False


def _forest_code(q: Graph) -> tuple | None:
    """Canonical isomorphism code of a forest (AHU at the centre), None otherwise."""
    if q.m != q.n - len(q.components()):
        return None
    qadj = _adj(q)

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(w, v) for w in qadj[v] if w != parent)) + ")"

    codes = []
    for comp in q.components():
        layer = [v for v in comp if len(qadj[v]) <= 1]
        deg = {v: len(qadj[v]) for v in comp}
        left = len(comp)
        while left > 2:
            left -= len(layer)
            nxt = []
            for v in layer:
                for w in qadj[v]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
            layer = nxt
        codes.append(min(encode(c, -1) for c in layer))
    return tuple(sorted(codes))


def _quotient(g: Graph, parts: list[frozenset[int]]) -> Graph:
    where = {v: i for i, c in enumerate(parts) for v in c}
    q = Graph(len(parts))
    for u, v in g.edges:
        a, b = where[u], where[v]
        if a != b and not q.has_edge(a, b):
            q.add_edge(a, b)
    return q


def _minor_search(p: Graph, g: Graph, induced: bool, radius: int | None,
                  budget: Budget) -> dict[int, frozenset[int]] | None:
    """Subgraph of a contraction.  Edges at leaves are never contracted:
    contracting a pendant edge equals deleting the leaf, and deletions are
    already covered by the (induced) subgraph step."""
    if p.n > g.n:
        return None
    gadj = _adj(g)
    contractible = [(u, v) for u, v in g.edges if len(gadj[u]) >= 2 and len(gadj[v]) >= 2]
    slack = g.n - p.n
    seen: set[frozenset[frozenset[int]]] = set()
    refuted: set[tuple] = set()  # forest quotients already known not to contain P
    for size in range(0, min(slack, len(contractible)) + 1):
        for chosen in itertools.combinations(contractible, size):
            budget.tick()
            parent = list(range(g.n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            merged = True
            for u, v in chosen:
                a, b = find(u), find(v)
                if a == b:
                    merged = False  # a cycle edge; a smaller set gives the same partition
                    break
                parent[max(a, b)] = min(a, b)
            if not merged:
                continue
            classes: dict[int, set[int]] = {}
            for v in range(g.n):
                classes.setdefault(find(v), set()).add(v)
            parts = sorted((frozenset(c) for c in classes.values()), key=min)
            key = frozenset(parts)
            if key in seen:
                continue
            seen.add(key)
            if radius is not None and not all(_radius_ok(gadj, c, radius) for c in parts):
                continue
            q = _quotient(g, parts)
            if q.m < p.m:
                continue
            code = _forest_code(q)
            if code is not None and code in refuted:
                continue
            f = _subgraph_search(p, q, induced, budget)
            if f is not None:
                return {x: parts[f[x]] for x in range(p.n)}
            if code is not None:
                refuted.add(code)
    return None


def _topological_search(p: Graph, g: Graph, budget: Budget):
    """Branch vertices plus internally disjoint paths, grown along a BFS order."""
    if p.n > g.n or p.m > g.m:
        return None
    if p.n == 0:
        return {}, {}
    plan = _Plan(p)
    gadj = _adj(g)
    f: dict[int, int] = {}
    used = [False] * g.n
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    root_image: dict[int, int] = {}
    order = plan.order
    slack = [g.n - p.n]

    def routes(a: int, b: int | None, x_deg: int):
        """Simple paths a -> b (or a -> any free endpoint when b is None)
        through unused vertices, at most slack[0] internal vertices."""
        path = [a]

        def walk(v: int):
            for w in sorted(gadj[v]):
                if b is not None and w == b:
                    yield tuple(path) + (b,)
                    continue
                if used[w]:
                    continue
                if b is None and len(gadj[w]) >= x_deg:
                    yield tuple(path) + (w,)
                if len(path) - 1 < slack[0]:
                    used[w] = True
                    path.append(w)
                    yield from walk(w)
                    path.pop()
                    used[w] = False

        yield from walk(a)

    def occupy(route, flag):
        for v in route[1:-1]:
            used[v] = flag
        slack[0] += -(len(route) - 2) if flag else len(route) - 2

    def close_edges(x: int, others: list[int], i: int) -> bool:
        if i == len(others):
            return True
        y = others[i]
        for route in list(routes(f[x], f[y], 0)):
            budget.tick()
            occupy(route, True)
            paths[tuple(sorted((x, y)))] = route if x < y else route[::-1]
            if close_edges(x, others, i + 1):
                return True
            del paths[tuple(sorted((x, y)))]
            occupy(route, False)
        return False

    def place(k: int, x: int, v: int) -> bool:
        f[x] = v
        used[v] = True
        others = [y for y in sorted(plan.padj[x]) if y in f and y != x and y != plan.anchor[x]]
        if close_edges(x, others, 0) and rec(k + 1):
            return True
        used[v] = False
        del f[x]
        return False

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        need = len(plan.padj[x])
        a = plan.anchor[x]
        if a is None:
            twin = plan.prev_twin[plan.comp_of[x]]
            lo = root_image[twin] + 1 if twin is not None else 0
            for v in range(lo, g.n):
                budget.tick()
                if used[v] or len(gadj[v]) < need:
                    continue
                root_image[plan.comp_of[x]] = v
                if place(k, x, v):
                    return True
            return False
        twin = plan.sibling_twin.get(x)
        for route in list(routes(f[a], None, need)):
            budget.tick()
            v = route[-1]
            if used[v] or (twin is not None and v < f[twin]):
                continue
            occupy(route, True)
            paths[tuple(sorted((a, x)))] = route if a < x else route[::-1]
            if place(k, x, v):
                return True
            del paths[tuple(sorted((a, x)))]
            occupy(route, False)
        return False

    return (dict(f), dict(paths)) if rec(0) else None


def embed_bf(p: Graph, g: Graph, relation: Relation, radius: int | None = None,
             budget: int | None = DEFAULT_BUDGET) -> EmbeddingWitness | None:
    """Decide whether P is contained in G under ``relation``.

    Raises BudgetExceeded when the search is cut off; ``None`` is a proven no.
    """
    b = Budget(budget)
    if relation is Relation.SHALLOW_MINOR and (radius is None or radius < 0):
        raise ValueError("shallow minors need a radius >= 0")
    if relation in (Relation.SUBGRAPH, Relation.INDUCED):
        f = _subgraph_search(p, g, relation is Relation.INDUCED, b)
        return None if f is None else EmbeddingWitness(relation, mapping=f)
    if relation in (Relation.MINOR, Relation.INDUCED_MINOR, Relation.SHALLOW_MINOR):
        sets = _minor_search(p, g, relation is Relation.INDUCED_MINOR,
                             radius if relation is Relation.SHALLOW_MINOR else None, b)
        if sets is None:
            return None
        return EmbeddingWitness(relation, branch_sets=sets,
                                radius=radius if relation is Relation.SHALLOW_MINOR else None)
    found = _topological_search(p, g, b)
    if found is None:
        return None
    f, paths = found
    return EmbeddingWitness(relation, mapping=f, paths=paths)


def verify_embedding(p: Graph, g: Graph, w: EmbeddingWitness) -> bool:
    """Check a witness against the definitions, independently of the search."""
    gadj = _adj(g)
    rel = w.relation
    if rel in (Relation.SUBGRAPH, Relation.INDUCED, Relation.TOP_MINOR):
        f = w.mapping
        if sorted(f) != list(range(p.n)) or len(set(f.values())) != p.n:
            return False
        if not all(0 <= v < g.n for v in f.values()):
            return False
        if rel is Relation.TOP_MINOR:
            inner: set[int] = set()
            branch = set(f.values())
            for x, y in p.edges:
                route = w.paths.get((x, y))
                if route is None or route[0] != f[x] or route[-1] != f[y]:
                    return False
                if any(b not in gadj[a] for a, b in zip(route, route[1:])):
                    return False
                mid = set(route[1:-1])
                if len(mid) != len(route) - 2 or mid & branch or mid & inner:
                    return False
                inner |= mid
            return True
        for x in range(p.n):
            for y in range(x + 1, p.n):
                pe, ge = p.has_edge(x, y), f[y] in gadj[f[x]]
                if pe and not ge:
                    return False
                if rel is Relation.INDUCED and ge and not pe:
                    return False
        return True

    sets = w.branch_sets
    if sorted(sets) != list(range(p.n)):
        return False
    owner: dict[int, int] = {}
    for x, part in sets.items():
        if not part or not all(0 <= v < g.n for v in part):
            return False
        for v in part:
            if v in owner:
                return False
            owner[v] = x
        if not _radius_ok(gadj, frozenset(part), len(part) if w.radius is None else w.radius):
            return False
    touching = set()
    for u, v in g.edges:
        if u in owner and v in owner and owner[u] != owner[v]:
            touching.add(tuple(sorted((owner[u], owner[v]))))
    for x, y in p.edges:
        if (x, y) not in touching:
            return False
    if rel is Relation.INDUCED_MINOR:
        return touching <= set(p.edges)
    return True
