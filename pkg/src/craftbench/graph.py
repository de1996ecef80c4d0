"""Graphs, colourings, decompositions and interval models with validators."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

log = logging.getLogger(__name__)


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self._edges: set[tuple[int, int]] = set()
        for u, v in edges:
            self.add_edge(u, v)

    def add_vertex(self) -> int:
        self.adj.append(set())
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"loop at {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self._edges.add(_norm(u, v))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def copy(self) -> Graph:
        return Graph(self.n, self._edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            comp, stack = [], [root]
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def induced(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled densely; also returns the old labels."""
        index = {v: i for i, v in enumerate(vertices)}
        sub = Graph(len(vertices))
        for u, v in self._edges:
            if u in index and v in index:
                sub.add_edge(index[u], index[v])
        return sub, list(vertices)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self._edges)
        return g


def disjoint_union(graphs: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """Union with relabelling; returns the offset of each part."""
    offsets, total = [], 0
    for g in graphs:
        offsets.append(total)
        total += g.n
    out = Graph(total)
    for g, off in zip(graphs, offsets):
        for u, v in g.edges:
            out.add_edge(u + off, v + off)
    return out, offsets


class ColoredGraph:
    def __init__(self, graph: Graph, colors: Sequence[int]):
        if len(colors) != graph.n:
            raise ValueError(f"{len(colors)} colours for {graph.n} vertices")
        bad = [(u, v) for u, v in graph.edges if colors[u] == colors[v]]
        if bad:
            raise ValueError(f"colouring is not proper on edges {bad[:5]}")
        self.graph = graph
        self.colors = list(colors)

    @property
    def n(self) -> int:
        return self.graph.n

    def palette(self) -> set[int]:
        return set(self.colors)

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.graph.m}, colours={len(self.palette())})"


def is_proper(graph: Graph, colors: Sequence[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in graph.edges)


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __init__(self, bags: Iterable[Iterable[int]]):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(i, i + 1) for i in range(len(self.bags) - 1)]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags plus a parent array over bag indices (``-1`` marks the root)."""

    bags: tuple[frozenset[int], ...]
    parents: tuple[int, ...]

    def __init__(self, bags: Iterable[Iterable[int]], parents: Iterable[int]):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))
        object.__setattr__(self, "parents", tuple(parents))

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(p, i) for i, p in enumerate(self.parents) if p >= 0]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def decomposition_errors(g: Graph, d: PathDecomposition | TreeDecomposition,
                         max_width: int | None = None,
                         max_bags: int | None = None) -> list[str]:
    errors = []
    k = len(d.bags)
    for i, bag in enumerate(d.bags):
        stray = [v for v in bag if not (isinstance(v, int) and 0 <= v < g.n)]
        if stray:
            errors.append(f"bag {i} has unknown vertices {sorted(stray, key=str)}")
    tree = d.tree_edges()
    if isinstance(d, TreeDecomposition):
        if len(d.parents) != k:
            errors.append(f"{len(d.parents)} parents for {k} bags")
            return errors
        if any(not -1 <= p < k or p == i for i, p in enumerate(d.parents)):
            errors.append("parent array has out-of-range entries")
            return errors
    if k and not _is_tree(k, tree):
        errors.append("decomposition shape is not a tree")
    if errors:
        return errors

    where: list[list[int]] = [[] for _ in range(g.n)]
    for i, bag in enumerate(d.bags):
        for v in bag:
            where[v].append(i)
    for v in range(g.n):
        if not where[v]:
            errors.append(f"vertex {v} is in no bag")
        elif not _connected_subset(set(where[v]), tree):
            errors.append(f"bags containing vertex {v} are not connected")
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in d.bags):
            errors.append(f"edge ({u}, {v}) is not covered")
    if max_width is not None and d.width > max_width:
        errors.append(f"width {d.width} exceeds {max_width}")
    if max_bags is not None and k > max_bags:
        errors.append(f"{k} bags exceed budget {max_bags}")
    return errors


def validate_decomposition(g: Graph, d: PathDecomposition | TreeDecomposition,
                           max_width: int | None = None, max_bags: int | None = None) -> bool:
    errors = decomposition_errors(g, d, max_width, max_bags)
    if errors:
        log.debug("decomposition rejected: %s", "; ".join(errors[:5]))
    return not errors


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _is_tree(k: int, edges: list[tuple[int, int]]) -> bool:
    if len(edges) != k - 1:
        return False
    dsu = _DSU(range(k))
    return all(dsu.union(a, b) for a, b in edges)


def _connected_subset(nodes: set[int], tree_edges: list[tuple[int, int]]) -> bool:
    dsu = _DSU(nodes)
    joins = sum(1 for a, b in tree_edges if a in nodes and b in nodes and dsu.union(a, b))
    return joins == len(nodes) - 1


@dataclass(frozen=True)
class IntervalModel:
    """Closed integer intervals, one per vertex, ``intervals[v] = (l, r)``."""

    intervals: tuple[tuple[int, int], ...]

    def __init__(self, intervals: Iterable[tuple[int, int]]):
        object.__setattr__(self, "intervals", tuple((int(l), int(r)) for l, r in intervals))

    def __len__(self) -> int:
        return len(self.intervals)

    def intersect(self, u: int, v: int) -> bool:
        lu, ru = self.intervals[u]
        lv, rv = self.intervals[v]
        return lu <= rv and lv <= ru

    @classmethod
    def from_real(cls, intervals: Sequence[tuple[float, float]]) -> IntervalModel:
        """Replace arbitrary distinct real endpoints by their ranks."""
        points = sorted(x for iv in intervals for x in iv)
        if len(set(points)) != len(points):
            raise ValueError("endpoints are not pairwise distinct")
        rank = {x: i for i, x in enumerate(points)}
        return cls((rank[l], rank[r]) for l, r in intervals)


def interval_model_errors(cg: ColoredGraph, m: IntervalModel) -> list[str]:
    errors = []
    if len(m) != cg.n:
        return [f"model has {len(m)} intervals for {cg.n} vertices"]
    for v, (l, r) in enumerate(m.intervals):
        if not l < r:
            errors.append(f"interval of {v} is degenerate: [{l}, {r}]")
    points = [x for iv in m.intervals for x in iv]
    if len(set(points)) != len(points):
        errors.append("endpoints are not pairwise distinct")
    for u, v in cg.graph.edges:
        if not m.intersect(u, v):
            errors.append(f"edge ({u}, {v}) not realised")
    # sweep: at each left endpoint, the new interval meets everything still open
    events = sorted((x, kind, v) for v, (l, r) in enumerate(m.intervals)
                    for x, kind in ((l, 0), (r, 1)))
    open_by_colour: dict[int, int] = {}
    for _, kind, v in events:
        c = cg.colors[v]
        if kind == 0:
            if c in open_by_colour:
                errors.append(f"vertices {open_by_colour[c]} and {v} share colour {c} and intersect")
            else:
                open_by_colour[c] = v
        elif open_by_colour.get(c) == v:
            del open_by_colour[c]
    return errors


def validate_interval_model(cg: ColoredGraph, m: IntervalModel) -> bool:
    errors = interval_model_errors(cg, m)
    if errors:
        log.debug("interval model rejected: %s", "; ".join(errors[:5]))
    return not errors


def is_caterpillar(g: Graph) -> bool:
    """Connected, acyclic, and the non-leaf vertices induce a path."""
    if not g.is_tree():
        return False
    spine = [v for v in range(g.n) if g.degree(v) > 1]
    if not spine:
        return True
    spine_set = set(spine)
    degs = [sum(1 for w in g.adj[v] if w in spine_set) for v in spine]
    return max(degs) <= 2


def subdivide(g: Graph, edges: Iterable[tuple[int, int]]) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Replace each listed edge by a path through a fresh vertex.

    Returns the new graph and the fresh vertex created for every edge.
    """
    chosen = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        chosen.append(_norm(u, v))
    if len(set(chosen)) != len(chosen):
        raise ValueError("edge listed twice")
    out = Graph(g.n, [e for e in g.edges if e not in set(chosen)])
    created = {}
    for u, v in chosen:
        w = out.add_vertex()
        out.add_edge(u, w)
        out.add_edge(w, v)
        created[(u, v)] = w
    return out, created
