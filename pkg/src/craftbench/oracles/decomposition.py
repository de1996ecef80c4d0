"""Exact search for path/tree decompositions with bounded width and bag count."""

from __future__ import annotations

import enum
import itertools
from collections import deque
from functools import lru_cache

import networkx as nx

from craftbench.graph import Graph, PathDecomposition, TreeDecomposition
from craftbench.oracles.budget import Budget

DEFAULT_STATE_BUDGET = 500_000


class Shape(enum.Enum):
    PATH = "path"
    TREE = "tree"


def _masks(g: Graph) -> list[int]:
    nb = [0] * g.n
    for u, v in g.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    return nb


def _bits(mask: int) -> list[int]:
    out, v = [], 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _submasks(pool: int, max_size: int, exact: bool = False):
    """Non-empty submasks of ``pool`` with at most ``max_size`` bits, small first."""
    items = _bits(pool)
    sizes = [len(items)] if exact else range(1, min(max_size, len(items)) + 1)
    for k in sizes:
        if k > max_size:
            return
        for combo in itertools.combinations(items, k):
            yield sum(1 << v for v in combo)


def _clique_too_big(g: Graph, max_width: int) -> bool:
    if g.n == 0:
        return False
    return max(len(c) for c in nx.find_cliques(g.to_networkx())) > max_width + 1


def mspd_exact(g: Graph, max_width: int, max_bags: int, shape: Shape = Shape.PATH,
               budget: int | None = DEFAULT_STATE_BUDGET):
    """A decomposition with width <= max_width and at most max_bags bags, or None.

    Raises BudgetExceeded when the state budget runs out before a decision.
    """
    if g.n == 0:
        return PathDecomposition([]) if shape is Shape.PATH else TreeDecomposition([], [])
    if max_bags < 1 or _clique_too_big(g, max_width):
        return None
    b = Budget(budget)
    if shape is Shape.PATH:
        return _path_search(g, max_width + 1, max_bags, b)
    return _tree_search(g, max_width + 1, max_bags, b)


def _path_search(g: Graph, cap: int, max_bags: int, budget: Budget):
    """BFS over (forgotten, bag) states.  A vertex is forgotten as soon as all
    its neighbours have been seen, which never hurts."""
    nb = _masks(g)
    full = (1 << g.n) - 1

    def forget(done: int, bag: int) -> tuple[int, int]:
        seen = done | bag
        drop = 0
        for v in _bits(bag):
            if nb[v] & ~seen == 0:
                drop |= 1 << v
        return done | drop, bag & ~drop

    start = (0, 0)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    frontier = [start]
    for level in range(1, max_bags + 1):
        nxt = []
        last = level == max_bags
        for state in frontier:
            done, kept = state
            unseen = full & ~(done | kept)
            room = cap - bin(kept).count("1")
            for intro in _submasks(unseen, room, exact=last):
                budget.tick()
                bag = kept | intro
                if intro == unseen:
                    bags = [bag]
                    back = state
                    while parent[back] is not None:
                        back, prev_bag = parent[back]
                        bags.append(prev_bag)
                    return PathDecomposition([_bits(x) for x in reversed(bags)])
                child = forget(done, bag)
                if child not in parent:
                    parent[child] = (state, bag)
                    nxt.append(child)
        frontier = nxt
    return None


def _tree_search(g: Graph, cap: int, max_bags: int, budget: Budget):
    """Recursion on vertex blocks U hanging below a bag that contains N(U)."""
    nb = _masks(g)
    full = (1 << g.n) - 1

    def neighbourhood(u: int) -> int:
        out = 0
        for v in _bits(u):
            out |= nb[v]
        return out & ~u

    def components(mask: int) -> list[int]:
        comps, rest = [], mask
        while rest:
            low = rest & -rest
            comp, queue = low, deque([low.bit_length() - 1])
            while queue:
                v = queue.popleft()
                new = nb[v] & mask & ~comp
                comp |= new
                queue.extend(_bits(new))
            comps.append(comp)
            rest &= ~comp
        return comps

    @lru_cache(maxsize=None)
    def best(u: int, allow: int) -> tuple[int, tuple] | None:
        """Fewest bags (at most ``allow``) covering block u, with the root bag
        containing N(u); returns (count, plan) or None."""
        boundary = neighbourhood(u)
        room = cap - bin(boundary).count("1")
        if room < 1 or allow < 1:
            return None
        pool = _submasks(u, room, exact=allow == 1)
        top = None
        for chosen in pool:
            budget.tick()
            bag = boundary | chosen
            comps = components(u & ~chosen)
            limit = allow if top is None else top[0] - 1
            for groups in _partitions(comps):
                spare = limit - 1 - len(groups)
                if spare < 0:
                    continue
                total, plans = 1, []
                for grp in groups:
                    sub = best(grp, spare + 1)
                    if sub is None:
                        break
                    total += sub[0]
                    spare -= sub[0] - 1
                    plans.append((grp, sub[1]))
                else:
                    if top is None or total < top[0]:
                        top = (total, (bag, tuple(plans)))
                        limit = total - 1
            if top is not None and top[0] == 1:
                break
        return top

    found = best(full, max_bags)
    if found is None:
        return None
    plan = found[1]
    bags: list[list[int]] = []
    parents: list[int] = []

    def emit(node, parent_idx):
        bag, children = node
        idx = len(bags)
        bags.append(_bits(bag))
        parents.append(parent_idx)
        for _, sub in children:
            emit(sub, idx)

    emit(plan, -1)
    return TreeDecomposition(bags, parents)


def _partitions(items: list[int]):
    """Set partitions of ``items``, each yielded as a list of OR-ed masks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        yield [first] + part
        for i in range(len(part)):
            yield part[:i] + [part[i] | first] + part[i + 1:]
