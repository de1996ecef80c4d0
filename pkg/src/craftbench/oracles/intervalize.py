"""Exact intervalization of small coloured graphs by an open/close event sweep."""

from __future__ import annotations

from craftbench.graph import ColoredGraph, IntervalModel
from craftbench.oracles.budget import Budget, BudgetExceeded

DEFAULT_VERTEX_BUDGET = 15


def intervalize_exact(cg: ColoredGraph, vertex_budget: int = DEFAULT_VERTEX_BUDGET,
                      state_budget: int | None = None) -> IntervalModel | None:
    """Interval model with the colouring still proper, or None if none exists.

    Two intervals meet iff both are open at some moment, so an open is legal
    when its colour is not currently open, and a close is legal once every
    neighbour has opened.  Closing is done eagerly: it only removes conflicts.
    """
    n = cg.n
    if n > vertex_budget:
        raise BudgetExceeded(f"{n} vertices exceed the intervalization budget of {vertex_budget}")
    if n == 0:
        return IntervalModel([])
    g = cg.graph
    nb = [0] * n
    for u, v in g.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    colour = cg.colors
    full = (1 << n) - 1
    budget = Budget(state_budget)
    dead: set[tuple[int, int]] = set()
    events: list[tuple[str, int]] = []

    def close_all(closed: int, opened: int) -> tuple[int, int, list[int]]:
        ever = closed | opened
        shut = [v for v in range(n) if opened >> v & 1 and nb[v] & ~ever == 0]
        for v in shut:
            opened &= ~(1 << v)
            closed |= 1 << v
        return closed, opened, shut

    def rec(closed: int, opened: int) -> bool:
        if closed == full:
            return True
        if (closed, opened) in dead:
            return False
        budget.tick()
        live = {colour[v] for v in range(n) if opened >> v & 1}
        for v in range(n):
            if (closed | opened) >> v & 1 or colour[v] in live:
                continue
            c2, o2, shut = close_all(closed, opened | 1 << v)
            events.append(("open", v))
            events.extend(("close", u) for u in shut)
            if rec(c2, o2):
                return True
            del events[len(events) - 1 - len(shut):]
        dead.add((closed, opened))
        return False

    if not rec(0, 0):
        return None
    left, right = [0] * n, [0] * n
    for t, (kind, v) in enumerate(events):
        (left if kind == "open" else right)[v] = t
    return IntervalModel(list(zip(left, right)))
