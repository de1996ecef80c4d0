"""Exhaustive SAT and exact-cover deciders."""

from __future__ import annotations

import itertools

from craftbench.problems import CnfFormula, X3cInstance


def sat_bf(cnf: CnfFormula) -> list[bool] | None:
    """First satisfying assignment in lexicographic order (False < True, x_1 first)."""
    if cnf.num_vars > 20:
        raise ValueError("sat_bf is limited to 20 variables")
    for bits in itertools.product((False, True), repeat=cnf.num_vars):
        if cnf.satisfied_by(bits):
            return list(bits)
    return None


def x3c_bf(x3c: X3cInstance) -> tuple[int, ...] | None:
    """First exact cover (1-based set indices) in lexicographic subset order."""
    universe = frozenset(range(1, x3c.n + 1))
    for chosen in itertools.combinations(range(1, x3c.m + 1), x3c.n // 3):
        covered = frozenset().union(*(x3c.sets[j - 1] for j in chosen))
        if covered == universe:
            return chosen
    return None
