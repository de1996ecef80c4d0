"""Source problems for the reductions: 3-CNF formulas and X3C instances."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF over variables ``1..num_vars``; literal ``-i`` is the negation of x_i."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        for j, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValueError(f"clause {j} has {len(clause)} literals, expected 3")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {j}: literal {lit} outside 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """``assignment[i - 1]`` is the value of x_i."""
        if len(assignment) != self.num_vars:
            raise ValueError("assignment has the wrong length")
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)


@dataclass(frozen=True)
class X3cInstance:
    """Universe ``1..n`` and a list of 3-element subsets."""

    n: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        if self.n < 0 or self.n % 3:
            raise ValueError(f"universe size {self.n} is not a multiple of 3")
        for j, s in enumerate(self.sets, start=1):
            if len(s) != 3 or not all(1 <= x <= self.n for x in s):
                raise ValueError(f"X_{j} = {sorted(s)} is not a 3-subset of 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.sets)

    def is_exact_cover(self, chosen: Sequence[int]) -> bool:
        """``chosen`` holds 1-based set indices."""
        covered = [x for j in chosen for x in self.sets[j - 1]]
        return len(set(chosen)) == len(chosen) and sorted(covered) == list(range(1, self.n + 1))
