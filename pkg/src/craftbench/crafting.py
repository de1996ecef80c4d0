"""String Crafting / Orthogonal Vector Crafting instances and solvers."""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from craftbench.bitstring import BitString, Mode, check_pair, concat


class InstanceError(ValueError):
    pass


class Method(enum.Enum):
    BRUTE_FORCE = "bruteforce"
    HELD_KARP = "heldkarp"
    SPLIT = "split"


@dataclass(frozen=True)
class CraftingInstance:
    s: BitString
    ts: tuple[BitString, ...]
    mode: Mode = Mode.DOMINATION

    def __post_init__(self):
        object.__setattr__(self, "ts", tuple(self.ts))
        if any(len(t) < 1 for t in self.ts):
            raise InstanceError("every t_i must have length >= 1")
        total = sum(len(t) for t in self.ts)
        if total != len(self.s):
            raise InstanceError(f"|s| = {len(self.s)} but sum |t_i| = {total}")

    @classmethod
    def of(cls, s: str, ts: Sequence[str], mode: Mode = Mode.DOMINATION) -> CraftingInstance:
        return cls(BitString.from_str(s), tuple(BitString.from_str(t) for t in ts), mode)

    @property
    def n(self) -> int:
        return len(self.ts)

    def with_mode(self, mode: Mode) -> CraftingInstance:
        return CraftingInstance(self.s, self.ts, mode)


@dataclass(frozen=True)
class Witness:
    """A permutation stored as the sequence Pi(1), ..., Pi(n) (1-based)."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise InstanceError(f"not a permutation of 1..{len(self.perm)}: {self.perm}")

    def __str__(self) -> str:
        return " ".join(map(str, self.perm))


def crafted(inst: CraftingInstance, w: Witness) -> BitString:
    """The concatenation t^Pi."""
    return concat(inst.ts[i - 1] for i in w.perm)


def verify_witness(inst: CraftingInstance, w: Witness) -> bool:
    if len(w.perm) != inst.n:
        raise InstanceError(f"witness has {len(w.perm)} entries, instance has {inst.n} strings")
    return check_pair(inst.s, crafted(inst, w), inst.mode)


def locate(inst: CraftingInstance, w: Witness, i: int) -> tuple[int, int]:
    """Block index j (in Pi order) and offset of position ``i`` inside t_{Pi(j)}.

    ``j`` is the least block whose prefix sum reaches ``i``.
    """
    if not 1 <= i <= len(inst.s):
        raise IndexError(f"position {i} outside 1..{len(inst.s)}")
    before = 0
    for j, k in enumerate(w.perm, start=1):
        size = len(inst.ts[k - 1])
        if before + size >= i:
            return j, i - before
        before += size
    raise AssertionError("unreachable for a valid instance")


@dataclass
class SolveResult:
    witness: Witness | None
    states: int = 0
    method: Method = Method.HELD_KARP

    @property
    def yes(self) -> bool:
        return self.witness is not None


def solve(inst: CraftingInstance, method: Method = Method.HELD_KARP) -> Witness | None:
    return solve_detailed(inst, method).witness


def solve_detailed(inst: CraftingInstance, method: Method = Method.HELD_KARP) -> SolveResult:
    if method is Method.BRUTE_FORCE:
        return _brute_force(inst)
    if method is Method.HELD_KARP:
        units = [_Unit(t, members) for t, members in _groups(inst.ts)]
        return _subset_dp(inst, units, key=tuple, method=method)
    if method is Method.SPLIT:
        return _split(inst)
    raise ValueError(f"unknown method {method!r}")


def _groups(ts: Sequence[BitString], indices: Sequence[int] | None = None):
    """Distinct strings with their 1-based member indices, ordered by first member."""
    members: dict[BitString, list[int]] = defaultdict(list)
    for i in (indices if indices is not None else range(1, len(ts) + 1)):
        members[ts[i - 1]].append(i)
    return sorted(members.items(), key=lambda kv: kv[1][0])


def distinct_orderings(inst: CraftingInstance) -> Iterator[tuple[int, ...]]:
    """Distinct arrangements of the multiset ``ts``, each as its lexicographically
    least index sequence, in increasing lexicographic order."""
    groups = [m for _, m in _groups(inst.ts)]
    used = [0] * len(groups)
    seq: list[int] = []

    def rec():
        if len(seq) == inst.n:
            yield tuple(seq)
            return
        options = sorted((g[used[k]], k) for k, g in enumerate(groups) if used[k] < len(g))
        for idx, k in options:
            used[k] += 1
            seq.append(idx)
            yield from rec()
            seq.pop()
            used[k] -= 1

    yield from rec()


def _brute_force(inst: CraftingInstance) -> SolveResult:
    count = 0
    for perm in distinct_orderings(inst):
        count += 1
        w = Witness(perm)
        if verify_witness(inst, w):
            return SolveResult(w, count, Method.BRUTE_FORCE)
    return SolveResult(None, count, Method.BRUTE_FORCE)


@dataclass
class _Unit:
    string: BitString
    members: list[int] = field(default_factory=list)


def _subset_dp(inst: CraftingInstance, units: list[_Unit], key, method: Method) -> SolveResult:
    """Forward prefix-feasibility DP over multiplicity vectors of ``units``.

    A state is the vector of how many strings of each unit are already placed;
    its prefix length is implied.  Predecessor edges are kept so that the
    lexicographically least witness can be read off afterwards.
    """
    s = inst.s
    sizes = [len(u.string) for u in units]
    start = (0,) * len(units)
    full = tuple(len(u.members) for u in units)
    preds: dict[tuple, list[tuple[tuple, int]]] = {start: []}
    keys = {key(start)}
    layer = [start]
    for _ in range(inst.n):
        nxt = []
        for state in layer:
            offset = sum(c * z for c, z in zip(state, sizes))
            for u, unit in enumerate(units):
                if state[u] == len(unit.members):
                    continue
                if not check_pair(s.slice(offset + 1, sizes[u]), unit.string, inst.mode):
                    continue
                ns = state[:u] + (state[u] + 1,) + state[u + 1:]
                if ns not in preds:
                    preds[ns] = []
                    keys.add(key(ns))
                    nxt.append(ns)
                preds[ns].append((state, u))
        layer = nxt
    states = len(keys)
    if full not in preds:
        return SolveResult(None, states, method)

    good = {full}
    stack = [full]
    while stack:
        for prev, _ in preds[stack.pop()]:
            if prev not in good:
                good.add(prev)
                stack.append(prev)

    perm = []
    state = start
    while state != full:
        best = None
        for u, unit in enumerate(units):
            if state[u] == len(unit.members):
                continue
            ns = state[:u] + (state[u] + 1,) + state[u + 1:]
            if ns in good and (state, u) in preds[ns]:
                idx = unit.members[state[u]]
                if best is None or idx < best[0]:
                    best = (idx, ns)
        perm.append(best[0])
        state = best[1]
    return SolveResult(Witness(tuple(perm)), states, method)


def long_threshold(total_length: int) -> float:
    return math.log2(total_length) / 2 if total_length > 0 else 0.0


def _split(inst: CraftingInstance) -> SolveResult:
    """Long strings tracked as an explicit subset, short ones by multiplicity."""
    threshold = long_threshold(len(inst.s))
    long_idx = [i for i, t in enumerate(inst.ts, start=1) if len(t) >= threshold]
    short_idx = [i for i, t in enumerate(inst.ts, start=1) if len(t) < threshold]
    units = [_Unit(inst.ts[i - 1], [i]) for i in long_idx]
    units += [_Unit(t, m) for t, m in _groups(inst.ts, short_idx)]
    n_long = len(long_idx)

    def key(state):
        mask = sum(1 << b for b in range(n_long) if state[b])
        return mask, tuple(state[n_long:])

    return _subset_dp(inst, units, key=key, method=Method.SPLIT)
