"""3-SAT to String Crafting, and back from a crafting witness to an assignment."""

from __future__ import annotations

import math
from dataclasses import dataclass

from craftbench.bitstring import BitString, Mode, complement, concat, id_encode
from craftbench.crafting import CraftingInstance, Witness, verify_witness
from craftbench.problems import CnfFormula


class DecodeError(RuntimeError):
    pass


@dataclass(frozen=True)
class TKind:
    kind: str  # "select", "verify" or "filler"
    ref: int | None = None  # variable index for "select", clause id for "verify"


@dataclass(frozen=True)
class SatScMap:
    q: int
    r: int
    c: tuple[int, ...]
    d: tuple[int, ...]
    f: tuple[int, ...]
    block_start: tuple[int, ...]  # 1-based offset of b^i in s
    pos_start: tuple[int, ...]  # offset of a^{x_i}
    neg_start: tuple[int, ...]  # offset of a^{not x_i}
    kinds: tuple[TKind, ...]

    def select_string(self, var: int) -> int:
        """1-based index of the variable-selection string of x_var."""
        for k, kind in enumerate(self.kinds, start=1):
            if kind.kind == "select" and kind.ref == var:
                return k
        raise KeyError(var)


def id_width(num_vars: int, num_clauses: int) -> int:
    """q = ceil(log2(n + m)), at least 1 so every id has more than two ones."""
    total = num_vars + num_clauses
    return max(1, math.ceil(math.log2(total))) if total > 1 else 1


def filler(r: int) -> BitString:
    return BitString(1, 1) + BitString.zeros(r - 2) + BitString(1, 1)


def sat_to_sc(cnf: CnfFormula) -> tuple[CraftingInstance, SatScMap]:
    n, m = cnf.num_vars, cnf.num_clauses
    q = id_width(n, m)
    r = 4 * q + 2
    ids = [None] + [id_encode(i, q) for i in range(1, n + m + 1)]
    fill = filler(r)

    pos_clauses: list[list[int]] = [[] for _ in range(n + 1)]
    neg_clauses: list[list[int]] = [[] for _ in range(n + 1)]
    for j, clause in enumerate(cnf.clauses, start=n + 1):
        for lit in clause:
            (pos_clauses if lit > 0 else neg_clauses)[abs(lit)].append(j)

    c = tuple(len(pos_clauses[i]) for i in range(1, n + 1))
    d = tuple(len(neg_clauses[i]) for i in range(1, n + 1))
    f = tuple(ci + di for ci, di in zip(c, d))

    blocks, block_start, pos_start, neg_start = [], [], [], []
    offset = 1
    for i in range(1, n + 1):
        a_pos = concat([ids[j] for j in pos_clauses[i]] + [fill] * d[i - 1])
        a_neg = concat([ids[j] for j in neg_clauses[i]] + [fill] * c[i - 1])
        block_start.append(offset)
        pos_start.append(offset + r)
        neg_start.append(offset + 2 * r + len(a_pos))
        b = concat([ids[i], a_pos, ids[i], a_neg, ids[i]])
        blocks.append(b)
        offset += len(b)
    s = concat(blocks)

    ts, kinds = [], []
    for i in range(1, n + 1):
        ts.append(concat([ids[i], BitString.zeros(r * f[i - 1]), ids[i]]))
        kinds.append(TKind("select", i))
    for j in range(n + 1, n + m + 1):
        ts.append(ids[j])
        kinds.append(TKind("verify", j))
    for _ in range(n + 2 * m):
        ts.append(fill)
        kinds.append(TKind("filler"))

    inst = CraftingInstance(s, tuple(ts), Mode.DOMINATION)
    smap = SatScMap(q, r, c, d, f, tuple(block_start), tuple(pos_start),
                    tuple(neg_start), tuple(kinds))
    return inst, smap


def placement(inst: CraftingInstance, w: Witness) -> dict[int, int]:
    """1-based start offset in s of every string under ``w``."""
    starts, offset = {}, 1
    for k in w.perm:
        starts[k] = offset
        offset += len(inst.ts[k - 1])
    return starts


def decode_assignment(smap: SatScMap, inst: CraftingInstance, w: Witness) -> list[bool]:
    """Read x_i off the slot occupied by its variable-selection string.

    Covering ``id . a^{x_i} . id`` means x_i is false; covering the
    ``a^{not x_i}`` side means x_i is true.
    """
    if not verify_witness(inst, w):
        raise DecodeError("witness does not solve the instance")
    starts = placement(inst, w)
    assignment = []
    for i in range(1, len(smap.f) + 1):
        at = starts[smap.select_string(i)]
        if at == smap.block_start[i - 1]:
            assignment.append(False)
        elif at == smap.block_start[i - 1] + (smap.f[i - 1] + 1) * smap.r:
            assignment.append(True)
        else:
            raise DecodeError(f"selection string of x_{i} sits at illegal offset {at}")
    return assignment


def encode_assignment(cnf: CnfFormula, smap: SatScMap, inst: CraftingInstance,
                      assignment: list[bool]) -> Witness:
    """Crafting witness for a satisfying assignment (the constructive direction)."""
    if not cnf.satisfied_by(assignment):
        raise ValueError("assignment does not satisfy the formula")
    n, r = cnf.num_vars, smap.r
    select = {kind.ref: k for k, kind in enumerate(smap.kinds, 1) if kind.kind == "select"}
    verify = {kind.ref: k for k, kind in enumerate(smap.kinds, 1) if kind.kind == "verify"}
    fillers = [k for k, kind in enumerate(smap.kinds, 1) if kind.kind == "filler"]

    # which literal slot each clause uses: first true literal
    slot_of_clause = {}
    for j, clause in enumerate(cnf.clauses, start=n + 1):
        lit = next(l for l in clause if assignment[abs(l) - 1] == (l > 0))
        slot_of_clause[j] = lit

    at: dict[int, int] = {}
    fill_iter = iter(fillers)
    for i in range(1, n + 1):
        start, f_i = smap.block_start[i - 1], smap.f[i - 1]
        if assignment[i - 1]:
            at[select[i]] = start + (f_i + 1) * r
            at[next(fill_iter)] = start
            free_start, lit_sign = smap.pos_start[i - 1], 1
        else:
            at[select[i]] = start
            at[next(fill_iter)] = start + (2 * f_i + 2) * r
            free_start, lit_sign = smap.neg_start[i - 1], -1
        # the uncovered a-block: clause ids in ascending order, then padding
        clause_ids = sorted(j for j, clause in enumerate(cnf.clauses, start=n + 1)
                            for lit in clause if lit == lit_sign * i)
        for b, j in enumerate(clause_ids):
            where = free_start + b * r
            if slot_of_clause.get(j) == lit_sign * i and verify[j] not in at:
                at[verify[j]] = where
            else:
                at[next(fill_iter)] = where
        for b in range(len(clause_ids), f_i):
            at[next(fill_iter)] = free_start + b * r
    perm = tuple(sorted(at, key=at.get))
    return Witness(perm)


def complement_to_ovc(inst: CraftingInstance) -> CraftingInstance:
    if inst.mode is not Mode.DOMINATION:
        raise ValueError("complement_to_ovc expects a String Crafting (domination) instance")
    return CraftingInstance(complement(inst.s), inst.ts, Mode.ORTHOGONALITY)
