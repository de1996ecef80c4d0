"""Acceptance criteria 1-9, one test each.

Every test records a single PASS/FAIL line (printed in the terminal summary)
and then asserts the same condition.  Instance streams come from
``rng_from_env`` so CRAFTBENCH_SEED reproduces or varies a run.
"""

import subprocess
import sys
import time
from pathlib import Path

import pytest

from craftbench.bitstring import Mode, complement
from craftbench.crafting import CraftingInstance, Method, solve, solve_detailed, verify_witness
from craftbench.graph import ColoredGraph, Graph, IntervalModel, PathDecomposition, is_proper
from craftbench.graph import validate_decomposition, validate_interval_model
from craftbench.oracles import Relation, Shape, embed_bf, intervalize_exact, mspd_exact, sat_bf, x3c_bf
from craftbench.oracles import verify_embedding
from craftbench.random_instances import (
    random_cnf, random_crafting, random_ovc_yes, random_sc_palindromic, random_x3c, rng_from_env,
)
from craftbench.reductions import (
    Variant, build_icg5_witness, build_icg_witness_x3c, build_mspd_witness, complement_to_ovc,
    decode_assignment, decode_perm_from_embedding, ovc_to_icg5, ovc_to_mspd, sat_to_sc,
    sc_to_subgraph, x3c_to_icg,
)
from craftbench.reductions.icg5 import BARRIER_SIZE
from craftbench.reductions.mspd import BASE_WIDTH
from craftbench.reductions.x3c import D

from conftest import record

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="module")
def crafting_corpus():
    rng = rng_from_env()
    return [random_crafting(rng, max_len=18, max_strings=7) for _ in range(500)]


def test_criterion_1_solver_equivalence(crafting_corpus):
    t0 = time.perf_counter()
    bad = []
    for inst in crafting_corpus:
        results = [solve(inst, m) for m in Method]
        if len(set(results)) != 1 or (results[0] is not None and not verify_witness(inst, results[0])):
            bad.append(inst)
    dt = time.perf_counter() - t0
    modes = {inst.mode for inst in crafting_corpus}
    ok = not bad and dt < 60 and modes == set(Mode)
    yes = sum(solve(i) is not None for i in crafting_corpus)
    record(1, ok, f"{len(crafting_corpus)} instances ({yes} yes), {len(bad)} disagreements, "
                  f"{dt:.1f} s (limit 60 s)")
    assert ok


def test_criterion_2_sat_to_sc():
    rng = rng_from_env()
    t0 = time.perf_counter()
    failures, sat = [], 0
    for _ in range(200):
        cnf = random_cnf(rng, max_vars=4, max_clauses=3)
        inst, smap = sat_to_sc(cnf)
        n, m = cnf.num_vars, cnf.num_clauses
        r = 4 * (n + m - 1).bit_length() + 2  # 4 * ceil(log2(n + m)) + 2
        sizes = (smap.r == r and len(inst.s) == (3 * n + 6 * m) * r
                 and inst.n == n + m + (n + 2 * m))
        a = sat_bf(cnf)
        w = solve(inst)
        agree = (a is None) == (w is None)
        decoded = w is None or cnf.satisfied_by(decode_assignment(smap, inst, w))
        sat += a is not None
        if not (sizes and agree and decoded):
            failures.append(cnf)
    dt = time.perf_counter() - t0
    ok = not failures and dt < 120
    record(2, ok, f"200 formulas ({sat} satisfiable), {len(failures)} failures, "
                  f"{dt:.1f} s (limit 120 s)")
    assert ok


def test_criterion_3_complement_bridge(crafting_corpus):
    t0 = time.perf_counter()
    bad = 0
    for inst in crafting_corpus:
        dom = inst if inst.mode is Mode.DOMINATION else CraftingInstance(
            complement(inst.s), inst.ts, Mode.DOMINATION)
        ovc = complement_to_ovc(dom)
        if inst.mode is Mode.ORTHOGONALITY and ovc != inst:
            bad += 1
        if (solve(dom) is None) != (solve(ovc) is None):
            bad += 1
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 10
    record(3, ok, f"{len(crafting_corpus)} instances, {bad} mismatches, {dt:.1f} s (limit 10 s)")
    assert ok


CONTAINMENT = [
    (Variant.CATERPILLAR, Relation.SUBGRAPH, None),
    (Variant.INDUCED, Relation.INDUCED, None),
    (Variant.CATERPILLAR, Relation.MINOR, None),
    (Variant.INDUCED, Relation.INDUCED_MINOR, None),
    (Variant.CATERPILLAR, Relation.TOP_MINOR, None),
    (Variant.CATERPILLAR, Relation.SHALLOW_MINOR, 1),
]


@pytest.mark.slow
def test_criterion_4_subgraph_equivalence():
    rng = rng_from_env()
    t0 = time.perf_counter()
    mismatches, undecodable, yes = [], [], 0
    for _ in range(100):
        inst = random_sc_palindromic(rng, max_len=12)
        answer = solve(inst) is not None
        yes += answer
        for variant, relation, radius in CONTAINMENT:
            host, pattern, smap = sc_to_subgraph(inst, variant)
            found = embed_bf(pattern, host, relation, radius=radius, budget=None)
            if (found is not None) != answer:
                mismatches.append((str(inst.s), relation.value))
            elif found is not None and not (
                    verify_embedding(pattern, host, found)
                    and verify_witness(inst, decode_perm_from_embedding(smap, found))):
                undecodable.append((str(inst.s), relation.value))
    dt = time.perf_counter() - t0
    ok = not mismatches and not undecodable and dt < 600
    record(4, ok, f"100 instances ({yes} yes) x {len(CONTAINMENT)} relations, "
                  f"{len(mismatches)} mismatches, {len(undecodable)} bad decodes, "
                  f"{dt:.1f} s (limit 600 s)")
    assert ok


def _decomposition_mutants(g, d):
    bags = [sorted(b) for b in d.bags]
    for i, bag in enumerate(bags):
        for v in bag:
            yield g, PathDecomposition(bags[:i] + [[x for x in bag if x != v]] + bags[i + 1:])
        yield g, PathDecomposition(bags[:i] + bags[i + 1:])
    # an extra edge between two vertices that share no bag
    apart = [(u, w) for u in bags[0] for w in bags[-1]
             if not any(u in b and w in b for b in bags)]
    if apart:
        h = g.copy()
        h.add_edge(*apart[0])
        yield h, d


def test_criterion_5_mspd_constructive():
    rng = rng_from_env()
    t0 = time.perf_counter()
    bad, mutants, survivors = 0, 0, 0
    for _ in range(100):
        inst = random_ovc_yes(rng, max_len=10)
        g, budget, smap = ovc_to_mspd(inst)
        d = build_mspd_witness(smap, inst, solve(inst))
        good = (len(d.bags) == len(inst.s) == budget and d.width <= BASE_WIDTH
                and all(len(b) in (16, 17) for b in d.bags)
                and validate_decomposition(g, d, BASE_WIDTH, budget))
        bad += not good
        for h, m in _decomposition_mutants(g, d):
            mutants += 1
            survivors += validate_decomposition(h, m, BASE_WIDTH, budget)
    micro = []
    for s in ("0", "1"):
        inst = CraftingInstance.of(s, ["1"], Mode.ORTHOGONALITY)
        g, budget, _ = ovc_to_mspd(inst)
        micro.append((mspd_exact(g, BASE_WIDTH, budget, Shape.PATH) is not None)
                     == (solve(inst) is not None))
    dt = time.perf_counter() - t0
    ok = bad == 0 and survivors == 0 and all(micro) and dt < 60
    record(5, ok, f"100 yes-instances, {bad} invalid builds, {survivors}/{mutants} mutants "
                  f"accepted, micro converse {'agrees' if all(micro) else 'DISAGREES'}, "
                  f"{dt:.1f} s (limit 60 s)")
    assert ok


def _interval_mutants(model):
    ivs = list(model.intervals)
    far = max(r for _, r in ivs) + 10
    for v in range(len(ivs)):
        yield IntervalModel(ivs[:v] + ivs[v + 1:])
        yield IntervalModel(ivs[:v] + [(far, far + 1)] + ivs[v + 1:])


def _path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


# (coloured graph, intervalizable?) with at most 12 vertices
HAND = [
    (ColoredGraph(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), [0, 1, 0, 1]), False),
    (ColoredGraph(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), [0, 1, 0, 2]), True),
    (ColoredGraph(Graph(4, [(0, 1), (0, 2), (0, 3)]), [0, 1, 2, 3]), True),
    (ColoredGraph(Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
                  [0, 1, 0, 1, 0, 1, 0]), False),
    (ColoredGraph(Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
                  [0, 1, 2, 3, 4, 1, 2]), True),
    (ColoredGraph(_path(12), [i % 2 for i in range(12)]), True),
    (ColoredGraph(Graph(3, [(0, 1), (1, 2), (0, 2)]), [0, 1, 2]), True),
]


def test_criterion_6_icg5_constructive():
    rng = rng_from_env()
    t0 = time.perf_counter()
    bad, mutants, survivors = 0, 0, 0
    for _ in range(50):
        inst = random_ovc_yes(rng, max_len=6)
        cg, imap = ovc_to_icg5(inst)
        shape_ok = (cg.graph.is_tree() and is_proper(cg.graph, cg.colors)
                    and cg.palette() <= {1, 2, 3, 4, 5}
                    and len(imap.barrier("left")) == len(imap.barrier("right")) == BARRIER_SIZE == 18)
        model = build_icg5_witness(imap, inst, solve(inst))
        bad += not (shape_ok and validate_interval_model(cg, model))
        for m in _interval_mutants(model):
            mutants += 1
            survivors += validate_interval_model(cg, m)
    hand_ok = 0
    for cg, expected in HAND:
        m = intervalize_exact(cg)
        hand_ok += (m is not None) == expected and (m is None or validate_interval_model(cg, m))
    dt = time.perf_counter() - t0
    ok = bad == 0 and survivors == 0 and hand_ok == len(HAND) and dt < 120
    record(6, ok, f"50 yes-instances, {bad} invalid builds, {survivors}/{mutants} mutants accepted, "
                  f"{hand_ok}/{len(HAND)} hand instances, {dt:.1f} s (limit 120 s)")
    assert ok


def test_criterion_7_x3c():
    rng = rng_from_env()
    t0 = time.perf_counter()
    bad, yes = 0, 0
    for _ in range(100):
        x3c = random_x3c(rng, max_n=6, max_m=5)
        cg, xmap = x3c_to_icg(x3c)
        census = (sum(1 for c in cg.colors if c == D) == x3c.n + 2
                  and sum(1 for r in xmap.roles if r[0] == "p") == 2 * (x3c.m - x3c.n // 3) + 1
                  and cg.graph.is_tree())
        cover = x3c_bf(x3c)
        valid = True
        if cover is not None:
            yes += 1
            valid = validate_interval_model(cg, build_icg_witness_x3c(xmap, x3c, cover))
        bad += not (census and valid)
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 60
    record(7, ok, f"100 instances ({yes} yes), {bad} failures, {dt:.1f} s (limit 60 s)")
    assert ok


def test_criterion_8_split_scaling():
    from craftbench.bitstring import BitString
    size = 64
    ones = CraftingInstance(BitString.ones(size), tuple(BitString.ones(1) for _ in range(size)))
    mixed = CraftingInstance(BitString.from_str("10" * (size // 2)),
                             tuple(BitString.from_str(c) for c in "1" * 32 + "0" * 32))
    t0 = time.perf_counter()
    r1 = solve_detailed(ones, Method.SPLIT)
    r2 = solve_detailed(mixed, Method.SPLIT)
    dt = time.perf_counter() - t0
    bound = (size + 1) ** 2
    ok = r1.yes and r2.yes and dt < 1 and r1.states <= bound and r2.states <= bound
    record(8, ok, f"|s|=64: {r1.states} states (all ones), {r2.states} states (32+32 mixed), "
                  f"bound (|s|+1)^2={bound}, {dt:.2f} s (limit 1 s)")
    assert ok


EXAMPLES = [
    ("single_clause.cnf", "SC", 0),
    ("fig2.ovc", "MSPD", 0),
    ("all_patterns.cnf", "SUBGRAPH", 0),
]


def test_criterion_9_cli_roundtrips():
    rows = []
    for name, target, expected in EXAMPLES:
        proc = subprocess.run([sys.executable, "-m", "craftbench", "roundtrip",
                               str(ROOT / "data" / name), "--target", target],
                              capture_output=True, text=True, timeout=300)
        verdict = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else "none"
        rows.append((name, proc.returncode, expected, verdict))
    ok = all(code == exp and verdict == "verdict=SUCCESS" for _, code, exp, verdict in rows)
    record(9, ok, "; ".join(f"{n} -> exit {c} ({v})" for n, c, _, v in rows))
    assert ok
