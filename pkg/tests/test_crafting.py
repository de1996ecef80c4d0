import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from craftbench.bitstring import BitString, Mode, complement
from craftbench.crafting import (
    CraftingInstance, InstanceError, Method, Witness, crafted, locate, solve, solve_detailed,
    verify_witness,
)
from craftbench.random_instances import random_crafting

from strategies import instances

FIG1 = CraftingInstance.of("101110101", ["1010", "101", "00"])
FIG2 = CraftingInstance.of("10110", ["01001"], Mode.ORTHOGONALITY)


@pytest.mark.parametrize("method", list(Method))
def test_fig1_witness(method):
    assert solve(FIG1, method) == Witness((1, 2, 3))


@pytest.mark.parametrize("method", list(Method))
def test_fig2_witness(method):
    assert solve(FIG2, method) == Witness((1,))


def test_lexicographically_smallest_witness():
    inst = CraftingInstance.of("010", ["1", "0", "0"])
    assert str(solve(inst)) == "2 1 3"


def test_length_sum_enforced():
    with pytest.raises(InstanceError):
        CraftingInstance.of("10", ["1"])


def test_witness_must_be_permutation():
    with pytest.raises(InstanceError):
        Witness((1, 1))


@given(instances())
def test_methods_agree(inst):
    answers = {m: solve(inst, m) for m in Method}
    assert len(set(answers.values())) == 1
    w = answers[Method.BRUTE_FORCE]
    if w is not None:
        assert verify_witness(inst, w)


@given(instances(), st.randoms(use_true_random=False))
def test_relabelling_keeps_answer(inst, rnd):
    order = list(range(inst.n))
    rnd.shuffle(order)
    shuffled = CraftingInstance(inst.s, tuple(inst.ts[i] for i in order), inst.mode)
    assert (solve(inst) is None) == (solve(shuffled) is None)


@given(instances(mode=Mode.ORTHOGONALITY))
def test_complement_bridge(inst):
    dom = CraftingInstance(complement(inst.s), inst.ts, Mode.DOMINATION)
    assert (solve(inst) is None) == (solve(dom) is None)


@given(instances(mode=Mode.DOMINATION), st.data())
def test_domination_monotone(inst, data):
    zeros = [i for i in range(len(inst.s)) if inst.s.at(i + 1) == 0]
    if solve(inst) is None or not zeros:
        return
    i = data.draw(st.sampled_from(zeros))
    bits = list(inst.s)
    bits[i] = 1
    assert solve(CraftingInstance(BitString.from_bits(bits), inst.ts, inst.mode)) is not None


@given(instances(), st.data())
def test_locate_inverts_concatenation(inst, data):
    perm = data.draw(st.permutations(range(1, inst.n + 1)))
    w = Witness(tuple(perm))
    word = crafted(inst, w)
    for i in range(1, len(inst.s) + 1):
        j, pos = locate(inst, w, i)
        assert inst.ts[w.perm[j - 1] - 1].at(pos) == word.at(i)


def test_locate_picks_least_block():
    inst = CraftingInstance.of("0000", ["00", "00"])
    assert locate(inst, Witness((1, 2)), 2) == (1, 2)
    assert locate(inst, Witness((1, 2)), 3) == (2, 1)


def test_split_state_count_quadratic():
    inst = CraftingInstance(BitString.ones(64), tuple(BitString.ones(1) for _ in range(64)))
    assert solve_detailed(inst, Method.SPLIT).states == 65
    mixed = CraftingInstance(BitString.from_str("10" * 32),
                             tuple(BitString.from_str(c) for c in "1" * 32 + "0" * 32))
    assert solve_detailed(mixed, Method.SPLIT).states == 593
    assert solve_detailed(mixed, Method.HELD_KARP).states == 593


def test_seeded_generator_mix():
    rng = random.Random(1)
    modes = {random_crafting(rng).mode for _ in range(40)}
    assert modes == set(Mode)


def test_brute_force_enumerates_distinct_orderings():
    from craftbench.crafting import distinct_orderings
    inst = CraftingInstance.of("1100", ["1", "1", "0", "0"])
    seqs = list(distinct_orderings(inst))
    assert len(seqs) == 6
    assert seqs == sorted(seqs)
    assert len({tuple(str(inst.ts[i - 1]) for i in p) for p in seqs}) == 6
