import random

import pytest

from craftbench.bitstring import Mode
from craftbench.crafting import CraftingInstance, solve, verify_witness
from craftbench.graph import PathDecomposition, validate_decomposition
from craftbench.oracles import Shape, mspd_exact
from craftbench.random_instances import random_ovc_yes
from craftbench.reductions import PreconditionError, build_mspd_witness, ovc_to_mspd
from craftbench.reductions.mspd import BASE_WIDTH, decode_perm_from_decomposition

FIG2 = CraftingInstance.of("10110", ["01001"], Mode.ORTHOGONALITY)


def mutations(g, d):
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


def test_fig2_bags():
    g, budget, smap = ovc_to_mspd(FIG2, permissive=True)
    d = build_mspd_witness(smap, FIG2, solve(FIG2))
    assert budget == 5
    assert [len(b) for b in d.bags] == [17, 17, 17, 17, 17]
    assert validate_decomposition(g, d, BASE_WIDTH, budget)


def test_graph_size():
    g, _, _ = ovc_to_mspd(FIG2, permissive=True)
    # 6 (|s|+1) + 2 (|t|+1) + ones(s) + ones(t)
    assert g.n == 6 * 6 + 2 * 6 + 3 + 2


def test_wider_budget_adds_universal_vertices():
    g16, _, _ = ovc_to_mspd(FIG2, permissive=True)
    g18, _, smap = ovc_to_mspd(FIG2, 18, permissive=True)
    assert g18.n == g16.n + 2
    d = build_mspd_witness(smap, FIG2, solve(FIG2))
    assert validate_decomposition(g18, d, 18, 5)


def test_preconditions():
    with pytest.raises(PreconditionError):
        ovc_to_mspd(CraftingInstance.of("11", ["11"]))
    with pytest.raises(PreconditionError):
        ovc_to_mspd(CraftingInstance.of("00", ["10"], Mode.ORTHOGONALITY))
    with pytest.raises(ValueError):
        ovc_to_mspd(FIG2, 15, permissive=True)


@pytest.mark.parametrize("seed", range(8))
def test_builder_and_mutations(seed):
    inst = random_ovc_yes(random.Random(seed))
    w = solve(inst)
    g, budget, smap = ovc_to_mspd(inst)
    d = build_mspd_witness(smap, inst, w)
    assert len(d.bags) == len(inst.s) == budget
    assert all(len(b) in (16, 17) for b in d.bags)
    assert validate_decomposition(g, d, BASE_WIDTH, budget)
    assert verify_witness(inst, decode_perm_from_decomposition(smap, d))
    for h, bad in mutations(g, d):
        assert not validate_decomposition(h, bad, BASE_WIDTH, budget)


@pytest.mark.parametrize("s,answer", [("0", True), ("1", False)])
def test_micro_converse(s, answer):
    inst = CraftingInstance.of(s, ["1"], Mode.ORTHOGONALITY)
    assert (solve(inst) is not None) == answer
    g, budget, _ = ovc_to_mspd(inst)
    found = mspd_exact(g, BASE_WIDTH, budget, Shape.PATH)
    assert (found is not None) == answer
    tree = mspd_exact(g, BASE_WIDTH, budget, Shape.TREE)
    assert (tree is not None) == answer
