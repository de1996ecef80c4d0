import random

import pytest

from craftbench.bitstring import Mode
from craftbench.crafting import CraftingInstance, solve
from craftbench.graph import IntervalModel, validate_interval_model
from craftbench.random_instances import random_ovc_yes
from craftbench.reductions import PreconditionError, build_icg5_witness, ovc_to_icg5
from craftbench.reductions.icg5 import BARRIER_SIZE, expected_size


def model_mutations(model):
    """Each vertex once dropped, once moved to a private stretch of the line."""
    ivs = list(model.intervals)
    far = max(r for _, r in ivs) + 10
    for v in range(len(ivs)):
        yield IntervalModel(ivs[:v] + ivs[v + 1:])
        yield IntervalModel(ivs[:v] + [(far, far + 1)] + ivs[v + 1:])


def test_barrier_census():
    cg, imap = ovc_to_icg5(CraftingInstance.of("0", ["0"], Mode.ORTHOGONALITY))
    assert BARRIER_SIZE == 18
    assert len(imap.barrier("left")) == len(imap.barrier("right")) == 18
    assert cg.palette() == {1, 2, 3, 4, 5}


def test_connector_is_only_colour_five():
    inst = CraftingInstance.of("0100", ["1", "000"], Mode.ORTHOGONALITY)
    cg, imap = ovc_to_icg5(inst)
    fives = [v for v in range(cg.n) if cg.colors[v] == 5 and imap.roles[v][0] != "barrier"]
    assert [imap.roles[v] for v in fives] == [("connector",)]


def test_precondition():
    with pytest.raises(PreconditionError):
        ovc_to_icg5(CraftingInstance.of("00", ["10"], Mode.ORTHOGONALITY))
    with pytest.raises(PreconditionError):
        ovc_to_icg5(CraftingInstance.of("11", ["11"]))


@pytest.mark.parametrize("seed", range(10))
def test_builder_validates(seed):
    inst = random_ovc_yes(random.Random(seed), max_len=6)
    cg, imap = ovc_to_icg5(inst)
    assert cg.graph.is_tree()
    assert cg.n == expected_size(inst)
    model = build_icg5_witness(imap, inst, solve(inst))
    assert validate_interval_model(cg, model)
    for bad in model_mutations(model):
        assert not validate_interval_model(cg, bad)
