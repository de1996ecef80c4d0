import random

import pytest

from craftbench.graph import IntervalModel, validate_interval_model
from craftbench.oracles import x3c_bf
from craftbench.problems import X3cInstance
from craftbench.random_instances import random_x3c
from craftbench.reductions import PreconditionError, build_icg_witness_x3c, x3c_to_icg
from craftbench.reductions.x3c import D, host_odd_path_vertex

COVER6 = X3cInstance(6, (frozenset({1, 2, 3}), frozenset({2, 3, 4}), frozenset({4, 5, 6})))


def test_bf_finds_first_cover():
    assert x3c_bf(COVER6) == (1, 3)
    assert x3c_bf(X3cInstance(3, (frozenset({1, 2, 3}),))) == (1,)
    assert x3c_bf(X3cInstance(6, (frozenset({1, 2, 3}), frozenset({1, 4, 5})))) is None


def test_census():
    cg, xmap = x3c_to_icg(COVER6)
    assert cg.graph.is_tree()
    assert sum(1 for c in cg.colors if c == D) == COVER6.n + 2
    assert xmap.path_length == 2 * (3 - 2) + 1
    assert len(cg.palette()) == 2 * COVER6.n + 4


def test_needs_more_sets_than_a_cover():
    with pytest.raises(PreconditionError):
        x3c_to_icg(X3cInstance(6, (frozenset({1, 2, 3}), frozenset({4, 5, 6}))))


def test_non_cover_rejected():
    _, xmap = x3c_to_icg(COVER6)
    with pytest.raises(ValueError):
        build_icg_witness_x3c(xmap, COVER6, (1, 2))


def test_leftover_sets_sit_in_odd_path_vertices():
    cg, xmap = x3c_to_icg(COVER6)
    model = build_icg_witness_x3c(xmap, COVER6, (1, 3))
    assert validate_interval_model(cg, model)
    assert host_odd_path_vertex(xmap, model, 2) == 1
    assert host_odd_path_vertex(xmap, model, 1) is None


@pytest.mark.parametrize("seed", range(15))
def test_random_yes_instances_validate(seed):
    x3c = random_x3c(random.Random(seed))
    cover = x3c_bf(x3c)
    cg, xmap = x3c_to_icg(x3c)
    assert cg.graph.is_tree()
    assert sum(1 for c in cg.colors if c == D) == x3c.n + 2
    if cover is None:
        return
    model = build_icg_witness_x3c(xmap, x3c, cover)
    assert validate_interval_model(cg, model)
    ivs = list(model.intervals)
    assert not validate_interval_model(cg, IntervalModel(ivs[:-1]))
