import pytest
from hypothesis import given
from hypothesis import strategies as st

from craftbench.graph import (
    ColoredGraph, Graph, IntervalModel, PathDecomposition, TreeDecomposition, is_caterpillar,
    is_proper, subdivide, validate_decomposition, validate_interval_model,
)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def trees(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return Graph(n, [(p, v) for v, p in enumerate(parents, start=1)])


def test_components_and_tree():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert sorted(map(sorted, g.components())) == [[0, 1, 2], [3, 4]]
    assert not g.is_tree()
    g.add_edge(2, 3)
    assert g.is_tree()


def test_no_loops_or_parallel_edges():
    g = Graph(2, [(0, 1)])
    with pytest.raises(ValueError):
        g.add_edge(1, 1)
    g.add_edge(1, 0)
    assert g.m == 1


def test_caterpillar_recognition():
    assert is_caterpillar(path(5))
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert not is_caterpillar(spider)


def test_subdivide():
    g, made = subdivide(path(3), [(0, 1)])
    assert g.n == 4 and g.m == 3
    assert g.has_edge(0, made[(0, 1)]) and not g.has_edge(0, 1)


@given(trees())
def test_tree_edge_bags_have_width_one(t):
    bags, parents, bag_of = [], [], {}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in sorted(t.adj[v]):
            if w not in bag_of and w != 0:
                # hang the bag {v, w} below the bag that introduced v
                parents.append(bag_of.get(v, 0) if bags else -1)
                bag_of[w] = len(bags)
                bags.append([v, w])
                stack.append(w)
    if bags:
        assert validate_decomposition(t, TreeDecomposition(bags, parents), max_width=1)


def test_decomposition_mutations_rejected():
    g = path(4)
    d = PathDecomposition([[0, 1], [1, 2], [2, 3]])
    assert validate_decomposition(g, d, 1, 3)
    assert not validate_decomposition(g, PathDecomposition([[0, 1], [2], [2, 3]]))
    assert not validate_decomposition(g, PathDecomposition([[0, 1], [1, 2]]))
    assert not validate_decomposition(g, PathDecomposition([[0, 1], [1, 2], [2, 3], [1]]))
    assert not validate_decomposition(g, d, max_width=0)
    assert not validate_decomposition(g, d, max_bags=2)
    h = g.copy()
    h.add_edge(0, 3)
    assert not validate_decomposition(h, d)


def test_tree_decomposition_shape_checked():
    g = path(3)
    assert validate_decomposition(g, TreeDecomposition([[1], [0, 1], [1, 2]], [-1, 0, 0]))
    assert not validate_decomposition(g, TreeDecomposition([[1], [0, 1], [1, 2]], [-1, 2, 1]))


def test_interval_model_rules():
    cg = ColoredGraph(path(3), [0, 1, 0])
    good = IntervalModel([(0, 2), (1, 4), (3, 5)])
    assert validate_interval_model(cg, good)
    assert not validate_interval_model(cg, IntervalModel([(0, 4), (1, 5), (3, 6)]))  # colour clash
    assert not validate_interval_model(cg, IntervalModel([(0, 2), (1, 4)]))  # missing interval
    assert not validate_interval_model(cg, IntervalModel([(0, 2), (3, 4), (5, 6)]))  # edge lost
    assert not validate_interval_model(cg, IntervalModel([(0, 2), (2, 4), (3, 5)]))  # shared endpoint


def test_recolouring_into_an_overlap_rejected():
    model = IntervalModel([(0, 3), (1, 4), (2, 5)])
    assert validate_interval_model(ColoredGraph(path(3), [0, 1, 2]), model)
    assert not validate_interval_model(ColoredGraph(path(3), [0, 1, 0]), model)


def test_from_real_ranks_endpoints():
    m = IntervalModel.from_real([(0.5, 2.5), (1.0, 3.0)])
    assert m.intervals == ((0, 2), (1, 3))
    with pytest.raises(ValueError):
        IntervalModel.from_real([(0, 1), (1, 2)])


def test_proper_colouring():
    assert is_proper(path(3), [0, 1, 0])
    assert not is_proper(path(3), [0, 0, 1])
