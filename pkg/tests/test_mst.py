import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_max_spanning_tree, simple_paths
from reqmine import (
    CorrelationGraph,
    DisjointSet,
    SpanningForest,
    WeightedEdge,
    maximum_spanning_forest,
    minimum_spanning_forest,
    total_weight,
)
from reqmine.mst import negated


def graph(n, edges):
    return CorrelationGraph(tuple(range(n)), tuple(WeightedEdge(u, v, w) for u, v, w in edges))


@st.composite
def graphs(draw, max_nodes=7, connected=False):
    n = draw(st.integers(1, max_nodes))
    weight = st.one_of(st.floats(-1, 1), st.sampled_from([-0.5, 0.0, 0.25, 0.5]))
    pairs = list(combinations(range(n), 2))
    chosen = set()
    if connected:
        for v in range(1, n):
            chosen.add((draw(st.integers(0, v - 1)), v))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    chosen.update(extra)
    edges = [(u, v, draw(weight)) for u, v in sorted(chosen)]
    return graph(n, edges)


def test_dsu():
    d = DisjointSet(5)
    assert d.union(0, 1) and d.union(3, 4)
    assert not d.union(1, 0)
    assert d.find(0) == d.find(1) and d.find(0) == d.find(d.find(0))
    assert d.components == 3
    assert d.groups() == [[0, 1], [2], [3, 4]]
    d.union(1, 4)
    assert d.connected(0, 3)


def test_single_node():
    f = maximum_spanning_forest(graph(1, []))
    assert f.edges == () and f.total_weight == 0.0 and f.component_count == 1


def test_four_node_example():
    f = maximum_spanning_forest(graph(4, [(0, 1, 0.9), (0, 2, 0.8), (1, 2, 0.5), (2, 3, 0.3)]))
    assert {(e.u, e.v) for e in f.edges} == {(0, 1), (0, 2), (2, 3)}
    assert f.total_weight == pytest.approx(2.0, abs=1e-12)


def test_total_weight():
    assert total_weight(SpanningForest((), (), 0.0, 0)) == 0.0
    edges = (WeightedEdge(0, 1, 0.9), WeightedEdge(0, 2, 0.8), WeightedEdge(2, 3, 0.3))
    assert total_weight(edges) == pytest.approx(2.0, abs=1e-12)
    assert total_weight([WeightedEdge(0, 1, -0.2)]) == -0.2


def test_disconnected_gives_forest():
    f = maximum_spanning_forest(graph(5, [(0, 1, 0.1), (2, 3, 0.4), (3, 4, -0.3), (2, 4, 0.2)]))
    assert f.component_count == 2
    assert [(e.u, e.v) for e in f.edges] == [(2, 3), (2, 4), (0, 1)]


def test_tie_break_by_endpoints():
    f = maximum_spanning_forest(graph(3, [(1, 2, 0.5), (0, 2, 0.5), (0, 1, 0.5)]))
    assert [(e.u, e.v) for e in f.edges] == [(0, 1), (0, 2)]


def test_rejects_nan():
    with pytest.raises(ValueError):
        maximum_spanning_forest(graph(2, [(0, 1, float("nan"))]))


@given(graphs(connected=True))
@settings(max_examples=150, deadline=None)
def test_optimal_against_enumeration(g):
    f = maximum_spanning_forest(g)
    n = len(g.nodes)
    best = brute_force_max_spanning_tree(n, [(e.u, e.v, e.weight) for e in g.edges])
    assert f.component_count == 1
    assert abs(f.total_weight - best) <= 1e-9


@given(graphs())
@settings(deadline=None)
def test_forest_structure(g):
    f = maximum_spanning_forest(g)
    n = len(g.nodes)
    assert len(f.edges) == n - f.component_count
    assert abs(f.total_weight - sum(e.weight for e in f.edges)) <= 1e-9
    assert set(f.edges) <= set(g.edges)
    # forest components are the graph components
    d = DisjointSet(n)
    for e in g.edges:
        d.union(e.u, e.v)
    assert d.components == f.component_count
    tree = [(e.u, e.v) for e in f.edges]
    for a, b in combinations(range(n), 2):
        expected = 1 if d.connected(a, b) else 0
        assert simple_paths(n, tree, a, b) == expected


@given(graphs())
@settings(deadline=None)
def test_negation_duality_and_determinism(g):
    f = maximum_spanning_forest(g)
    dual = minimum_spanning_forest(negated(g))
    assert [(e.u, e.v) for e in f.edges] == [(e.u, e.v) for e in dual.edges]
    assert maximum_spanning_forest(g) == f
    shuffled = CorrelationGraph(g.nodes, tuple(random.Random(1).sample(g.edges, len(g.edges))))
    assert maximum_spanning_forest(shuffled).edges == f.edges
