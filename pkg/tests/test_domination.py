import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from ncgraph.domination import (
    SizeBoundExceeded,
    brute_force_gamma,
    domination_number,
    gamma_bounds_check,
    greedy_dominating_set,
    is_dominating_set,
)
from ncgraph.graphs import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)


def random_graph(rng, m, p):
    return SimpleGraph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m) if rng.random() < p])


def test_is_dominating_set():
    g = star_graph(4)
    assert is_dominating_set(g, range(5))
    assert is_dominating_set(g, [0])
    assert not is_dominating_set(g, [])
    assert not is_dominating_set(g, [1])


@pytest.mark.parametrize(
    "graph, gamma",
    [
        (complete_graph(1), 1),
        (complete_graph(6), 1),
        (disjoint_union(complete_graph(3), empty_graph(4)), 5),
        (disjoint_union(*[path_graph(2)] * 3), 3),
        (disjoint_union(complete_graph(4), empty_graph(5)), 6),
        (cycle_graph(4), 2),
        (path_graph(2), 1),
        (empty_graph(6), 6),
        (cycle_graph(9), 3),
    ],
)
def test_known_values(graph, gamma):
    result = domination_number(graph)
    assert result.gamma == gamma
    assert brute_force_gamma(graph) == gamma
    assert is_dominating_set(graph, result.witness)


def test_witness_is_deterministic():
    g = cycle_graph(6)
    assert domination_number(g).witness == domination_number(g).witness


def test_size_bounds():
    with pytest.raises(SizeBoundExceeded):
        domination_number(empty_graph(65))
    with pytest.raises(SizeBoundExceeded):
        brute_force_gamma(empty_graph(21))


def test_two_hundred_random_graphs_match_brute_force():
    rng = random.Random(20240101)
    for _ in range(200):
        m = rng.randint(1, 14)
        g = random_graph(rng, m, rng.choice([0.1, 0.25, 0.4, 0.6]))
        result = domination_number(g)
        assert result.gamma == brute_force_gamma(g)
        assert is_dominating_set(g, result.witness)
        assert math.ceil(m / (g.max_degree() + 1)) <= result.gamma <= len(greedy_dominating_set(g))


def test_solver_handles_larger_graphs():
    rng = random.Random(3)
    g = random_graph(rng, 40, 0.15)
    result = domination_number(g)
    assert is_dominating_set(g, result.witness)
    assert result.lower_bound <= result.gamma <= result.greedy_bound


@st.composite
def small_graphs(draw):
    m = draw(st.integers(1, 10))
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(m, [p for p, k in zip(pairs, keep) if k])


@settings(max_examples=100, deadline=None)
@given(small_graphs())
def test_bounds_hold_on_arbitrary_graphs(g):
    assert gamma_bounds_check(g)
    assert domination_number(g).gamma == brute_force_gamma(g)


def test_bounds_examples():
    assert gamma_bounds_check(complete_graph(5))
    assert gamma_bounds_check(cycle_graph(4))
    assert domination_number(cycle_graph(4).complement()).gamma == 2
