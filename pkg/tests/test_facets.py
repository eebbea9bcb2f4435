import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepkit.errors import BudgetExceededError, InputError
from sepkit.facets import (
    enumerate_facet_functions,
    facet_count,
    facet_count_complete,
    facet_subgraph,
    group_by_facet_subgraph,
    is_facet_defining,
    is_facet_subgraph,
)
from sepkit.graphs import (
    Bipartition,
    Graph,
    complete,
    cycle,
    from_edges,
    is_connected,
    path,
)
from sepkit.samplers import RandomSource, sample_gnp_connected


def test_is_facet_defining_basics():
    k3 = complete(3)
    assert is_facet_defining(k3, (0, 1, 0))
    p2 = path(2)
    assert not is_facet_defining(p2, (0, 0, 0))  # no tight edges
    assert not is_facet_defining(p2, (0, 2, 1))  # edge difference 2
    assert not is_facet_defining(p2, (0, 1, 1))  # vertex 2 untouched
    with pytest.raises(InputError):
        is_facet_defining(k3, (0, 1))


def test_k2_functions():
    assert enumerate_facet_functions(complete(2)) == [(0, -1), (0, 1)]


def test_k4_functions_are_two_valued_indicators():
    fs = enumerate_facet_functions(complete(4))
    assert len(fs) == 14
    expected = set()
    for mask in range(1, 15):  # proper nonempty subsets of 4 vertices
        chi = tuple((mask >> v) & 1 for v in range(4))
        expected.add(tuple(x - chi[0] for x in chi))
    assert set(fs) == expected


def test_c3_count_and_known_complete_counts():
    assert facet_count(cycle(3)) == 6
    assert facet_count(complete(11)) == 2046
    assert facet_count(complete(12)) == 4094
    assert facet_count_complete(11) == 2046
    assert facet_count_complete(12) == 4094
    assert facet_count_complete(2) == 2
    with pytest.raises(InputError):
        facet_count_complete(1)


def test_tree_counts_are_cross_polytopes():
    assert facet_count(path(3)) == 8
    star = from_edges(5, [(0, i) for i in range(1, 5)])
    assert facet_count(star) == 16


def test_disconnected_rejected():
    with pytest.raises(InputError):
        facet_count(from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(InputError):
        enumerate_facet_functions(from_edges(2, []))


def test_count_matches_list_mode():
    for g in (cycle(5), cycle(6), complete(5), path(4)):
        assert facet_count(g) == len(enumerate_facet_functions(g))


def test_deterministic_and_sorted():
    g = sample_gnp_connected(9, 0.4, RandomSource(3))
    a = enumerate_facet_functions(g)
    b = enumerate_facet_functions(g)
    assert a == b == sorted(a)


def test_negation_symmetry():
    for g in (cycle(5), complete(5), path(4)):
        fs = set(enumerate_facet_functions(g))
        assert len(fs) % 2 == 0
        for f in fs:
            assert tuple(-x for x in f) in fs


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_random_graph_negation_symmetry(seed):
    g = sample_gnp_connected(7, 0.5, RandomSource(seed))
    fs = set(enumerate_facet_functions(g))
    assert all(tuple(-x for x in f) in fs for f in fs)


def test_facet_subgraph_k3():
    sub = facet_subgraph(complete(3), (0, 1, 0))
    assert sub.edges == frozenset({(0, 1), (1, 2)})
    assert sub.shore_a == frozenset({0, 2})
    assert sub.shore_b == frozenset({1})


def test_facet_subgraph_k2_and_c4():
    sub = facet_subgraph(complete(2), (0, 1))
    assert sub.edges == frozenset({(0, 1)})
    sub = facet_subgraph(cycle(4), (0, 1, 0, 1))
    assert sub.edges == frozenset(cycle(4).edges)
    assert sub.shore_a == frozenset({0, 2})


def test_facet_subgraph_rejects_non_facet():
    with pytest.raises(InputError):
        facet_subgraph(path(2), (0, 0, 0))


def test_every_facet_subgraph_passes_the_shore_test():
    for g in (complete(4), cycle(5), cycle(6)):
        for sub in group_by_facet_subgraph(g):
            a = Bipartition.from_vertices(g.n, sub.shore_a)
            assert is_facet_subgraph(g, a)


def test_is_facet_subgraph_examples():
    for n in (3, 4, 5):
        g = complete(n)
        for mask in range(1, (1 << n) - 1):
            assert is_facet_subgraph(g, Bipartition(n, mask))
    c4 = cycle(4)
    assert is_facet_subgraph(c4, Bipartition.from_vertices(4, [0, 2]))
    assert not is_facet_subgraph(c4, Bipartition.from_vertices(4, [0, 1]))
    with pytest.raises(InputError):
        is_facet_subgraph(c4, Bipartition(4, 0))


def test_indicator_labelings_appear_for_connected_crossings():
    g = sample_gnp_connected(7, 0.6, RandomSource(11))
    fs = set(enumerate_facet_functions(g))
    for mask in range(1, (1 << g.n) - 1):
        a = Bipartition(g.n, mask)
        if not is_facet_subgraph(g, a):
            continue
        chi = tuple((mask >> v) & 1 for v in range(g.n))
        canon = tuple(x - chi[0] for x in chi)
        neg = tuple(-x for x in canon)
        assert canon in fs and neg in fs


def test_group_by_k4():
    groups = group_by_facet_subgraph(complete(4))
    assert len(groups) == 7
    assert all(len(v) == 2 for v in groups.values())
    assert sum(len(v) for v in groups.values()) == 14


def test_group_by_k2_and_c5():
    groups = group_by_facet_subgraph(complete(2))
    assert len(groups) == 1 and len(next(iter(groups.values()))) == 2
    for fs in group_by_facet_subgraph(cycle(5)).values():
        assert len(fs) % 2 == 0


def test_node_budget_exhaustion_is_distinct():
    with pytest.raises(BudgetExceededError):
        facet_count(complete(10), node_budget=50)
    # env var override
    import os

    os.environ["SEP_NODE_BUDGET"] = "10"
    try:
        with pytest.raises(BudgetExceededError):
            facet_count(complete(8))
    finally:
        del os.environ["SEP_NODE_BUDGET"]
