import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, graphs
from oracles import edge_sets
from rqv.graph import (
    FAMILY_MIN_N,
    Graph,
    GraphInputError,
    complement,
    degree,
    delete_vertex,
    is_connected,
    make_family,
    relabel,
)


def test_degree_examples():
    assert all(degree(make_family("complete", 4), v) == 3 for v in range(4))
    assert degree(make_family("star", 13), 0) == 12
    assert degree(make_family("path", 3), 1) == 2


def test_degree_out_of_range():
    with pytest.raises(GraphInputError):
        degree(make_family("path", 3), 3)
    with pytest.raises(GraphInputError):
        make_family("path", 3).neighbors(-1)


def test_connectivity_examples():
    assert is_connected(make_family("complete", 4))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, []))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)], [(-1, 0)]])
def test_construction_rejects_non_simple(edges):
    with pytest.raises(GraphInputError):
        Graph(4, edges)


def test_order_limits():
    with pytest.raises(GraphInputError):
        Graph(0, [])
    with pytest.raises(GraphInputError):
        Graph(65, [])
    assert Graph(64, [(0, 63)]).m == 1


def test_from_rows_requires_symmetry():
    with pytest.raises(GraphInputError):
        Graph.from_rows([0b10, 0b00])
    assert Graph.from_rows([0b10, 0b01]) == Graph(2, [(0, 1)])


def test_delete_examples():
    s4 = delete_vertex(make_family("star", 5), 4)
    assert sorted(s4.degrees()) == [1, 1, 1, 3]
    assert delete_vertex(make_family("complete", 4), 2) == make_family("complete", 3)
    p4 = delete_vertex(make_family("cycle", 5), 0)
    assert sorted(p4.degrees()) == [1, 1, 2, 2] and is_connected(p4) and p4.m == 3
    with pytest.raises(GraphInputError):
        delete_vertex(Graph(1, []), 0)


@pytest.mark.parametrize("n", range(2, 6))
def test_delete_preserves_adjacency_exhaustive(n):
    for edges in edge_sets(n):
        g = Graph(n, edges)
        for v in range(n):
            h = delete_vertex(g, v)
            assert h.m == g.m - g.degree(v)
            keep = [u for u in range(n) if u != v]
            for i, a in enumerate(keep):
                for j, b in enumerate(keep):
                    assert h.has_edge(i, j) == g.has_edge(a, b)


@given(graphs(min_n=2, max_n=12), st.data())
def test_delete_edge_count(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    assert delete_vertex(g, v).m == g.m - g.degree(v)


def test_family_examples():
    k4 = make_family("complete", 4)
    assert (k4.n, k4.m, k4.degrees()) == (4, 6, [3, 3, 3, 3])
    sp = make_family("star_plus_edge", 5)
    assert sorted(sp.degrees(), reverse=True) == [4, 2, 2, 1, 1] and sp.m == 5
    c6 = make_family("cycle", 6)
    assert c6.degrees() == [2] * 6 and c6.m == 6


@pytest.mark.parametrize("name", sorted(FAMILY_MIN_N))
def test_families_connected_and_minimum(name):
    lo = FAMILY_MIN_N[name]
    for n in range(lo, 40):
        assert is_connected(make_family(name, n))
    if lo > 1:
        with pytest.raises(GraphInputError):
            make_family(name, lo - 1)


def test_unknown_family():
    with pytest.raises(GraphInputError):
        make_family("wheel", 6)


@given(graphs(max_n=10))
def test_degree_profile_invariants(g):
    p = g.degree_profile()
    assert sum(p.degrees) == 2 * p.m == 2 * g.m
    assert 0 <= p.delta_min <= p.delta_max <= g.n - 1
    assert all(not g.has_edge(v, v) for v in range(g.n))
    assert all(g.has_edge(u, v) == g.has_edge(v, u) for u in range(g.n) for v in range(g.n))


@given(graphs(max_n=10), st.data())
def test_relabel_and_complement(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = relabel(g, perm)
    assert h.m == g.m and sorted(h.degrees()) == sorted(g.degrees())
    c = complement(g)
    assert c.m + g.m == g.n * (g.n - 1) // 2
    assert complement(c) == g


@given(connected_graphs(max_n=10))
def test_strategy_connected(g):
    assert is_connected(g)


def test_graph_is_hashable_and_immutable():
    g = make_family("cycle", 5)
    assert hash(g) == hash(make_family("cycle", 5))
    with pytest.raises(AttributeError):
        g.n = 3
