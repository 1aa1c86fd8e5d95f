import math
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import connected_graphs, graphs
from oracles import randic_float
from rqv.enumeration import GraphFilter, enumerate_connected
from rqv.graph import Graph, GraphInputError, make_family
from rqv.invariants import (
    avg_neighbor_degree,
    full_report,
    max_pendant_neighbors,
    randic_index,
    t_value,
)
from rqv.spectral import q_radius


def test_randic_examples():
    assert randic_index(make_family("star", 13)).contains(math.sqrt(12))
    assert randic_index(make_family("complete", 4)).contains(2)
    exact = 10 / math.sqrt(12) + math.sqrt(1 / 6) + 0.5
    r = randic_index(make_family("star_plus_edge", 13))
    assert abs(r.mid - exact) < 1e-13 and abs(r.mid - 3.7949996) < 1e-7


def test_randic_isolated_vertex():
    with pytest.raises(GraphInputError):
        randic_index(Graph(3, [(0, 1)]))


@given(graphs(min_n=2, max_n=14))
def test_randic_matches_oracle_and_width(g):
    if min(g.degrees()) == 0:
        return
    r = randic_index(g)
    ref = randic_float(g.n, list(g.edges()))
    assert r.lo - 1e-14 <= ref <= r.hi + 1e-14
    assert r.width <= 1e-12 * max(g.m, 1)


def test_neighbor_degree_examples():
    s13 = make_family("star", 13)
    assert avg_neighbor_degree(s13, 0) == 1 and avg_neighbor_degree(s13, 5) == 12
    assert avg_neighbor_degree(make_family("complete", 4), 2) == 3
    assert t_value(s13, 0) == 13
    assert t_value(make_family("complete", 12), 7) == 22
    assert t_value(make_family("path", 3), 1) == 3
    assert isinstance(t_value(make_family("path", 4), 1), Fraction)
    with pytest.raises(GraphInputError):
        avg_neighbor_degree(Graph(2, []), 0)


@pytest.mark.parametrize("args,expected", [((13, 23, 12), 6), ((13, 15, 12), 9), ((13, 19, 12), 7)])
def test_max_pendant_examples(args, expected):
    assert max_pendant_neighbors(*args) == expected


@pytest.mark.parametrize("args", [(13, 11, 12), (13, 79, 12), (13, 20, 13), (2, 1, 1), (13, 40, 4)])
def test_max_pendant_infeasible(args):
    with pytest.raises(GraphInputError):
        max_pendant_neighbors(*args)


@pytest.mark.parametrize("n", range(4, 9))
def test_max_pendant_is_an_upper_bound(n):
    # no enumerated graph has more leaves than the count allows
    for g in enumerate_connected(n):
        d = g.degrees()
        delta = max(d)
        if delta < 2:
            continue
        assert d.count(1) <= max_pendant_neighbors(n, g.m, delta)


@pytest.mark.parametrize("name,n,ratio", [
    ("star", 13, 13 / math.sqrt(12)),
    ("complete", 12, 11 / 3),
    ("cycle", 6, 4 / 3),
])
def test_full_report_examples(name, n, ratio):
    rep = full_report(make_family(name, n))
    assert rep.ratio_q_over_R.contains(ratio) or abs(rep.ratio_q_over_R.mid - ratio) < 1e-12
    d = rep.to_dict()
    assert d["n"] == n and "merris" in d["bounds"]
    assert "q/R" in rep.render()


def test_full_report_cycle_values():
    rep = full_report(make_family("cycle", 6))
    assert rep.randic.contains(3) and rep.q.lo <= 4 <= rep.q.hi


def test_full_report_rejects_disconnected():
    with pytest.raises(GraphInputError):
        full_report(Graph(4, [(0, 1), (2, 3)]))


@given(connected_graphs(min_n=2, max_n=10))
def test_ratio_is_interval_quotient(g):
    rep = full_report(g)
    q = rep.q.bracket
    r = rep.randic
    assert rep.ratio_q_over_R.lo <= q.lo / r.hi + 1e-15
    assert rep.ratio_q_over_R.hi >= q.hi / r.lo - 1e-15


def test_trees_have_q_at_most_n_with_equality_only_for_stars():
    for n in range(2, 9):
        for g in enumerate_connected(n, GraphFilter(m=(n - 1, n - 1))):
            q = q_radius(g)
            is_star = max(g.degrees()) == n - 1
            if is_star:
                assert q.lo <= n <= q.hi
            else:
                assert q.hi < n
