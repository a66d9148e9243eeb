import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kextremal.connectivity import (
    Dicut,
    all_pairs_lambda,
    lambda_max,
    lambda_pair,
    min_dicut,
    symmetric_connectivity,
)
from kextremal.constructions import complete, directed_cycle, directed_hajos_join, random_member
from kextremal.digraph import Digraph, delta_max
from kextremal.errors import EmptySide, SameVertex, TooSmall
from oracles import digraphs, nx_lambda, nx_lambda_max


def test_dicycle_pairs():
    c5 = directed_cycle(5)
    assert set(all_pairs_lambda(c5).values()) == {1}
    assert lambda_max(c5) == 1


def test_complete_pairs():
    assert set(all_pairs_lambda(complete(4)).values()) == {3}
    for k in (3, 4, 5):
        assert lambda_max(complete(k + 1)) == k


def test_join_of_two_k4_has_lambda_three_everywhere():
    d, _ = directed_hajos_join(complete(4), 0, 1, complete(4), 0, 1)
    assert d.n == 7
    assert set(all_pairs_lambda(d).values()) == {3}


def test_min_dicut_examples():
    cut = min_dicut(Digraph(2, [(0, 1)]), 0, 1)
    assert cut.source_side == {0} and cut.crossing_arcs == ((0, 1),)
    cut = min_dicut(directed_cycle(4), 0, 2)
    assert cut.size == 1 and cut.source_side == {0}
    cut = min_dicut(complete(4), 0, 1)
    assert cut.size == 3


def test_k4_cut_by_enumerating_all_sides():
    d = complete(4)
    best = min(
        Dicut.of(d, side).size
        for r in range(1, 4)
        for side in itertools.combinations(range(4), r)
        if 0 in side and 1 not in side
    )
    assert best == 3 == lambda_pair(d, 0, 1)


def test_errors():
    with pytest.raises(SameVertex):
        lambda_pair(complete(3), 1, 1)
    with pytest.raises(TooSmall):
        lambda_max(Digraph(1))
    with pytest.raises(EmptySide):
        Dicut.of(complete(3), [])


def test_symmetric_connectivity_examples():
    assert symmetric_connectivity(complete(4))
    assert not symmetric_connectivity(Digraph(2, [(0, 1)]))
    for seed in range(5):
        d, _ = random_member(3, 2, seed, 14)
        assert symmetric_connectivity(d)


@given(digraphs(min_n=2, max_n=7), st.data())
def test_lambda_matches_networkx_flow(d, data):
    u = data.draw(st.integers(0, d.n - 1))
    v = data.draw(st.integers(0, d.n - 1).filter(lambda x: x != u))
    value = lambda_pair(d, u, v)
    assert value == nx_lambda(d, u, v)
    cut = min_dicut(d, u, v)
    assert cut.size == value
    assert u in cut.source_side and v not in cut.source_side


@given(digraphs(min_n=2, max_n=6))
def test_lambda_max_matches_networkx_and_degree_bound(d):
    assert lambda_max(d) == nx_lambda_max(d)
    assert lambda_max(d) <= delta_max(d)
