import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kextremal.connectivity import Dicut, lambda_max
from kextremal.constructions import (
    complete,
    directed_cycle,
    hajos_bijoin,
    odd_wheel,
    random_member,
    symmetric_odd_cycle,
)
from kextremal.dicolouring import (
    CutStructureReport,
    Dicolouring,
    brooks_membership,
    colouring_from_text,
    colouring_to_text,
    dichromatic_number,
    enumerate_dicolourings,
    find_dicolouring,
    is_acyclic_subset,
    is_dicritical,
    is_valid_dicolouring,
    is_vertex_dicritical,
    merge_across_dicut,
)
from kextremal.digraph import Digraph, block_decomposition, delta_max, strong_components
from kextremal.errors import BudgetExceeded, CutTooBig, InvalidInput, ParseError
from oracles import brute_chi, brute_colourable, digraphs, nx_acyclic


def test_acyclic_subset_examples():
    assert not is_acyclic_subset(directed_cycle(3), [0, 1, 2])
    assert is_acyclic_subset(odd_wheel(3), [])
    for pair in itertools.combinations(range(4), 2):
        assert not is_acyclic_subset(complete(4), pair)


def test_acyclic_digraph_gets_one_colour():
    d = Digraph(5, [(0, 1), (1, 2), (0, 3), (3, 4), (2, 4)])
    phi = find_dicolouring(d, 1)
    assert phi is not None and set(phi.as_tuple()) == {1}


def test_complete_needs_all_colours():
    assert find_dicolouring(complete(4), 3) is None
    phi = find_dicolouring(complete(4), 4)
    assert sorted(phi.as_tuple()) == [1, 2, 3, 4]


def test_bijoin_of_two_k4_is_three_dicolourable():
    d, _ = hajos_bijoin(complete(4), 0, 1, 2, complete(4), 0, 1, 2)
    phi = find_dicolouring(d, 3)
    assert phi is not None and is_valid_dicolouring(d, phi)
    assert brute_colourable(d, 3)


def test_dichromatic_examples():
    for n in range(2, 7):
        assert dichromatic_number(directed_cycle(n)) == 2
    assert dichromatic_number(symmetric_odd_cycle(2)) == 3
    assert dichromatic_number(odd_wheel(2)) == 4
    assert not brute_colourable(odd_wheel(2), 3)


def test_dicritical_examples():
    assert is_dicritical(directed_cycle(5), 2)
    for k in (2, 3, 4):
        assert is_dicritical(complete(k + 1), k + 1)
        assert is_vertex_dicritical(complete(k + 1), k + 1)
    for seed in range(4):
        d, _ = random_member(3, 2, seed, 12)
        assert is_dicritical(d, 4)
    assert not is_dicritical(complete(4).add_arcs([]), 3)


def test_enumeration_counts():
    assert len(list(enumerate_dicolourings(directed_cycle(3), 2))) == 6
    assert len(list(enumerate_dicolourings(complete(3), 3))) == 6
    assert list(enumerate_dicolourings(complete(3), 2)) == []
    with pytest.raises(BudgetExceeded):
        next(enumerate_dicolourings(Digraph(30), 2))


def test_enumeration_is_lexicographic():
    out = [phi.as_tuple() for phi in enumerate_dicolourings(directed_cycle(4), 2)]
    assert out == sorted(out)
    assert len(out) == 2**4 - 2


def test_merge_with_empty_cut_is_identity():
    d = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    cut = Dicut.of(d, [0, 1])
    phi1 = Dicolouring({0: 1, 1: 2}, 2)
    phi2 = Dicolouring({2: 1, 3: 2}, 2)
    merged = merge_across_dicut(d, cut, phi1, phi2, 2)
    assert isinstance(merged, Dicolouring)
    assert merged.as_tuple() == (1, 2, 1, 2)


def test_merge_reports_structure_on_complete():
    k = 3
    d = complete(k + 1)
    cut = Dicut.of(d, [0])
    phi1 = Dicolouring({0: 1}, k)
    phi2 = Dicolouring({1: 1, 2: 2, 3: 3}, k)
    report = merge_across_dicut(d, cut, phi1, phi2, k)
    assert isinstance(report, CutStructureReport)
    assert report.side == 1 and report.colour == 1 and report.holds()
    assert all(len(f) == 1 and len(b) == 1 for f, b in report.per_colour_arcs.values())


def test_merge_errors():
    d = complete(4)
    with pytest.raises(CutTooBig):
        merge_across_dicut(d, Dicut.of(d, [0]), Dicolouring({0: 1}, 2), Dicolouring({1: 1, 2: 2, 3: 1}, 2), 2)
    with pytest.raises(InvalidInput):
        merge_across_dicut(d, Dicut.of(d, [0]), Dicolouring({0: 1}, 3), Dicolouring({1: 1, 2: 1, 3: 2}, 3), 3)


def test_brooks_examples():
    v = brooks_membership(directed_cycle(7))
    assert v.extremal_for_brooks and v.k == 1 and v.witness_component == tuple(range(7))
    v = brooks_membership(symmetric_odd_cycle(2))
    assert v.extremal_for_brooks and v.k == 2
    d = Digraph(5, list(complete(4).arcs) + [(0, 4)])
    v = brooks_membership(d)
    assert v.k == 4 and not v.extremal_for_brooks
    assert dichromatic_number(d) == 4


def test_colouring_text_roundtrip():
    phi = find_dicolouring(odd_wheel(2), 4)
    back = colouring_from_text(colouring_to_text(phi), 4)
    assert back.as_tuple() == phi.as_tuple()
    with pytest.raises(ParseError):
        colouring_from_text("c 0 1\nc 0 2\n")


@given(digraphs(max_n=6), st.integers(1, 3))
def test_solver_complete_against_exhaustive(d, k):
    phi = find_dicolouring(d, k)
    assert (phi is not None) == brute_colourable(d, k)
    if phi is not None:
        for members in phi.classes().values():
            assert nx_acyclic(d, members)


@given(digraphs(min_n=2, max_n=7))
def test_chi_lambda_delta_chain(d):
    chi = dichromatic_number(d)
    assert chi <= lambda_max(d) + 1 <= delta_max(d) + 1


@given(digraphs(max_n=7))
def test_chi_is_max_over_strong_components_and_blocks(d):
    chi = dichromatic_number(d)
    comps = [dichromatic_number(d.induced(c)[0]) for c in strong_components(d)]
    assert chi == max(comps, default=0)
    if d.m:
        blocks = [dichromatic_number(d.induced(b)[0]) for b in block_decomposition(d).blocks]
        assert chi == max(blocks)


@given(digraphs(max_n=5))
def test_dichromatic_matches_brute(d):
    assert dichromatic_number(d) == brute_chi(d)


@given(digraphs(max_n=5), st.integers(1, 3))
def test_enumeration_matches_exhaustive(d, k):
    listed = {phi.as_tuple() for phi in enumerate_dicolourings(d, k)}
    expected = set()
    for a in itertools.product(range(1, k + 1), repeat=d.n):
        if is_valid_dicolouring(d, dict(enumerate(a)), k):
            expected.add(a)
    assert listed == expected
