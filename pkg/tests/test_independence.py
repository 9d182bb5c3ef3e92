"""Independence numbers, maximal-set enumeration, weighted oracle."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from conftest import complete, cycle, mk

from wellspread import (
    ResourceCap,
    build_kneser,
    build_q,
    build_schrijver,
    enumerate_maximal_independent_sets,
    independence_number,
    is_well_spread,
    max_independent_sets,
    max_weight_independent_set,
    maximum_independent_set,
)
from wellspread.cyclic import CyclicSubset
from wellspread.independence import greedy_independent_set


def test_small_graph_alphas():
    assert independence_number(cycle(5)) == 2
    assert independence_number(cycle(6)) == 3
    assert independence_number(complete(6)) == 1
    assert independence_number(mk(4, [])) == 4
    assert independence_number(mk(0, [])) == 0


def test_petersen_maximal_sets():
    g = build_kneser(5, 2)
    assert independence_number(g) == 4
    sets = enumerate_maximal_independent_sets(g)
    assert len(sets) == 15
    sizes = sorted(len(m) for m in sets)
    assert sizes == [3] * 10 + [4] * 5
    # the 5 maximum ones are the stars: all pairs through one point
    for m in max_independent_sets(g):
        assert len(m) == 4
        common = set.intersection(*(set(g.labels[v].elements) for v in m))
        assert len(common) == 1


def test_kneser_alpha_formula():
    for n in range(2, 9):
        for k in range(1, n // 2 + 1):
            assert independence_number(build_kneser(n, k)) == comb(n - 1, k - 1)


def test_schrijver_alpha_formula():
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            expect = comb(n - k - 1, k - 1)
            assert independence_number(build_schrijver(n, k)) == expect


def test_schrijver_7_2_maximum_sets_are_the_seven_stars():
    g = build_schrijver(7, 2)
    tops = max_independent_sets(g)
    assert len(tops) == 7
    for m in tops:
        common = set.intersection(*(set(g.labels[v].elements) for v in m))
        assert len(common) == 1


def test_schrijver_6_2_has_a_non_star_maximum_set():
    g = build_schrijver(6, 2)
    tops = max_independent_sets(g)
    non_star = [
        m for m in tops
        if not set.intersection(*(set(g.labels[v].elements) for v in m))
    ]
    assert non_star


def test_q_alpha_is_k_and_maximum_sets_are_well_spread():
    for n, k in [(5, 2), (7, 2), (7, 3), (11, 3), (13, 5), (14, 5)]:
        q = build_q(n, k)
        assert independence_number(q) == k
        for m in max_independent_sets(q):
            assert is_well_spread(CyclicSubset(n, m))


def test_greedy_witness_is_independent_and_bounded():
    for g in (cycle(7), build_kneser(6, 2), build_schrijver(8, 3), complete(5)):
        mask = greedy_independent_set(g)
        members = [v for v in range(g.vertex_count) if mask >> v & 1]
        assert 1 <= len(members) <= independence_number(g)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                assert not g.has_edge(u, v)


def test_maximum_independent_set_returns_witness():
    g = build_schrijver(9, 3)
    mask = maximum_independent_set(g)
    members = [v for v in range(g.vertex_count) if mask >> v & 1]
    assert len(members) == independence_number(g)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            assert not g.has_edge(u, v)


def test_enumeration_cap_trips():
    with pytest.raises(ResourceCap):
        enumerate_maximal_independent_sets(build_kneser(8, 3), mis_cap=10)


def test_max_weight_oracle_small():
    g = cycle(5)
    w = [Fraction(1)] * 5
    val, mask = max_weight_independent_set(list(g.adj), w)
    assert val == 2
    w = [Fraction(5), Fraction(1), Fraction(1), Fraction(1), Fraction(1)]
    val, mask = max_weight_independent_set(list(g.adj), w)
    assert val == 6 and mask >> 0 & 1
    # weights concentrated on one vertex beat any pair
    w = [Fraction(10), Fraction(1), Fraction(1), Fraction(1), Fraction(1)]
    val, _ = max_weight_independent_set(list(g.adj), w)
    assert val == 11
