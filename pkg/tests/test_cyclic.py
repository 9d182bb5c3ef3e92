"""Cyclic subsets: separation, well-spread predicates, reduction."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest

from wellspread import (
    CyclicSubset,
    InvalidParams,
    NotCoprime,
    NotWellSpread,
    canonical_well_spread,
    critical_params,
    euclid_reduce,
    is_r_separated,
    is_well_spread,
    is_well_spread_dual,
)


def test_subset_normalizes_and_bounds():
    s = CyclicSubset(7, [3, 0, 3])
    assert s.elements == (0, 3)
    assert 3 in s and 1 not in s
    assert len(s) == 2
    with pytest.raises(InvalidParams):
        CyclicSubset(7, [7])
    with pytest.raises(InvalidParams):
        CyclicSubset(7, [-1])
    with pytest.raises(InvalidParams):
        CyclicSubset(0, [])


def test_rotate_and_complement():
    s = CyclicSubset(7, [0, 3])
    assert s.rotate(2).elements == (2, 5)
    assert s.rotate(7).elements == s.elements
    assert s.rotate(-1).elements == (2, 6)
    assert s.complement().elements == (1, 2, 4, 5, 6)
    assert s.complement().complement() == s


def test_separation_small_cases():
    assert is_r_separated(CyclicSubset(7, [0, 3]), 2)
    assert not is_r_separated(CyclicSubset(7, [0, 1]), 2)
    # wrap-around gap counts: {0, 6} in Z_7 has gap 1 going 6 -> 0
    assert not is_r_separated(CyclicSubset(7, [0, 6]), 2)
    assert is_r_separated(CyclicSubset(7, [0]), 2)
    assert is_r_separated(CyclicSubset(7, []), 3)


def test_well_spread_agrees_with_dual_exhaustively():
    for n in range(1, 13):
        for mask in range(1 << n):
            s = CyclicSubset(n, (i for i in range(n) if mask >> i & 1))
            assert is_well_spread(s) == is_well_spread_dual(s), s


def test_well_spread_examples():
    assert is_well_spread(CyclicSubset(13, [0, 2, 5, 7, 10]))
    assert not is_well_spread(CyclicSubset(13, [0, 1, 2, 3, 4]))
    # every singleton and the full set are trivially balanced
    assert is_well_spread(CyclicSubset(9, [4]))
    assert is_well_spread(CyclicSubset(5, range(5)))


def test_canonical_is_well_spread_and_unique_up_to_rotation():
    for n in range(2, 15):
        for k in range(1, n + 1):
            c = canonical_well_spread(n, k)
            assert len(c) == k
            assert is_well_spread(c)
    # all well-spread k-sets are rotations of the canonical one
    n, k = 13, 5
    c = canonical_well_spread(n, k)
    rotations = {c.rotate(t).elements for t in range(n)}
    found = set()
    for mask in range(1 << n):
        if bin(mask).count("1") != k:
            continue
        s = CyclicSubset(n, (i for i in range(n) if mask >> i & 1))
        if is_well_spread(s):
            found.add(s.elements)
    assert found == rotations
    assert len(found) == n // gcd(n, k)


def test_critical_params_worked_values():
    assert (critical_params(7, 2).a, critical_params(7, 2).b) == (3, 1)
    assert (critical_params(11, 3).a, critical_params(11, 3).b) == (7, 2)
    assert (critical_params(13, 5).a, critical_params(13, 5).b) == (5, 2)
    for n in range(2, 10):
        cp = critical_params(n, 1)
        assert (cp.a, cp.b) == (n - 1, 1)
    assert critical_params(13, 5).as_fraction() == Fraction(5, 2)


def test_critical_params_minimality_and_errors():
    for n in range(2, 20):
        for k in range(1, n):
            if gcd(n, k) != 1:
                with pytest.raises(NotCoprime):
                    critical_params(n, k)
                continue
            cp = critical_params(n, k)
            assert cp.a * k == cp.b * n - 1
            assert all((b * n - 1) % k for b in range(1, cp.b))
    with pytest.raises(InvalidParams):
        critical_params(5, 0)
    with pytest.raises(InvalidParams):
        critical_params(5, 5)


def test_reduce_reaches_gcd_sized_terminal():
    for n in range(2, 17):
        for k in range(1, n // 2 + 1):
            trace = euclid_reduce(canonical_well_spread(n, k).rotate(3))
            assert len(trace.terminal) == gcd(n, k)
            assert is_well_spread(trace.terminal)
            for step in trace.steps:
                assert step.cycle_length == step.set_size * step.quotient + step.remainder


def test_reduce_rejects_bad_inputs():
    with pytest.raises(NotWellSpread):
        euclid_reduce(CyclicSubset(10, [0, 1, 5, 6]))
    with pytest.raises(InvalidParams):
        euclid_reduce(CyclicSubset(5, [0, 1, 2]))  # |s| > n/2
    with pytest.raises(InvalidParams):
        euclid_reduce(CyclicSubset(5, []))
