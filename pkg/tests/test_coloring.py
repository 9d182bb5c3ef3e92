"""Exact chromatic numbers: DSATUR search, class branching, cross-checks."""

from __future__ import annotations

import random

import pytest

from conftest import complete, cycle, mk

from wellspread import (
    ResourceCap,
    build_interlacing,
    build_kneser,
    build_q,
    build_schrijver,
    chromatic_number,
    find_proper_coloring,
    is_t_colorable,
)


def test_chromatic_basics():
    assert chromatic_number(mk(0, [])) == 0
    assert chromatic_number(mk(4, [])) == 1
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(complete(7)) == 7
    assert chromatic_number(build_kneser(5, 2)) == 3


def test_coloring_witness_is_proper():
    g = build_schrijver(8, 3)
    t = chromatic_number(g)
    colors = find_proper_coloring(g, t)
    assert colors is not None
    assert len(set(colors)) <= t
    for u, v in g.edges():
        assert colors[u] != colors[v]
    assert find_proper_coloring(g, t - 1) is None


def test_is_t_colorable_thresholds():
    g = cycle(5)
    assert not is_t_colorable(g, 2)
    assert is_t_colorable(g, 3)
    assert is_t_colorable(g, 10)
    assert is_t_colorable(mk(3, []), 1)
    assert not is_t_colorable(complete(4), 3)
    assert is_t_colorable(mk(0, []), 0)
    assert not is_t_colorable(cycle(4), 0)
    with pytest.raises(ValueError):
        is_t_colorable(g, -1)


def test_class_branching_agrees_with_dsatur_on_random_graphs():
    rng = random.Random(20240817)
    for trial in range(30):
        n = rng.randrange(4, 11)
        p = rng.choice([0.2, 0.4, 0.6])
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = mk(n, edges)
        for t in range(1, 6):
            assert is_t_colorable(g, t) == (find_proper_coloring(g, t) is not None), (
                trial, n, t)


def test_schrijver_chromatic_formula_small():
    for n in range(2, 10):
        for k in range(1, n // 2 + 1):
            assert chromatic_number(build_schrijver(n, k)) == n - 2 * k + 2


def test_q_needs_ceil_n_over_k():
    for n, k in [(5, 2), (7, 2), (7, 3), (9, 4), (11, 3), (13, 5)]:
        assert chromatic_number(build_q(n, k)) == -(-n // k)


def test_interlacing_needs_ceil_n_over_k():
    for n, k in [(5, 2), (7, 2), (7, 3), (9, 4), (10, 3)]:
        assert chromatic_number(build_interlacing(n, k)) == -(-n // k)


def test_node_budget_trips():
    g = build_kneser(8, 3)
    with pytest.raises(ResourceCap):
        chromatic_number(g, node_budget=5)
