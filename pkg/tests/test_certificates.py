"""Closed-form certificates: colorings, retractions, embeddings, neighbor tables."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest

from wellspread import (
    InvalidParams,
    MapKind,
    NotAnEdge,
    NotCoprime,
    NotCycleEdge,
    build_q,
    circular_isomorphism,
    critical_params,
    delete_edge,
    delete_vertex,
    edge_deleted_coloring,
    edge_deleted_retraction,
    find_subgraph_qab,
    fractional_chromatic_number,
    right_j_neighbors,
    scaling_isomorphism,
    star_positions,
    validate_map,
    verify_fractional_coloring,
    vertex_deleted_coloring,
    vertex_deleted_retraction,
)


def test_star_positions_examples():
    assert star_positions(7, 2) == (0, 4)
    # stars are the negated canonical set, so always well-spread
    for n, k in [(5, 2), (11, 3), (13, 5)]:
        s = star_positions(n, k)
        assert len(s) == k


def test_vertex_deleted_coloring_worked_example():
    fc = vertex_deleted_coloring(7, 2, 1)
    assert fc.sets == ((0, 4), (3, 6), (2, 5))
    assert fc.weights == (Fraction(1),) * 3
    assert fc.value == 3
    assert fc.excluded_vertex == 1


def test_vertex_deleted_coloring_valid_on_grid():
    for n, k in [(5, 2), (7, 2), (7, 3), (8, 3), (11, 3), (13, 5)]:
        cp = critical_params(n, k)
        for v in range(n):
            fc = vertex_deleted_coloring(n, k, v)
            assert fc.value == cp.as_fraction()
            q = build_q(n, k)
            assert verify_fractional_coloring(q, fc) == []
            assert all(v not in s for s in fc.sets)
            # matches an independent LP solve on the literally deleted graph
            assert fractional_chromatic_number(delete_vertex(q, v))[0] == fc.value


def test_vertex_deleted_coloring_rejects():
    with pytest.raises(InvalidParams):
        vertex_deleted_coloring(7, 2, 7)
    with pytest.raises(NotCoprime):
        vertex_deleted_coloring(6, 2, 0)


def test_edge_deleted_coloring_worked_example():
    fc = edge_deleted_coloring(7, 2, (0, 1))
    assert fc.sets == ((0, 1, 4), (3, 6), (2, 5))
    assert fc.value == 3
    assert fc.excluded_edge == (0, 1)


def test_edge_deleted_coloring_valid_on_cycle_edges():
    for n, k in [(5, 2), (7, 3), (11, 3), (13, 5)]:
        cp = critical_params(n, k)
        q = build_q(n, k)
        for p in range(n):
            e = (p, (p + 1) % n)
            fc = edge_deleted_coloring(n, k, e)
            assert fc.value == cp.as_fraction()
            assert verify_fractional_coloring(q, fc) == []
            assert fractional_chromatic_number(delete_edge(q, *e))[0] == fc.value


def test_edge_deleted_coloring_rejects():
    with pytest.raises(NotCycleEdge):
        edge_deleted_coloring(7, 2, (0, 2))
    with pytest.raises(NotAnEdge):
        edge_deleted_coloring(7, 2, (0, 3))
    with pytest.raises(InvalidParams):
        edge_deleted_coloring(7, 2, (0, 0))
    with pytest.raises(InvalidParams):
        edge_deleted_coloring(7, 2, (0, 9))


def test_window_embedding_worked_example():
    m = find_subgraph_qab(7, 2)
    assert m.kind is MapKind.EMBEDDING
    assert m.mapping == {2: 0, 1: 6, 0: 5}
    assert validate_map(m) == []


def test_window_embedding_lands_in_qab():
    for n, k in [(5, 2), (7, 3), (11, 3), (13, 5)]:
        m = find_subgraph_qab(n, k)
        cp = critical_params(n, k)
        assert (m.source.family.n, m.source.family.k) == (cp.a, cp.b)
        assert (m.target.family.n, m.target.family.k) == (n, k)
        assert validate_map(m) == []


def test_retractions_validate_and_carry_sections():
    for n, k in [(5, 2), (7, 2), (11, 3)]:
        for v in range(n):
            m = vertex_deleted_retraction(n, k, v)
            assert m.kind is MapKind.HOMOMORPHISM
            assert m.excluded_vertex == v
            assert m.section is not None
            assert validate_map(m) == []
        for p in range(n):
            m = edge_deleted_retraction(n, k, (p, (p + 1) % n))
            assert m.excluded_edge is not None
            assert validate_map(m) == []
    with pytest.raises(NotCycleEdge):
        edge_deleted_retraction(7, 2, (0, 2))


def test_scaling_isomorphism():
    for n, k, ell in [(5, 2, 2), (5, 2, 3), (7, 3, 2), (6, 2, 2)]:
        m = scaling_isomorphism(n, k, ell)
        assert m.kind is MapKind.ISOMORPHISM
        assert (m.target.family.n, m.target.family.k) == (ell * n, ell * k)
        assert validate_map(m) == []
        g = gcd(n, k)
        assert m.source.vertex_count == n // g
    with pytest.raises(InvalidParams):
        scaling_isomorphism(5, 2, 1)


def test_circular_isomorphism_worked_example():
    m = circular_isomorphism(5, 2)
    assert [m.mapping[u] for u in range(5)] == [0, 2, 4, 1, 3]
    assert m.kind is MapKind.ISOMORPHISM
    assert validate_map(m) == []
    for n, k in [(7, 2), (7, 3), (11, 4), (13, 5)]:
        assert validate_map(circular_isomorphism(n, k)) == []


def test_right_neighbors_5_2():
    q = build_q(5, 2)
    table = right_j_neighbors(q, 0)
    assert {(e.vertex, e.offset, e.overlap) for j in (1,) for e in table.by_overlap(1)} == {
        (2, 2, 1), (3, 3, 1)}
    assert sum(len(es) for _, es in table.entries) == 2 * (2 - 1)


def test_right_neighbors_13_5():
    q = build_q(13, 5)
    table = right_j_neighbors(q, 0)
    assert sum(len(es) for _, es in table.entries) == 8
    assert [j for j, _ in table.entries] == [1, 2, 3, 4]
    for j, es in table.entries:
        assert len(es) == 2
        u, v = es[0].vertex, es[1].vertex
        assert q.has_edge(u, v)
        for e in es:
            assert 1 <= e.overlap == j


def test_right_neighbors_pairs_adjacent_generally():
    for n, k in [(7, 2), (7, 3), (9, 4), (11, 3), (11, 5), (13, 5)]:
        q = build_q(n, k)
        for x in range(n):
            table = right_j_neighbors(q, x)
            assert sum(len(es) for _, es in table.entries) == 2 * (k - 1)
            for j, es in table.entries:
                if len(es) == 2:
                    assert q.has_edge(es[0].vertex, es[1].vertex)


def test_right_neighbors_rejects_non_q_input():
    with pytest.raises(NotCoprime):
        right_j_neighbors(build_q(6, 2), 0)
