"""Acceptance gate: the ten verification criteria at their full grids.

Each test drives one criterion through the same checker the `verify-paper`
command uses, prints a single PASS/FAIL line, and fails with the offending
cases listed if anything regressed.  Everything is exact arithmetic; there
are no tolerances to tune.
"""

from __future__ import annotations

from wellspread.verify import (
    check_certificates,
    check_chromatic_law,
    check_circular_deletion,
    check_edge_classification,
    check_fractional_law,
    check_independence,
    check_interlacing,
    check_rotation_structure,
    check_vertex_criticality,
    check_well_spread,
)


def _gate(result):
    verdict = "PASS" if result.passed else "FAIL"
    print(f"CRITERION {result.number} ({result.name}): {verdict} "
          f"[{len(result.cases)} cases]")
    bad = [c for c in result.cases if not c.ok]
    assert not bad, "\n".join(f"{c.label}: {c.detail}" for c in bad)


def test_criterion_01_chromatic_law():
    _gate(check_chromatic_law(max_n=10, deletion_max_n=8))


def test_criterion_02_independence_numbers():
    _gate(check_independence(max_n_kneser=9, max_n_schrijver=11))


def test_criterion_03_fractional_law():
    _gate(check_fractional_law(max_n_set=10, max_n_q=20))


def test_criterion_04_vertex_criticality():
    _gate(check_vertex_criticality(max_n=14))


def test_criterion_05_edge_classification():
    _gate(check_edge_classification(max_n=14))


def test_criterion_06_explicit_certificates():
    _gate(check_certificates(max_n=14, scaling_max_n=8))


def test_criterion_07_rotation_structure():
    _gate(check_rotation_structure())


def test_criterion_08_well_spread_machinery():
    _gate(check_well_spread(max_n=16))


def test_criterion_09_circular_deletion():
    _gate(check_circular_deletion())


def test_criterion_10_interlacing():
    _gate(check_interlacing(max_n=10))
