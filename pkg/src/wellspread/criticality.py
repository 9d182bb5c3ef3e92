"""Deletion sweeps: how chromatic invariants respond to removing one vertex
or one edge, and where the rotation and 2-separated families coincide.

Every reported value is recomputed from the literally modified graph by the
exact solvers; nothing is inferred from formulas.  Formula predictions live
in the verification harness, which compares them against these sweeps.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .coloring import chromatic_number
from .cyclic import critical_params
from .errors import InvalidParams
from .fractional import fractional_chromatic_number
from .graphs import (
    FamilyParams,
    LabeledGraph,
    build_circular,
    build_q,
    build_schrijver,
    delete_edge,
    delete_vertex,
    is_cycle_edge,
)
from .homomorphism import circular_chromatic_number


class Invariant(enum.Enum):
    CHI = "chi"
    CHI_F = "chi_f"
    CHI_C = "chi_c"


class SweepSummary(enum.Enum):
    VERTEX_CRITICAL = "vertex_critical"
    EDGE_CLASSIFICATION = "edge_classification"
    NOT_CRITICAL = "not_critical"
    MIXED = "mixed"


@dataclass(frozen=True)
class CriticalityReport:
    """One sweep: the invariant on the intact graph and after each deletion."""

    family: Optional[FamilyParams]
    invariant: Invariant
    baseline: Fraction
    per_vertex: tuple[tuple[int, Fraction], ...]
    per_edge: tuple[tuple[tuple[int, int], Fraction, Optional[bool]], ...]
    summary: SweepSummary
    metadata: dict = field(default_factory=dict)


def evaluate_invariant(g: LabeledGraph, invariant: Invariant) -> Fraction:
    if invariant is Invariant.CHI:
        return Fraction(chromatic_number(g))
    if invariant is Invariant.CHI_F:
        return fractional_chromatic_number(g)[0]
    return circular_chromatic_number(g)


def vertex_criticality(g: LabeledGraph, invariant: Invariant) -> CriticalityReport:
    """Delete each vertex in turn and recompute the invariant.

    VERTEX_CRITICAL means every deletion strictly lowered the value.
    """
    baseline = evaluate_invariant(g, invariant)
    rows = []
    for v in range(g.vertex_count):
        val = evaluate_invariant(delete_vertex(g, v), invariant)
        if val > baseline:
            raise AssertionError(f"deleting {v} raised {invariant.value} to {val}")
        rows.append((v, val))
    drops = sum(1 for _, val in rows if val < baseline)
    if drops == len(rows) and rows:
        summary = SweepSummary.VERTEX_CRITICAL
    elif drops == 0:
        summary = SweepSummary.NOT_CRITICAL
    else:
        summary = SweepSummary.MIXED
    return CriticalityReport(g.family, invariant, baseline, tuple(rows), (), summary)


def _edge_summary(rows, baseline) -> SweepSummary:
    drops = sum(1 for _, val, _ in rows if val < baseline)
    if drops == 0:
        return SweepSummary.NOT_CRITICAL
    clean = all((val < baseline) == bool(flag) for _, val, flag in rows)
    return SweepSummary.EDGE_CLASSIFICATION if clean else SweepSummary.MIXED


def edge_criticality(q: LabeledGraph) -> CriticalityReport:
    """Fractional chromatic number of the rotation graph after each single
    edge deletion, tagged with the consecutive-rotation flag.

    Non-coprime parameters are reduced first; the sweep then runs on the
    reduced graph with the original parameters preserved in metadata.
    """
    if q.family is None or q.family.tag != "q":
        raise InvalidParams("edge sweep is defined for the rotation family")
    n, k = q.family.n, q.family.k
    metadata = {}
    g = gcd(n, k)
    if g != 1:
        metadata["original_params"] = (n, k)
        n, k = n // g, k // g
        q = build_q(n, k)
    baseline = fractional_chromatic_number(q)[0]
    rows = []
    for e in q.edges():
        val = fractional_chromatic_number(delete_edge(q, *e))[0]
        if val > baseline:
            raise AssertionError(f"deleting edge {e} raised chi_f to {val}")
        rows.append((e, val, is_cycle_edge(q, *e)))
    return CriticalityReport(
        q.family, Invariant.CHI_F, baseline, (), tuple(rows),
        _edge_summary(rows, baseline), metadata,
    )


def circular_edge_corollary(n: int, k: int) -> CriticalityReport:
    """Circular chromatic number of the circular complete graph after each
    single edge deletion.

    The flag on each edge {i,j} marks circular distance exactly k, i.e. the
    image of a consecutive-rotation edge under the position-times-k bijection.
    """
    if not (1 <= k and 2 * k <= n):
        raise InvalidParams(f"need 1 <= k <= n/2, got n={n} k={k}")
    if gcd(n, k) != 1:
        raise InvalidParams(f"need gcd(n,k)=1, got gcd({n},{k})={gcd(n, k)}")
    g = build_circular(n, k)
    baseline = circular_chromatic_number(g)
    rows = []
    for e in g.edges():
        val = circular_chromatic_number(delete_edge(g, *e))
        if val > baseline:
            raise AssertionError(f"deleting edge {e} raised chi_c to {val}")
        d = (e[1] - e[0]) % n
        rows.append((e, val, min(d, n - d) == k))
    return CriticalityReport(
        g.family, Invariant.CHI_C, baseline, (), tuple(rows),
        _edge_summary(rows, baseline),
        {"critical_value": critical_params(n, k).as_fraction()},
    )


@dataclass(frozen=True)
class BoundaryEntry:
    n: int
    k: int
    equal: bool
    predicted: bool


@dataclass(frozen=True)
class BoundaryReport:
    entries: tuple[BoundaryEntry, ...]

    @property
    def all_match(self) -> bool:
        return all(e.equal == e.predicted for e in self.entries)


def q_equals_schrijver_sweep(max_n: int) -> BoundaryReport:
    """Compare vertex sets of the rotation graph and the 2-separated graph
    for every 1 <= k, 2k <= n <= max_n.

    Both graphs put an edge exactly between disjoint labels, so equal label
    sets mean equal graphs.  Equality is predicted to hold exactly for k=1,
    n=2k, and n=2k+1.
    """
    entries = []
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            q = build_q(n, k)
            sg = build_schrijver(n, k)
            equal = frozenset(q.labels) == frozenset(sg.labels)
            predicted = k == 1 or n == 2 * k or n == 2 * k + 1
            entries.append(BoundaryEntry(n, k, equal, predicted))
    return BoundaryReport(tuple(entries))
