"""Exact fractional chromatic numbers with verified certificates.

Main path: column generation whose exact pricing runs on the optimal dual's
support subgraph only -- sound by weak duality, since y(I) = y(I & supp) for
every independent set I.  For cyclically-labeled graphs a rotation-orbit
certificate built from one certified maximum independent set usually pins the
value without any LP iterations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclic import CyclicSubset
from .errors import ResourceCap
from .graphs import LabeledGraph
from .independence import (
    iter_bits,
    max_weight_independent_set,
    maximum_independent_set,
)
from .simplex import PackingMaster

_ZERO = Fraction(0)
_ONE = Fraction(1)
_ROUND_CAP = 5_000
_PRICE_BATCH = 8


@dataclass(frozen=True)
class FractionalColoring:
    """Weighted independent sets covering every non-excluded vertex at least once."""

    sets: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    excluded_vertex: int | None = None
    excluded_edge: tuple[int, int] | None = None

    @property
    def value(self) -> Fraction:
        return sum(self.weights, _ZERO)


def verify_fractional_coloring(g: LabeledGraph, fc: FractionalColoring) -> list[str]:
    """Exact feasibility check against g minus fc's exclusions."""
    out: list[str] = []
    V = g.vertex_count
    excl_v = fc.excluded_vertex
    excl_e = None
    if fc.excluded_edge is not None:
        a, b = fc.excluded_edge
        excl_e = (min(a, b), max(a, b))
    if len(fc.sets) != len(fc.weights):
        return ["sets/weights length mismatch"]
    cover = [_ZERO] * V
    for idx, (s, w) in enumerate(zip(fc.sets, fc.weights)):
        if w < 0:
            out.append(f"set {idx} has negative weight {w}")
        seen = set()
        for v in s:
            if not (0 <= v < V) or v == excl_v:
                out.append(f"set {idx} uses invalid vertex {v}")
            elif v in seen:
                out.append(f"set {idx} repeats vertex {v}")
            else:
                seen.add(v)
                cover[v] += w
        ordered = sorted(seen)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1:]:
                if g.has_edge(u, v) and (u, v) != excl_e:
                    out.append(f"set {idx} not independent: edge {{{u},{v}}}")
    for v in range(V):
        if v != excl_v and cover[v] < 1:
            out.append(f"vertex {v} covered only {cover[v]}")
    return out


def _greedy_maximal_extend(adj, V: int, seed_mask: int) -> int:
    s = seed_mask
    blocked = seed_mask
    for v in iter_bits(seed_mask):
        blocked |= adj[v]
    for v in range(V):
        if not (blocked >> v) & 1:
            s |= 1 << v
            blocked |= adj[v] | (1 << v)
    return s


def _orbit_certificate(g: LabeledGraph) -> tuple[Fraction, FractionalColoring] | None:
    """Try the rotation-orbit coloring of one maximum independent set.

    Succeeds when every rotated set is again an independent set of g and the
    orbit covers all vertices equally often, and the resulting primal value
    matches the dual bound |V| / alpha.  Then chi_f is pinned exactly.
    """
    labels = g.labels
    if not labels or not all(isinstance(l, CyclicSubset) for l in labels):
        return None
    n = labels[0].modulus
    if any(l.modulus != n for l in labels):
        return None
    index = {l: i for i, l in enumerate(labels)}
    best_mask = maximum_independent_set(g)
    alpha = best_mask.bit_count()
    base = list(iter_bits(best_mask))
    V = g.vertex_count
    # a maximum residue-star, when one exists, always rotates onto stars and
    # covers uniformly; prefer it over an arbitrary solver witness
    for i in range(n):
        star = [v for v in range(V) if i in labels[v]]
        if len(star) != alpha:
            continue
        mask = 0
        for v in star:
            if g.adj[v] & mask:
                mask = -1
                break
            mask |= 1 << v
        if mask != -1:
            base = star
            break
    cover = [0] * V
    orbit_sets: dict[tuple[int, ...], int] = {}
    for t in range(n):
        members = []
        for v in base:
            img = index.get(labels[v].rotate(t))
            if img is None:
                return None
            members.append(img)
        mask = 0
        for v in members:
            if g.adj[v] & mask:
                return None  # rotation is not an automorphism here
            mask |= 1 << v
        key = tuple(sorted(members))
        orbit_sets[key] = orbit_sets.get(key, 0) + 1
        for v in members:
            cover[v] += 1
    c = cover[0]
    if c == 0 or any(x != c for x in cover):
        return None
    primal = Fraction(n, c)
    if primal != Fraction(V, alpha):
        return None
    sets = tuple(sorted(orbit_sets))
    weights = tuple(Fraction(orbit_sets[s], c) for s in sets)
    fc = FractionalColoring(sets, weights)
    if verify_fractional_coloring(g, fc) or fc.value != primal:
        return None
    return primal, fc


def _support_pricing(g: LabeledGraph, y: list[Fraction]) -> tuple[Fraction, int]:
    """Exact max-weight independent set restricted to supp(y), as a g-mask."""
    supp = [v for v in range(g.vertex_count) if y[v] > 0]
    sadj = [0] * len(supp)
    for a, va in enumerate(supp):
        for bidx in range(a + 1, len(supp)):
            vb = supp[bidx]
            if (g.adj[va] >> vb) & 1:
                sadj[a] |= 1 << bidx
                sadj[bidx] |= 1 << a
    w, mask = max_weight_independent_set(sadj, [y[v] for v in supp])
    gmask = 0
    for i in iter_bits(mask):
        gmask |= 1 << supp[i]
    return w, gmask


def _greedy_priced_columns(g: LabeledGraph, y: list[Fraction]) -> list[int]:
    """Cheap pricing: weight-greedy independent sets forced through each of
    the heaviest support vertices; returns maximal extensions violating 1."""
    V = g.vertex_count
    supp = sorted((v for v in range(V) if y[v] > 0), key=lambda u: (-y[u], u))
    cols = []
    for force in supp[:_PRICE_BATCH]:
        tw = y[force]
        blocked = g.adj[force] | (1 << force)
        chosen = 1 << force
        for v in supp:
            if not (blocked >> v) & 1:
                chosen |= 1 << v
                tw += y[v]
                blocked |= g.adj[v] | (1 << v)
        if tw > 1:
            cols.append(_greedy_maximal_extend(g.adj, V, chosen))
    return cols


def fractional_chromatic_number(g: LabeledGraph) -> tuple[Fraction, FractionalColoring]:
    """Exact chi_f with a verified covering certificate."""
    V = g.vertex_count
    if V == 0:
        return _ZERO, FractionalColoring((), ())
    if g.edge_count() == 0:
        fc = FractionalColoring((tuple(range(V)),), (_ONE,))
        return _ONE, fc
    pinned = _orbit_certificate(g)
    if pinned is not None:
        return pinned
    value, masks, weights = _column_generation(g)
    sets = tuple(tuple(iter_bits(m)) for m in masks)
    fc = FractionalColoring(sets, tuple(weights))
    bad = verify_fractional_coloring(g, fc)
    if bad or fc.value != value:
        raise AssertionError(f"LP certificate failed verification: {bad[:3]}")
    return value, fc


def _column_generation(g: LabeledGraph) -> tuple[Fraction, list[int], list[Fraction]]:
    V = g.vertex_count
    adj = g.adj
    master = PackingMaster(V)
    seen: set[int] = set()
    for v in range(V):
        col = _greedy_maximal_extend(adj, V, 1 << v)
        if col not in seen:
            seen.add(col)
            master.add_constraint(col)
    master.primal_simplex()
    for _ in range(_ROUND_CAP):
        value, y, w = master.solution()
        cols = [c for c in _greedy_priced_columns(g, y) if c not in seen]
        if cols:
            for c in cols:
                seen.add(c)
                master.add_constraint(c)
            master.dual_simplex()
            continue
        best_w, best_mask = _support_pricing(g, y)
        if best_w <= 1:
            keep = [(m, wi) for m, wi in zip(master.pool, w) if wi > 0]
            return value, [m for m, _ in keep], [wi for _, wi in keep]
        col = _greedy_maximal_extend(adj, V, best_mask)
        if col in seen:
            col = best_mask  # the violated set itself is necessarily new
        seen.add(col)
        master.add_constraint(col)
        master.dual_simplex()
    raise ResourceCap(f"column generation exceeded {_ROUND_CAP} rounds")


def covering_lp_over_pool(g: LabeledGraph,
                          pool: list[tuple[int, ...]]) -> tuple[Fraction, list[Fraction]]:
    """Exact optimum of the covering LP restricted to the given sets.

    Small-graph oracle used to cross-check column generation; the pool must
    cover every vertex.
    """
    V = g.vertex_count
    master = PackingMaster(V)
    for s in pool:
        mask = 0
        for v in s:
            mask |= 1 << v
        master.add_constraint(mask)
    master.primal_simplex()
    value, _y, w = master.solution()
    return value, w
