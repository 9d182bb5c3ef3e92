"""Closed-form certificates on the rotation graph: colorings for single
deletions, window embeddings, folding homomorphisms, and explicit
isomorphisms.

Positions are vertex ids of the rotation graph, i.e. rotation offsets of the
canonical well-spread set (position 0 carries the canonical set itself).
Every constructor validates its output through the generic checkers before
returning; a violation is an internal error, never a returned value.

The light-window machinery: with (a, b) the least solution of a*k = b*n - 1,
the n windows of a consecutive positions each contain b members of any
rotated star except for exactly one window with b-1.  All constructions below
conjugate that one deficient window onto the requested deletion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclic import CyclicSubset, canonical_well_spread, critical_params
from .errors import InvalidParams, NotAnEdge, NotCoprime, NotCycleEdge
from .fractional import FractionalColoring, verify_fractional_coloring
from .graphs import (
    LabeledGraph,
    MapKind,
    VertexMap,
    build_circular,
    build_q,
    validate_map,
)


def _require_coprime(n: int, k: int, strict: bool) -> None:
    lo_ok = 2 * k < n if strict else 2 * k <= n
    if not (1 <= k and lo_ok):
        bound = "k < n/2" if strict else "k <= n/2"
        raise InvalidParams(f"need 1 <= {bound}, got n={n} k={k}")
    if gcd(n, k) != 1:
        raise NotCoprime(f"need gcd(n,k)=1, got gcd({n},{k})={gcd(n, k)}")


def star_positions(n: int, k: int) -> tuple[int, ...]:
    """Rotation offsets whose set contains residue 0: a maximum independent set."""
    _require_coprime(n, k, strict=False)
    canon = canonical_well_spread(n, k)
    return tuple(sorted((-c) % n for c in canon))


def _light_window_start(n: int, length: int, heavy: int, members: frozenset[int]) -> int:
    """Start of the unique length-window holding heavy-1 members (others hold heavy)."""
    light = None
    for s in range(n):
        c = sum(1 for d in range(length) if (s + d) % n in members)
        if c == heavy - 1:
            if light is not None:
                raise AssertionError(f"two deficient windows at {light} and {s}")
            light = s
        elif c != heavy:
            raise AssertionError(f"window count {c} outside {{{heavy - 1},{heavy}}}")
    if light is None:
        raise AssertionError("no deficient window found")
    return light


def _checked_coloring(n: int, k: int, fc: FractionalColoring) -> FractionalColoring:
    bad = verify_fractional_coloring(build_q(n, k), fc)
    if bad:
        raise AssertionError(f"constructed coloring invalid: {bad[:3]}")
    return fc


def vertex_deleted_coloring(n: int, k: int, deleted: int) -> FractionalColoring:
    """Weight-1/b star rotations covering every position except `deleted`.

    The star misses one position per window cycle; a single conjugating
    rotation parks that deficiency exactly on the deleted vertex.
    """
    _require_coprime(n, k, strict=False)
    if not (0 <= deleted < n):
        raise InvalidParams(f"vertex {deleted} out of range 0..{n - 1}")
    cp = critical_params(n, k)
    a1 = star_positions(n, k)
    s0 = _light_window_start(n, cp.a, cp.b, frozenset(a1))
    delta = (deleted - s0) % n
    # The rotations hit `deleted` exactly b-1 times; strip it so each set
    # lives in the deleted graph.  Every other vertex keeps coverage b.
    sets = tuple(
        tuple(sorted(x for u in a1 if (x := (u + delta - j) % n) != deleted))
        for j in range(cp.a)
    )
    fc = FractionalColoring(sets, (Fraction(1, cp.b),) * cp.a, excluded_vertex=deleted)
    if fc.value != Fraction(cp.a, cp.b):
        raise AssertionError(f"total weight {fc.value} != {cp.a}/{cp.b}")
    return _checked_coloring(n, k, fc)


def _cycle_edge_base(n: int, k: int, edge: tuple[int, int]) -> int:
    """p such that edge == {p, p+1 mod n}; rejects non-edges and chords."""
    u, v = edge
    if not (0 <= u < n and 0 <= v < n) or u == v:
        raise InvalidParams(f"bad edge endpoints {{{u},{v}}} for {n} positions")
    canon = canonical_well_spread(n, k)
    t = (v - u) % n
    if set(canon.elements) & set(canon.rotate(t).elements):
        raise NotAnEdge(f"offset {t} rotations share a residue: {{{u},{v}}} is no edge")
    if t == 1:
        return u
    if t == n - 1:
        return v
    raise NotCycleEdge(f"{{{u},{v}}} joins rotations {t} apart, not consecutive ones")


def edge_deleted_coloring(n: int, k: int, edge: tuple[int, int]) -> FractionalColoring:
    """Star rotations plus one extra position, covering all of the graph minus
    one consecutive-rotation edge with total weight a/b."""
    _require_coprime(n, k, strict=False)
    p = _cycle_edge_base(n, k, edge)
    cp = critical_params(n, k)
    a1 = star_positions(n, k)
    members = frozenset(a1)
    s0 = _light_window_start(n, cp.a, cp.b, members)
    # the deficient window start is the unique position entering the star a
    # steps later; its predecessor is a star position
    if (s0 + cp.a) % n not in members or s0 in members or (s0 - 1) % n not in members:
        raise AssertionError(f"deficient window at {s0} lacks the boundary structure")
    delta = (p - (s0 - 1)) % n
    first = tuple(sorted({(u + delta) % n for u in a1} | {(s0 + delta) % n}))
    sets = [first]
    for j in range(1, cp.a):
        sets.append(tuple(sorted((u + delta - j) % n for u in a1)))
    fc = FractionalColoring(
        tuple(sets),
        (Fraction(1, cp.b),) * cp.a,
        excluded_edge=(p, (p + 1) % n),
    )
    if fc.value != Fraction(cp.a, cp.b):
        raise AssertionError(f"total weight {fc.value} != {cp.a}/{cp.b}")
    return _checked_coloring(n, k, fc)


def _window_labels(n: int, k: int, anchor: int) -> list[tuple[int, CyclicSubset]]:
    """Positions anchor, anchor-1, ..., anchor-a+1 with their reduced labels.

    Reading each position's set through the shifted deficient window of the
    anchor's own set yields b residues inside a window of length a; re-based
    to Z_a these are exactly the rotation labels of the critical graph.
    """
    cp = critical_params(n, k)
    canon = canonical_well_spread(n, k)
    anchor_set = frozenset(canon.rotate(anchor).elements)
    light = _light_window_start(n, cp.a, cp.b, anchor_set)
    beta = (light + 1) % n
    offset_of = {(beta + d) % n: d for d in range(cp.a)}
    out = []
    for i in range(cp.a):
        xi = (anchor - i) % n
        w = CyclicSubset(cp.a, (offset_of[r] for r in canon.rotate(xi) if r in offset_of))
        if len(w) != cp.b:
            raise AssertionError(f"window at {xi} caught {len(w)} residues, wanted {cp.b}")
        out.append((xi, w))
    return out


def _anchored_copy(n: int, k: int, anchor: int):
    """The critical graph plus the (position, target-id) pairs of its copy."""
    cp = critical_params(n, k)
    qab = build_q(cp.a, cp.b)
    index = {lab: i for i, lab in enumerate(qab.labels)}
    pairs = []
    for xi, w in _window_labels(n, k, anchor):
        t = index.get(w)
        if t is None:
            raise AssertionError(f"window label {w} is not a rotation on ({cp.a},{cp.b})")
        pairs.append((xi, t))
    if len({t for _, t in pairs}) != cp.a:
        raise AssertionError("window labels collide")
    return cp, qab, pairs


def _checked_map(m: VertexMap) -> VertexMap:
    bad = validate_map(m)
    if bad:
        raise AssertionError(f"constructed map invalid: {bad[:3]}")
    return m


def find_subgraph_qab(n: int, k: int) -> VertexMap:
    """Embed the critical rotation graph induced on a window of consecutive
    positions starting at position 0."""
    _require_coprime(n, k, strict=True)
    _, qab, pairs = _anchored_copy(n, k, 0)
    qnk = build_q(n, k)
    mapping = {t: xi for xi, t in pairs}
    return _checked_map(VertexMap(qab, qnk, mapping, MapKind.EMBEDDING))


def vertex_deleted_retraction(n: int, k: int, deleted: int) -> VertexMap:
    """Fold the graph minus one vertex onto the embedded critical copy
    anchored just below the deletion; positions map by index mod a."""
    _require_coprime(n, k, strict=True)
    if not (0 <= deleted < n):
        raise InvalidParams(f"vertex {deleted} out of range 0..{n - 1}")
    cp, qab, pairs = _anchored_copy(n, k, (deleted - 1) % n)
    qnk = build_q(n, k)
    targets = [t for _, t in pairs]
    mapping = {}
    for i in range(n - 1):
        pos = (deleted - 1 - i) % n
        mapping[pos] = targets[i % cp.a]
    section = {t: xi for xi, t in pairs}
    return _checked_map(
        VertexMap(qnk, qab, mapping, MapKind.HOMOMORPHISM,
                  excluded_vertex=deleted, section=section)
    )


def edge_deleted_retraction(n: int, k: int, edge: tuple[int, int]) -> VertexMap:
    """Fold the graph minus one consecutive-rotation edge onto the embedded
    critical copy anchored at the edge's lower endpoint."""
    _require_coprime(n, k, strict=True)
    p = _cycle_edge_base(n, k, edge)
    cp, qab, pairs = _anchored_copy(n, k, p)
    qnk = build_q(n, k)
    targets = [t for _, t in pairs]
    mapping = {}
    for i in range(n):
        mapping[(p - i) % n] = targets[i % cp.a]
    section = {t: xi for xi, t in pairs}
    return _checked_map(
        VertexMap(qnk, qab, mapping, MapKind.HOMOMORPHISM,
                  excluded_edge=(p, (p + 1) % n), section=section)
    )


def scaling_isomorphism(n: int, k: int, ell: int) -> VertexMap:
    """Rotation graphs on (n, k) and (ell*n, ell*k) are isomorphic: send each
    set to the union of its residue classes mod n inside Z_{ell*n}."""
    if not (1 <= k and 2 * k <= n):
        raise InvalidParams(f"need 1 <= k <= n/2, got n={n} k={k}")
    if ell < 2:
        raise InvalidParams(f"scale factor must be >= 2, got {ell}")
    src = build_q(n, k)
    tgt = build_q(ell * n, ell * k)
    index = {lab: i for i, lab in enumerate(tgt.labels)}
    mapping = {}
    for u, lab in enumerate(src.labels):
        big = CyclicSubset(ell * n, (x + j * n for x in lab for j in range(ell)))
        t = index.get(big)
        if t is None:
            raise AssertionError(f"blow-up of vertex {u} is not a target rotation")
        mapping[u] = t
    return _checked_map(VertexMap(src, tgt, mapping, MapKind.ISOMORPHISM))


def circular_isomorphism(n: int, k: int) -> VertexMap:
    """Position u of the rotation graph onto residue u*k of the circular
    complete graph; a bijection exactly because gcd(n, k) = 1."""
    _require_coprime(n, k, strict=False)
    src = build_q(n, k)
    tgt = build_circular(n, k)
    mapping = {u: (u * k) % n for u in range(n)}
    return _checked_map(VertexMap(src, tgt, mapping, MapKind.ISOMORPHISM))


@dataclass(frozen=True)
class NeighborEntry:
    """One non-neighbor: its vertex id, rotation offset, and overlap count."""

    vertex: int
    offset: int
    overlap: int


@dataclass(frozen=True)
class RightNeighborTable:
    """Non-neighbors of one vertex, grouped by their clockwise overlap count j.

    entries[j] lists the vertices whose aligning rotation passes j of their
    own residues, read on the arc (i, i+offset] from any shared residue i.
    """

    vertex: int
    entries: tuple[tuple[int, tuple[NeighborEntry, ...]], ...]

    def by_overlap(self, j: int) -> tuple[NeighborEntry, ...]:
        for jj, es in self.entries:
            if jj == j:
                return es
        return ()


def right_j_neighbors(q: LabeledGraph, x: int) -> RightNeighborTable:
    """Classify every non-neighbor of vertex x by its overlap count.

    For each non-neighbor y there is a unique rotation carrying x's set to
    y's; the count of y's residues on the half-open arc from a shared residue
    to its image does not depend on which shared residue is read.
    """
    labels = q.labels
    if q.family is not None and q.family.tag != "q":
        raise InvalidParams(f"right-neighbor tables need the rotation family, got {q.family.tag}")
    if not labels or not all(isinstance(l, CyclicSubset) for l in labels):
        raise InvalidParams("right-neighbor tables need rotation-labeled graphs")
    n = labels[0].modulus
    k = len(labels[0])
    if gcd(n, k) != 1:
        raise NotCoprime(f"need gcd(n,k)=1, got gcd({n},{k})={gcd(n, k)}")
    if not (0 <= x < q.vertex_count):
        raise InvalidParams(f"vertex {x} out of range 0..{q.vertex_count - 1}")
    xs = set(labels[x].elements)
    grouped: dict[int, list[NeighborEntry]] = {}
    found = 0
    for y in range(q.vertex_count):
        if y == x:
            continue
        ys = set(labels[y].elements)
        common = xs & ys
        if not common:
            continue
        offsets = [t for t in range(1, n) if labels[x].rotate(t) == labels[y]]
        if len(offsets) != 1:
            raise AssertionError(f"rotation {x} -> {y} not unique: {offsets}")
        t = offsets[0]
        counts = {
            sum(1 for d in range(1, t + 1) if (i + d) % n in ys) for i in common
        }
        if len(counts) != 1:
            raise AssertionError(f"overlap count at offset {t} depends on the residue: {counts}")
        j = counts.pop()
        grouped.setdefault(j, []).append(NeighborEntry(y, t, j))
        found += 1
    if found != 2 * (k - 1):
        raise AssertionError(f"{found} non-neighbors, expected {2 * (k - 1)}")
    entries = tuple(
        (j, tuple(sorted(grouped[j], key=lambda e: e.offset))) for j in sorted(grouped)
    )
    return RightNeighborTable(x, entries)
