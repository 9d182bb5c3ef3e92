"""Graph families over cyclic ground sets, plus vertex maps between them.

Vertices are dense 0-based ids.  Adjacency is kept as one Python-int bitmask
per vertex, which the exact solvers rely on.  Vertex labels carry identity:
k-subsets of Z_n for the set-valued families, plain residues for circular
complete graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb, gcd
from typing import Iterator

from .cyclic import CyclicSubset, canonical_well_spread, is_r_separated
from .errors import InvalidParams, NotAnEdge, ResourceCap

DEFAULT_VERTEX_CAP = 10_000


@dataclass(frozen=True)
class FamilyParams:
    tag: str  # kneser | sg | q | circular | interlacing
    n: int
    k: int


@dataclass(frozen=True)
class LabeledGraph:
    labels: tuple
    adj: tuple[int, ...]
    family: FamilyParams | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.adj[v]
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m ^= b

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.vertex_count):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2


def _graph_from_edges(labels: tuple, edge_pairs, family: FamilyParams | None) -> LabeledGraph:
    adj = [0] * len(labels)
    for u, v in edge_pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return LabeledGraph(labels, tuple(adj), family)


def _check_cap(count: int, vertex_cap: int, what: str) -> None:
    if count > vertex_cap:
        raise ResourceCap(f"{what} would have {count} vertices, cap is {vertex_cap}")


def _disjointness_edges(labels: tuple[CyclicSubset, ...]):
    sets = [frozenset(l.elements) for l in labels]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not (sets[i] & sets[j]):
                yield i, j


def build_kneser(n: int, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> LabeledGraph:
    """All k-subsets of Z_n in lex order; edges join disjoint pairs."""
    if not (1 <= k and 2 * k <= n):
        raise InvalidParams(f"need 1 <= k <= n/2, got n={n} k={k}")
    _check_cap(comb(n, k), vertex_cap, f"kneser({n},{k})")
    labels = tuple(CyclicSubset(n, c) for c in combinations(range(n), k))
    return _graph_from_edges(labels, _disjointness_edges(labels), FamilyParams("kneser", n, k))


def build_schrijver(n: int, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> LabeledGraph:
    """The 2-separated k-subsets of Z_n in lex order; edges join disjoint pairs."""
    if not (1 <= k and 2 * k <= n):
        raise InvalidParams(f"need 1 <= k <= n/2, got n={n} k={k}")
    _check_cap(comb(n, k), vertex_cap, f"schrijver({n},{k}) candidate pool")
    labels = tuple(
        CyclicSubset(n, c)
        for c in combinations(range(n), k)
        if is_r_separated(CyclicSubset(n, c), 2)
    )
    return _graph_from_edges(labels, _disjointness_edges(labels), FamilyParams("sg", n, k))


def build_q(n: int, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> LabeledGraph:
    """Rotations of the canonical well-spread k-subset, in base-cycle order.

    Vertex u carries rotate(canonical, u); there are n/gcd(n,k) distinct
    rotations, and consecutive vertices differ by a +1 rotation.
    """
    if not (1 <= k and 2 * k <= n):
        raise InvalidParams(f"need 1 <= k <= n/2, got n={n} k={k}")
    ell = gcd(n, k)
    n2 = n // ell
    _check_cap(n2, vertex_cap, f"q({n},{k})")
    canon = canonical_well_spread(n, k)
    labels = tuple(canon.rotate(u) for u in range(n2))
    if len(set(labels)) != n2:
        raise AssertionError(f"rotations of {canon} not distinct over {n2} steps")
    if labels[-1].rotate(1) != labels[0]:
        raise AssertionError("base-cycle order broken: final rotation misses the start")
    return _graph_from_edges(labels, _disjointness_edges(labels), FamilyParams("q", n, k))


def build_circular(n: int, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> LabeledGraph:
    """Circular complete graph: residues 0..n-1, edges where k <= |i-j| <= n-k."""
    if not (1 <= k and 2 * k <= n):
        raise InvalidParams(f"need 1 <= k <= n/2, got n={n} k={k}")
    _check_cap(n, vertex_cap, f"circular({n},{k})")
    labels = tuple(range(n))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if k <= j - i <= n - k:
                edges.append((i, j))
    return _graph_from_edges(labels, edges, FamilyParams("circular", n, k))


def is_interlacing_edge(x: CyclicSubset, y: CyclicSubset) -> bool:
    """True when x and y are disjoint, equal-sized, and alternate around Z_n."""
    if x.modulus != y.modulus:
        raise InvalidParams(f"moduli differ: {x.modulus} vs {y.modulus}")
    if len(x) != len(y) or len(x) == 0:
        return False
    xs, ys = set(x.elements), set(y.elements)
    if xs & ys:
        return False
    owners = []
    for r in range(x.modulus):
        if r in xs:
            owners.append(0)
        elif r in ys:
            owners.append(1)
    return all(owners[i] != owners[(i + 1) % len(owners)] for i in range(len(owners)))


def build_interlacing(n: int, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> LabeledGraph:
    """Same vertices as the 2-separated family; edges join interlacing pairs."""
    sg = build_schrijver(n, k, vertex_cap)
    labels = sg.labels
    edges = [
        (i, j)
        for i in range(len(labels))
        for j in range(i + 1, len(labels))
        if is_interlacing_edge(labels[i], labels[j])
    ]
    return _graph_from_edges(labels, edges, FamilyParams("interlacing", n, k))


def natural_representation(q: LabeledGraph) -> tuple[int, ...]:
    """Base-cycle vertex order of a rotation-family graph (identity by construction)."""
    if q.family is None or q.family.tag != "q":
        raise InvalidParams("natural representation is defined for the rotation family")
    return tuple(range(q.vertex_count))


def is_cycle_edge(q: LabeledGraph, u: int, v: int) -> bool:
    """True when edge {u, v} joins labels that differ by a single rotation."""
    if not q.has_edge(u, v):
        raise NotAnEdge(f"{{{u},{v}}} is not an edge")
    lu, lv = q.labels[u], q.labels[v]
    return lu.rotate(1) == lv or lv.rotate(1) == lu


def delete_vertex(g: LabeledGraph, v: int) -> LabeledGraph:
    """Induced subgraph on the remaining vertices, ids compacted."""
    V = g.vertex_count
    if not (0 <= v < V):
        raise InvalidParams(f"vertex {v} out of range 0..{V - 1}")
    keep = [u for u in range(V) if u != v]
    remap = {u: i for i, u in enumerate(keep)}
    labels = tuple(g.labels[u] for u in keep)
    edges = [(remap[a], remap[b]) for a, b in g.edges() if a != v and b != v]
    return _graph_from_edges(labels, edges, None)


def delete_edge(g: LabeledGraph, u: int, v: int) -> LabeledGraph:
    """Same vertex set with one edge removed."""
    if not g.has_edge(u, v):
        raise NotAnEdge(f"{{{u},{v}}} is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return LabeledGraph(g.labels, tuple(adj), None)


class MapKind(Enum):
    HOMOMORPHISM = "homomorphism"
    EMBEDDING = "embedding"
    ISOMORPHISM = "isomorphism"


@dataclass
class VertexMap:
    """A vertex mapping between two graphs with a claimed structural kind.

    The source may carry one exclusion (a deleted vertex or edge), in which
    case the mapping is over the source minus that exclusion.  A map that
    fixes an embedded copy pointwise may carry a section: target id ->
    source id with mapping[section[t]] == t; present sections are checked.
    """

    source: LabeledGraph
    target: LabeledGraph
    mapping: dict[int, int]
    kind: MapKind
    excluded_vertex: int | None = None
    excluded_edge: tuple[int, int] | None = None
    section: dict[int, int] | None = None


def validate_map(m: VertexMap) -> list[str]:
    """Check m against its claimed kind; return human-readable violations."""
    out: list[str] = []
    src, tgt = m.source, m.target
    sv = src.vertex_count
    excluded_v = m.excluded_vertex
    excl_edge = None
    if m.excluded_edge is not None:
        a, b = m.excluded_edge
        excl_edge = (min(a, b), max(a, b))
    domain = [u for u in range(sv) if u != excluded_v]
    for u in domain:
        if u not in m.mapping:
            out.append(f"vertex {u} unmapped")
        elif not (0 <= m.mapping[u] < tgt.vertex_count):
            out.append(f"image of {u} out of range: {m.mapping[u]}")
    if out:
        return out
    for u, v in src.edges():
        if excluded_v is not None and excluded_v in (u, v):
            continue
        if excl_edge == (u, v):
            continue
        fu, fv = m.mapping[u], m.mapping[v]
        if fu == fv or not tgt.has_edge(fu, fv):
            out.append(f"edge {{{u},{v}}} maps to non-edge {{{fu},{fv}}}")
    if m.kind in (MapKind.EMBEDDING, MapKind.ISOMORPHISM):
        images = [m.mapping[u] for u in domain]
        if len(set(images)) != len(images):
            out.append("mapping not injective")
        else:
            for i, u in enumerate(domain):
                for v in domain[i + 1:]:
                    if excluded_v is not None and excluded_v in (u, v):
                        continue
                    src_adj = src.has_edge(u, v) and excl_edge != (min(u, v), max(u, v))
                    if not src_adj and tgt.has_edge(m.mapping[u], m.mapping[v]):
                        out.append(f"non-edge {{{u},{v}}} maps to edge")
    if m.kind is MapKind.ISOMORPHISM:
        if len(domain) != tgt.vertex_count:
            out.append(f"sizes differ: {len(domain)} vs {tgt.vertex_count}")
    if m.section is not None:
        for t in range(tgt.vertex_count):
            s = m.section.get(t)
            if s is None:
                out.append(f"target {t} has no section vertex")
            elif m.mapping.get(s) != t:
                out.append(f"section vertex {s} not fixed onto {t}")
    return out


def embed_circular_in_kneser(n: int, k: int,
                             vertex_cap: int = DEFAULT_VERTEX_CAP) -> VertexMap:
    """Embed K_{n'/k'} (reduced by g = gcd(n,k)) into kneser(n, k).

    The ground set splits into g cycles of length n' = n/g; circular vertex h
    maps to the k-set taking the window h..h+k'-1 on every cycle.
    """
    if not (1 <= k and 2 * k <= n):
        raise InvalidParams(f"need 1 <= k <= n/2, got n={n} k={k}")
    g = gcd(n, k)
    n2, k2 = n // g, k // g
    kg = build_kneser(n, k, vertex_cap)
    circ = build_circular(n2, k2, vertex_cap)
    index = {lab: i for i, lab in enumerate(kg.labels)}
    mapping = {}
    for h in range(n2):
        elems = [c * n2 + ((h + j) % n2) for c in range(g) for j in range(k2)]
        mapping[h] = index[CyclicSubset(n, elems)]
    return VertexMap(circ, kg, mapping, MapKind.EMBEDDING)
