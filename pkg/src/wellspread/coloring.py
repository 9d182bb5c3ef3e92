"""Exact chromatic numbers by branch-and-bound over color-domain bitmasks.

Decision search per color count t: greedy-clique precoloring, forward
checking on per-vertex domain masks, most-constrained-vertex selection, and
first-fresh-color symmetry breaking.  Refutations are exhaustive searches, so
both directions of the answer are exact.
"""
from __future__ import annotations

from .errors import ResourceCap
from .graphs import LabeledGraph
from .independence import iter_bits

DEFAULT_NODE_BUDGET = 100_000_000


def greedy_clique(g: LabeledGraph) -> list[int]:
    """A maximal clique grown from the max-degree vertex (chromatic lower bound)."""
    V = g.vertex_count
    if V == 0:
        return []
    adj = g.adj
    start = max(range(V), key=lambda v: adj[v].bit_count())
    clique = [start]
    cand = adj[start]
    while cand:
        best, bestd = -1, -1
        for v in iter_bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > bestd:
                bestd, best = d, v
        clique.append(best)
        cand &= adj[best]
    return clique


def greedy_coloring(g: LabeledGraph) -> list[int]:
    """DSATUR greedy proper coloring (upper bound witness)."""
    V = g.vertex_count
    adj = g.adj
    colors = [-1] * V
    used_next_to = [0] * V  # bitmask of neighbor colors
    for _ in range(V):
        best, key = -1, (-1, -1)
        for v in range(V):
            if colors[v] < 0:
                sat = used_next_to[v].bit_count()
                deg = adj[v].bit_count()
                if (sat, deg) > key:
                    key, best = (sat, deg), v
        c = 0
        while (used_next_to[best] >> c) & 1:
            c += 1
        colors[best] = c
        for u in iter_bits(adj[best]):
            used_next_to[u] |= 1 << c
    return colors


def find_proper_coloring(g: LabeledGraph, t: int,
                         node_budget: int = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """Exact decision: a proper t-coloring, or None after exhaustive refutation."""
    V = g.vertex_count
    if t < 0:
        raise ValueError("negative color count")
    if V == 0:
        return []
    if t == 0:
        return None
    adj = g.adj
    full_t = (1 << t) - 1
    domains = [full_t] * V
    colors = [-1] * V
    clique = greedy_clique(g)
    if len(clique) > t:
        return None
    nodes = 0

    def assign(v: int, c: int, trail: list[tuple[int, int]]) -> bool:
        colors[v] = c
        bit = 1 << c
        for u in iter_bits(adj[v]):
            if colors[u] < 0 and domains[u] & bit:
                trail.append((u, domains[u]))
                domains[u] &= ~bit
                if domains[u] == 0:
                    return False
        return True

    def undo(v: int, trail: list[tuple[int, int]]) -> None:
        colors[v] = -1
        for u, d in reversed(trail):
            domains[u] = d

    # precolor the clique
    pre_trail: list[tuple[int, int]] = []
    for i, v in enumerate(clique):
        domains[v] = 1 << i
        if not assign(v, i, pre_trail):
            return None

    max_used = len(clique) - 1

    def search(remaining: int) -> bool:
        nonlocal nodes, max_used
        if remaining == 0:
            return True
        nodes += 1
        if nodes > node_budget:
            raise ResourceCap(f"coloring search exceeded {node_budget} nodes")
        # most-constrained vertex: min domain, then max saturation degree
        best, key = -1, None
        for v in range(V):
            if colors[v] < 0:
                size = domains[v].bit_count()
                if size == 1:
                    best = v
                    break
                sat = sum(1 for u in iter_bits(adj[v]) if colors[u] >= 0)
                kk = (size, -sat, -adj[v].bit_count())
                if key is None or kk < key:
                    key, best = kk, v
        v = best
        saved_max = max_used
        tried_fresh = False
        for c in iter_bits(domains[v]):
            if c > max_used + 1:
                break  # all fresh colors are interchangeable
            if c == max_used + 1:
                if tried_fresh:
                    break
                tried_fresh = True
            trail: list[tuple[int, int]] = []
            if c > max_used:
                max_used = c
            if assign(v, c, trail) and search(remaining - 1):
                return True
            undo(v, trail)
            max_used = saved_max
        return False

    if search(V - len(clique)):
        return colors[:]
    return None


def is_t_colorable(g: LabeledGraph, t: int,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Exact t-colorability via class branching with residual memoization.

    The first remaining vertex always lies in some color class that is a
    maximal independent set of the residual graph, so branching over those
    sets is exhaustive.  Much faster than vertex-at-a-time search when the
    maximal-set families stay small; can blow up when they do not.
    """
    V = g.vertex_count
    if t < 0:
        raise ValueError("negative color count")
    if V == 0:
        return True
    if t == 0:
        return False
    adj = g.adj
    if all(m == 0 for m in adj):
        return True
    if len(greedy_clique(g)) > t:
        return False
    if max(greedy_coloring(g)) + 1 <= t:
        return True
    full = (1 << V) - 1
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(V)]
    refuted: dict[int, int] = {}
    nodes = 0

    def classes_containing(v: int, mask: int) -> list[int]:
        nonlocal nodes
        out: list[int] = []

        def expand(r: int, p: int, x: int) -> None:
            nonlocal nodes
            nodes += 1
            if nodes > node_budget:
                raise ResourceCap(f"colorability search exceeded {node_budget} nodes")
            if p == 0 and x == 0:
                out.append(r)
                return
            best_u, best_cnt = -1, -1
            for u in iter_bits(p | x):
                c = (p & nonadj[u]).bit_count()
                if c > best_cnt:
                    best_cnt, best_u = c, u
            cand = p & ~nonadj[best_u]
            for w in iter_bits(cand):
                bw = 1 << w
                expand(r | bw, p & nonadj[w], x & nonadj[w])
                p &= ~bw
                x |= bw

        expand(1 << v, mask & nonadj[v], 0)
        return out

    def rec(mask: int, colors_left: int) -> bool:
        nonlocal nodes
        if mask == 0:
            return True
        if colors_left == 0:
            return False
        if refuted.get(mask, 0) >= colors_left:
            return False
        nodes += 1
        if nodes > node_budget:
            raise ResourceCap(f"colorability search exceeded {node_budget} nodes")
        v = (mask & -mask).bit_length() - 1
        sols = classes_containing(v, mask)
        sols.sort(key=lambda m: -m.bit_count())
        for cls in sols:
            if rec(mask & ~cls, colors_left - 1):
                return True
        if colors_left > refuted.get(mask, 0):
            refuted[mask] = colors_left
        return False

    return rec(full, t)


# class branching explodes past roughly this many vertices on the disjointness
# families (maximal-set counts grow combinatorially); the vertex-at-a-time
# search degrades more gracefully there
_CLASS_SEARCH_MAX_V = 100


def chromatic_number(g: LabeledGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact chromatic number: descend from the DSATUR bound, refute below."""
    V = g.vertex_count
    if V == 0:
        return 0
    if g.edge_count() == 0:
        return 1
    ub_colors = greedy_coloring(g)
    ub = max(ub_colors) + 1
    lb = max(2, len(greedy_clique(g)))
    chi = ub

    def colorable(t: int) -> bool:
        if V <= _CLASS_SEARCH_MAX_V:
            return is_t_colorable(g, t, node_budget)
        return find_proper_coloring(g, t, node_budget) is not None

    for t in range(ub - 1, lb - 1, -1):
        if not colorable(t):
            return chi
        chi = t
    return chi
