"""Shared helpers for the test suite."""

from __future__ import annotations

from wellspread import LabeledGraph


def mk(n: int, edges) -> LabeledGraph:
    """Ad-hoc graph on vertex ids 0..n-1 with integer labels."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return LabeledGraph(labels=tuple(range(n)), adj=tuple(adj))


def cycle(n: int) -> LabeledGraph:
    return mk(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> LabeledGraph:
    return mk(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
