"""Shared test helper: enumerate all non-isomorphic trees as Graph values.

Every property we test (dimension, classification, the degree criterion)
is invariant under relabeling, so the non-isomorphic enumeration from
networkx covers "all trees" exactly.
"""

from __future__ import annotations

import networkx as nx

from bei.graphs import Graph


def all_trees(n: int) -> list[Graph]:
    """All trees with exactly n vertices, up to isomorphism, 1-labeled."""
    if n == 1:
        return [Graph(1, frozenset())]
    if n == 2:
        return [Graph(2, frozenset({(1, 2)}))]
    out = []
    for t in nx.nonisomorphic_trees(n):
        edges = frozenset((min(a, b) + 1, max(a, b) + 1) for a, b in t.edges())
        out.append(Graph(n, edges))
    return out


def all_trees_upto(n: int) -> list[Graph]:
    trees = []
    for k in range(1, n + 1):
        trees.extend(all_trees(k))
    return trees
