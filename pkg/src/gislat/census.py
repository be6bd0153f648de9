"""Enumeration of small graph families up to isomorphism.

Graphs are canonicalised by the least relabelled sorted edge multiset over
all vertex permutations, which is affordable at census sizes (n <= 6 or so).
Acyclic graphs are generated with vertices already in topological order, so
only edges from lower to higher ids ever appear.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations

from .graphs import Digraph


def canonical_form(n, edges):
    """Least (n, sorted relabelled edges) over all vertex permutations."""
    edges = list(edges)
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted((perm[s], perm[r]) for s, r in edges))
        if best is None or key < best:
            best = key
    return (n, best)


def _digraph(n, edges):
    return Digraph([str(i) for i in range(n)], edges)


def _dedupe(graphs):
    seen = set()
    out = []
    for n, edges in graphs:
        key = canonical_form(n, edges)
        if key not in seen:
            seen.add(key)
            out.append(_digraph(n, edges))
    return out


def simple_graphs(n, connected=False):
    """Simple graphs (acyclic, no parallel edges) on exactly n vertices,
    up to isomorphism."""
    slots = list(combinations(range(n), 2))
    found = []
    for pick in range(1 << len(slots)):
        edges = [slots[k] for k in range(len(slots)) if pick >> k & 1]
        g = _digraph(n, edges)
        if connected and not g.is_weakly_connected():
            continue
        found.append((n, edges))
    return _dedupe(found)


def connected_simple_graphs(max_n):
    """Connected simple graphs with 1..max_n vertices, up to isomorphism."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(simple_graphs(n, connected=True))
    return out


def acyclic_multigraphs(max_n, max_edges):
    """Acyclic multigraphs with at most max_n vertices and max_edges edges,
    up to isomorphism (isolated vertices included, parallel edges allowed)."""
    found = []
    for n in range(1, max_n + 1):
        slots = list(combinations(range(n), 2))
        for total in range(max_edges + 1):
            for combo in combinations_with_replacement(slots, total):
                found.append((n, list(combo)))
    return _dedupe(found)


def outdeg_le1_graphs(max_n):
    """Acyclic graphs with every out-degree at most one and at most max_n
    vertices, up to isomorphism."""
    found = []
    for n in range(1, max_n + 1):
        def extend(v, targets):
            if v == n:
                edges = [(u, t) for u, t in enumerate(targets) if t is not None]
                if _digraph(n, edges).is_acyclic():
                    found.append((n, edges))
                return
            for t in [None] + [u for u in range(n) if u != v]:
                extend(v + 1, targets + [t])
        extend(0, [])
    return _dedupe(found)
