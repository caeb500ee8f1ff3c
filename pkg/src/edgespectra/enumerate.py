"""Exhaustive generation of small graphs up to isomorphism.

Graphs on n vertices are grown from graphs on n - 1 vertices by adding a
vertex of minimum degree (every graph has one, so nothing is missed), and
duplicates are rejected by a canonical form computed with color refinement
plus individualization.  Twin vertices are never branched on twice, which
keeps complete, empty and complete multipartite graphs cheap.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Graph, structural_predicates
from .graph6 import to_graph6

MAX_N = 9


def _refine(adj: list[frozenset[int]], colors: list[int]) -> list[int]:
    """Equitable refinement; new color indices depend only on invariant data."""
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return new
        colors, ncolors = new, len(ranks)


def _individualize(colors: list[int], v: int) -> list[int]:
    keys = [(c, u != v) for u, c in enumerate(colors)]
    ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [ranks[k] for k in keys]


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """An isomorphism-complete invariant: (n, relabeled sorted edge list)."""
    adj = list(g.adjacency)
    n = g.n
    best: list[tuple[tuple[int, int], ...] | None] = [None]

    def twins(u: int, v: int) -> bool:
        return adj[u] - {v} == adj[v] - {u}

    def search(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            cert = tuple(sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in g.edges))
            if best[0] is None or cert > best[0]:
                best[0] = cert
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        tried: list[int] = []
        for v in range(n):
            if colors[v] != target or any(twins(v, u) for u in tried):
                continue
            tried.append(v)
            search(_individualize(colors, v))

    search([0] * n)
    return n, best[0] or ()


def canonical_graph(g: Graph) -> Graph:
    n, edges = canonical_form(g)
    return Graph(n, edges)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Every graph on ``n`` vertices up to isomorphism, in canonical labeling."""
    if n < 0 or n > MAX_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_N}, got {n}")
    if n == 0:
        return (Graph(0),)
    seen: dict[tuple, Graph] = {}
    new = n - 1
    for h in all_graphs(n - 1):
        degs = h.degrees()
        for k in range(0, n):
            for nbrs in combinations(range(new), k):
                s = set(nbrs)
                if any(degs[w] + (w in s) < k for w in range(new)):
                    continue
                g = Graph(n, h.edges + tuple((w, new) for w in nbrs))
                key = canonical_form(g)
                if key not in seen:
                    seen[key] = Graph(*key)
    return tuple(seen[k] for k in sorted(seen))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if structural_predicates(g).connected)


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """Free trees on ``n`` vertices, grown leaf by leaf."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1),)
    seen: dict[tuple, Graph] = {}
    for t in trees(n - 1):
        for v in range(n - 1):
            key = canonical_form(Graph(n, t.edges + ((v, n - 1),)))
            seen.setdefault(key, Graph(*key))
    return tuple(seen[k] for k in sorted(seen))


def iter_source(source: str, min_n: int, max_n: int) -> Iterator[Graph]:
    """Graphs for a sweep: ``connected``, ``all`` or ``trees``."""
    gen = {"connected": connected_graphs, "all": all_graphs, "trees": trees}.get(source)
    if gen is None:
        raise ValueError(f"unknown graph source {source!r}")
    for n in range(min_n, max_n + 1):
        yield from gen(n)


def graph6_key(g: Graph) -> str:
    return to_graph6(canonical_graph(g))
