"""Named graph families and the ``name[:args]`` descriptor grammar.

Descriptors accepted by :func:`parse_family`::

    path:N  cycle:N  complete:N  kpq:P,Q (alias complete_bipartite:P,Q)
    star:K (K leaves)  petersen  hypercube:D (alias cube:D)  pruefer:a,b,...
"""

from __future__ import annotations

import heapq
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError


class FamilyError(GraphError):
    pass


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(p: int, q: int) -> Graph:
    """Left part ``0..p-1``, right part ``p..p+q-1``."""
    if p < 1 or q < 1:
        raise FamilyError(f"complete bipartite needs p, q >= 1, got {p}, {q}")
    return Graph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)))


def star(k: int) -> Graph:
    """K_{1,k}: hub 0 with ``k`` leaves."""
    if k < 1:
        raise FamilyError("star needs at least one leaf")
    return complete_bipartite(1, k)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def hypercube(d: int) -> Graph:
    if d < 1:
        raise FamilyError("hypercube needs d >= 1")
    n = 1 << d
    return Graph(n, tuple((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)))


def tree_from_pruefer(seq: Sequence[int]) -> Graph:
    """Decode a Prüfer sequence over labels ``0..len(seq)+1``."""
    n = len(seq) + 2
    if any(not 0 <= a < n for a in seq):
        raise FamilyError(f"Prüfer entries must lie in 0..{n - 1}")
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, tuple(edges))


_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "kpq": 2,
    "complete_bipartite": 2,
    "star": 1,
    "petersen": 0,
    "hypercube": 1,
    "cube": 1,
}


def generate_family(name: str, *args: int) -> Graph:
    if name == "pruefer":
        return tree_from_pruefer(args)
    if name not in _ARITY:
        raise FamilyError(f"unknown family {name!r}")
    if len(args) != _ARITY[name]:
        raise FamilyError(f"{name} takes {_ARITY[name]} argument(s), got {len(args)}")
    builder = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "kpq": complete_bipartite,
        "complete_bipartite": complete_bipartite,
        "star": star,
        "petersen": petersen,
        "hypercube": hypercube,
        "cube": hypercube,
    }[name]
    return builder(*args)


def parse_family(descriptor: str) -> Graph:
    name, _, rest = descriptor.strip().partition(":")
    try:
        args = tuple(int(a) for a in rest.split(",")) if rest.strip() else ()
    except ValueError:
        raise FamilyError(f"bad family arguments in {descriptor!r}") from None
    return generate_family(name.strip().lower(), *args)
