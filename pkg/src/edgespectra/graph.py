"""Simple undirected graphs and the structural operations the checkers need."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    Edges are stored as ``(u, v)`` with ``u < v`` in lexicographic order.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise GraphError(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in sorted(self.adjacency[u]):
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def adjacency_matrix(self):
        from .linalg import IntMatrix

        return IntMatrix(
            (tuple(int(j in self.adjacency[i]) for j in range(self.n)) for i in range(self.n)),
            ncols=self.n,
        )

    def laplacian_matrix(self):
        from .linalg import IntMatrix

        deg = self.degrees()
        return IntMatrix.diagonal(deg) - self.adjacency_matrix()


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]

    def is_valid_for(self, g: Graph) -> bool:
        if self.left & self.right or (self.left | self.right) != frozenset(range(g.n)):
            return False
        return all((u in self.left) != (v in self.left) for u, v in g.edges)

    def same_up_to_swap(self, other: Bipartition, g: Graph) -> bool:
        """Equal after independently swapping sides within each component."""
        for comp in g.components():
            c = frozenset(comp)
            mine = (self.left & c, self.right & c)
            theirs = (other.left & c, other.right & c)
            if mine != theirs and mine != theirs[::-1]:
                return False
        return True


_HEADER = re.compile(r"^n\s+(\d+)$")
_EDGE = re.compile(r"^(\d+)\s+(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional ``n <count>`` header.

    Blank lines and lines starting with ``#`` are ignored.  Without a header
    the vertex count is one more than the largest label.
    """
    declared: int | None = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if m := _HEADER.match(line):
            if declared is not None or pairs:
                raise GraphError(f"line {lineno}: header must come first and only once")
            declared = int(m.group(1))
            continue
        m = _EDGE.match(line)
        if m is None:
            raise GraphError(f"line {lineno}: malformed edge line {raw!r}")
        u, v = int(m.group(1)), int(m.group(2))
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key}")
        if declared is not None and max(u, v) >= declared:
            raise GraphError(f"line {lineno}: endpoint {max(u, v)} >= declared n={declared}")
        seen.add(key)
        pairs.append(key)
    n = declared if declared is not None else (1 + max((v for _, v in pairs), default=-1))
    return Graph(n, tuple(pairs))


def format_edge_list(g: Graph) -> str:
    return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def is_bipartite_bfs(g: Graph) -> Bipartition | None:
    """Two-coloring by breadth-first layering, or None on an odd cycle.

    Each component's smallest vertex goes to the left side.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return Bipartition(
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )


@dataclass(frozen=True)
class Structure:
    connected: bool
    is_tree: bool
    is_forest: bool
    is_cycle_graph: bool
    has_pendant: bool
    regular_degree: int | None
    degree_sequence: tuple[int, ...]

    @property
    def min_degree(self) -> int:
        return min(self.degree_sequence, default=0)


def structural_predicates(g: Graph) -> Structure:
    degs = g.degrees()
    comps = g.components()
    connected = len(comps) == 1
    is_forest = g.m == g.n - len(comps)
    return Structure(
        connected=connected,
        is_tree=connected and is_forest,
        is_forest=is_forest,
        is_cycle_graph=connected and g.n >= 3 and all(d == 2 for d in degs),
        has_pendant=any(d == 1 for d in degs),
        regular_degree=degs[0] if degs and all(d == degs[0] for d in degs) else None,
        degree_sequence=degs,
    )


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in canonical order."""
    index = {e: i for i, e in enumerate(g.edges)}
    out = []
    for v in range(g.n):
        incident = sorted(index[(min(v, w), max(v, w))] for w in g.adjacency[v])
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                out.append((incident[a], incident[b]))
    return Graph(g.m, tuple(out))


def kronecker_double_cover(g: Graph) -> Graph:
    """``g x K2``: vertex ``(v, layer)`` is labeled ``layer * n + v``."""
    n = g.n
    out = []
    for u, v in g.edges:
        out.append((u, n + v))
        out.append((v, n + u))
    return Graph(2 * n, tuple(out))


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges: list[tuple[int, int]] = []
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, tuple(edges))


def from_edges(edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
    edges = tuple(edges)
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)
