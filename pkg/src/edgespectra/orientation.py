"""Edge orientations and the directed-edge index convention.

Index ``i < m`` is the chosen arc ``e_{i+1}``; index ``m + i`` is its
reverse.  Printed labels are 1-based (``e1``, ``e1^-1``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .graph import Bipartition, Graph, GraphError


class OrientationError(GraphError):
    pass


@dataclass(frozen=True)
class OrientedEdges:
    graph: Graph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        got = sorted((min(a), max(a)) for a in self.arcs)
        if got != list(self.graph.edges):
            raise OrientationError("arcs must enumerate the edge set exactly once")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def source(self, i: int) -> int:
        m = self.m
        return self.arcs[i][0] if i < m else self.arcs[i - m][1]

    def target(self, i: int) -> int:
        m = self.m
        return self.arcs[i][1] if i < m else self.arcs[i - m][0]

    def directed(self) -> list[tuple[int, int]]:
        """All ``2m`` directed edges in index order."""
        return list(self.arcs) + [(t, s) for s, t in self.arcs]

    def inverse(self, i: int) -> int:
        m = self.m
        return i + m if i < m else i - m

    def label(self, i: int) -> str:
        m = self.m
        return f"e{i + 1}" if i < m else f"e{i - m + 1}^-1"


def orient(
    g: Graph,
    strategy: str = "canonical",
    *,
    bipartition: Bipartition | None = None,
    seed: int | None = None,
    arcs: Sequence[tuple[int, int]] | None = None,
) -> OrientedEdges:
    """Choose a direction (and order) for every edge of ``g``.

    ``canonical``: ``u -> v`` with ``u < v``, edges in lexicographic order.
    ``bipartite``: every arc runs from ``bipartition.left`` to the right side,
    edges in lexicographic order.
    ``random``: directions and edge order drawn from ``random.Random(seed)``.
    ``arcs``: exactly the given arcs, in the given order.
    """
    if strategy == "canonical":
        return OrientedEdges(g, g.edges)
    if strategy == "bipartite":
        if bipartition is None or not bipartition.is_valid_for(g):
            raise OrientationError("bipartite orientation needs a valid bipartition of the graph")
        left = bipartition.left
        return OrientedEdges(g, tuple((u, v) if u in left else (v, u) for u, v in g.edges))
    if strategy == "random":
        if seed is None:
            raise OrientationError("random orientation requires an explicit seed")
        rng = random.Random(seed)
        order = list(g.edges)
        rng.shuffle(order)
        return OrientedEdges(g, tuple((v, u) if rng.random() < 0.5 else (u, v) for u, v in order))
    if strategy == "arcs":
        if arcs is None:
            raise OrientationError("explicit orientation requires arcs")
        return OrientedEdges(g, tuple((int(s), int(t)) for s, t in arcs))
    raise OrientationError(f"unknown orientation strategy {strategy!r}")


def parse_orientation(text: str) -> dict:
    """CLI form -> keyword arguments for :func:`orient` (minus the bipartition).

    Accepts ``canonical``, ``bipartite``, ``random:SEED`` and
    ``arcs:0>1,1>2,2>0``.
    """
    name, _, rest = text.partition(":")
    if name in ("canonical", "bipartite") and not rest:
        return {"strategy": name}
    if name == "random":
        try:
            return {"strategy": "random", "seed": int(rest)}
        except ValueError:
            raise OrientationError("random orientation needs an integer seed, e.g. random:7") from None
    if name == "arcs":
        try:
            pairs = [tuple(int(x) for x in a.split(">")) for a in rest.split(",")]
        except ValueError:
            raise OrientationError(f"bad arc list {rest!r}") from None
        if any(len(p) != 2 for p in pairs):
            raise OrientationError(f"bad arc list {rest!r}")
        return {"strategy": "arcs", "arcs": pairs}
    raise OrientationError(f"unknown orientation {text!r}")
