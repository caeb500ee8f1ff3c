"""Edge adjacency matrix M, degree matrix D, edge Laplacian N = D - M."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .linalg import IntMatrix, cofactor
from .orientation import OrientedEdges


class ConstructionError(RuntimeError):
    """Degree formula and row sums of M disagree; indicates a bug."""


def edge_adjacency(oe: OrientedEdges) -> IntMatrix:
    """M[i][j] = 1 iff t(e_i) = s(e_j) and s(e_i) != t(e_j)."""
    arcs = oe.directed()
    out_of: dict[int, list[int]] = {}
    for j, (s, _) in enumerate(arcs):
        out_of.setdefault(s, []).append(j)
    size = len(arcs)
    rows = []
    for s, t in arcs:
        row = [0] * size
        for j in out_of.get(t, ()):
            if arcs[j][1] != s:
                row[j] = 1
        rows.append(row)
    return IntMatrix(rows, ncols=size)


@dataclass(frozen=True)
class EdgeMatrices:
    oriented: OrientedEdges
    M: IntMatrix
    D: IntMatrix
    N: IntMatrix
    signless: IntMatrix

    @property
    def m(self) -> int:
        return self.oriented.m


def assemble(oe: OrientedEdges) -> EdgeMatrices:
    M = edge_adjacency(oe)
    g = oe.graph
    d = [g.degree(oe.target(i)) - 1 for i in range(2 * oe.m)]
    if d != M.row_sums():
        raise ConstructionError(f"degree formula {d} disagrees with row sums {M.row_sums()}")
    D = IntMatrix.diagonal(d)
    return EdgeMatrices(oe, M, D, D - M, D + M)


@dataclass(frozen=True)
class BlockDecomposition:
    P: IntMatrix
    Q: IntMatrix
    R: IntMatrix
    S: IntMatrix
    M11: IntMatrix
    M12: IntMatrix
    M21: IntMatrix
    M22: IntMatrix
    D1: IntMatrix
    D2: IntMatrix


def _quadrants(a: IntMatrix, m: int) -> tuple[IntMatrix, IntMatrix, IntMatrix, IntMatrix]:
    lo, hi = range(m), range(m, 2 * m)
    return a.submatrix(lo, lo), a.submatrix(lo, hi), a.submatrix(hi, lo), a.submatrix(hi, hi)


def blocks(em: EdgeMatrices) -> BlockDecomposition:
    m = em.m
    P, Q, R, S = _quadrants(em.N, m)
    M11, M12, M21, M22 = _quadrants(em.M, m)
    D1, _, _, D2 = _quadrants(em.D, m)
    return BlockDecomposition(P, Q, R, S, M11, M12, M21, M22, D1, D2)


def block_sum(bd: BlockDecomposition) -> tuple[IntMatrix, IntMatrix]:
    """(P + Q + R + S, M11 + M12 + M21 + M22)."""
    return bd.P + bd.Q + bd.R + bd.S, bd.M11 + bd.M12 + bd.M21 + bd.M22


def swap_matrix(m: int) -> IntMatrix:
    """J = [[0, I], [I, 0]] of order 2m."""
    I, Z = IntMatrix.identity(m), IntMatrix.zeros(m)
    return IntMatrix.block([[Z, I], [I, Z]])


def digraph_strongly_connected(a: IntMatrix) -> bool:
    """Strong connectivity of the digraph with an arc i -> j wherever a[i][j] != 0.

    An empty matrix is treated as not strongly connected.
    """
    n = a.nrows
    if n == 0:
        return False
    fwd = [[j for j, v in enumerate(r) if v] for r in a.rows]
    back: list[list[int]] = [[] for _ in range(n)]
    for i, outs in enumerate(fwd):
        for j in outs:
            back[j].append(i)

    def reaches_all(adj: list[list[int]]) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    return reaches_all(fwd) and reaches_all(back)


@dataclass(frozen=True)
class SwapConjugation:
    p_eq_s_transpose: bool
    n_symmetry: bool
    col_sums_zero: bool

    @property
    def all(self) -> bool:
        return self.p_eq_s_transpose and self.n_symmetry and self.col_sums_zero


def swap_conjugation_check(em: EdgeMatrices, bd: BlockDecomposition | None = None) -> SwapConjugation:
    bd = bd or blocks(em)
    J = swap_matrix(em.m)
    N = em.N
    return SwapConjugation(
        p_eq_s_transpose=bd.P == bd.S.T,
        n_symmetry=N.T == J @ N @ J,
        col_sums_zero=not any(N.col_sums()),
    )


def cofactor_pairs(order: int, full_limit: int = 16, sample: int = 24) -> list[tuple[int, int]]:
    """Index pairs for cofactor comparison.

    Every pair when ``order <= full_limit``, else a fixed-seed sample that
    always includes the corners.
    """
    if order <= full_limit:
        return [(i, j) for i in range(order) for j in range(order)]
    rng = random.Random(order)
    picks = {(0, 0), (0, order - 1), (order - 1, 0), (order - 1, order - 1)}
    while len(picks) < sample:
        picks.add((rng.randrange(order), rng.randrange(order)))
    return sorted(picks)


def cofactors_constant(a: IntMatrix, pairs: list[tuple[int, int]]) -> tuple[bool, int | None]:
    """Whether every listed cofactor of ``a`` has the same value; returns the value."""
    values = {cofactor(a, i, j) for i, j in pairs}
    return len(values) <= 1, (next(iter(values)) if len(values) == 1 else None)


def cycle_traversal_permutation(oe: OrientedEdges) -> list[int]:
    """Relabel the directed edges of a cycle graph in traversal order.

    Forward slots follow the walk 0 -> (smaller neighbor of 0) -> ... -> 0,
    the back half lists the reversed walk edges in the same order.  With
    ``perm`` returned, ``N.permuted(perm)`` is block diagonal with two
    circulant blocks.
    """
    g = oe.graph
    if g.n < 3 or g.m != g.n or any(d != 2 for d in g.degrees()) or len(g.components()) != 1:
        raise ValueError("graph is not a cycle")
    index = {a: i for i, a in enumerate(oe.directed())}
    walk = [0, min(g.adjacency[0])]
    while len(walk) < g.n:
        prev, cur = walk[-2], walk[-1]
        walk.append(next(v for v in g.adjacency[cur] if v != prev))
    walk.append(0)
    forward = [index[(u, v)] for u, v in zip(walk, walk[1:])]
    return forward + [oe.inverse(i) for i in forward]


def format_matrix(a: IntMatrix, oe: OrientedEdges | None = None) -> str:
    """Aligned table; with an orientation, rows and columns get e_i labels."""
    n = a.nrows
    labels = [oe.label(i) for i in range(n)] if oe is not None else [str(i + 1) for i in range(n)]
    width = max([len(s) for s in labels] + [len(str(v)) for r in a.rows for v in r] + [1])
    half = n // 2 if oe is not None else None
    head = " " * width + " |"
    for j, lab in enumerate(labels):
        if half and j == half:
            head += " |"
        head += " " + lab.rjust(width)
    rule = "-" * len(head)
    lines = [head, rule]
    for i, r in enumerate(a.rows):
        if half and i == half:
            lines.append(rule)
        line = labels[i].rjust(width) + " |"
        for j, v in enumerate(r):
            if half and j == half:
                line += " |"
            line += " " + str(v).rjust(width)
        lines.append(line)
    return "\n".join(lines)
