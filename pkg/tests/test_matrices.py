import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from edgespectra.enumerate import all_graphs, connected_graphs
from edgespectra.families import complete, complete_bipartite, cycle, path, petersen, star
from edgespectra.graph import Graph, is_bipartite_bfs, structural_predicates
from edgespectra.linalg import IntMatrix, charpoly
from edgespectra.matrices import (
    assemble,
    block_sum,
    blocks,
    cycle_traversal_permutation,
    digraph_strongly_connected,
    edge_adjacency,
    format_matrix,
    swap_conjugation_check,
    swap_matrix,
)
from edgespectra.orientation import orient

CIRCULANT = [[1, -1, 0], [0, 1, -1], [-1, 0, 1]]


def definition_M(arcs):
    """All 2m x 2m pairs tested literally against t(e_i) = s(e_j), s(e_i) != t(e_j)."""
    full = list(arcs) + [(t, s) for s, t in arcs]
    return [[int(a[1] == b[0] and a[0] != b[1]) for b in full] for a in full]


def test_k2_is_zero():
    assert edge_adjacency(orient(path(2))) == IntMatrix.zeros(2)
    em = assemble(orient(path(2)))
    assert em.N == IntMatrix.zeros(2)


def test_c3_is_two_directed_triangles():
    M = edge_adjacency(orient(cycle(3)))
    assert M.row_sums() == [1] * 6 and M.col_sums() == [1] * 6
    assert M != IntMatrix.identity(6)
    assert M @ M @ M == IntMatrix.identity(6)
    assert not digraph_strongly_connected(M)


def test_p3_has_exactly_two_feeds():
    oe = orient(path(3), "arcs", arcs=[(0, 1), (1, 2)])
    M = edge_adjacency(oe)
    ones = [(i, j) for i in range(4) for j in range(4) if M[i, j]]
    # e1 -> e2 and e2^-1 -> e1^-1
    assert ones == [(0, 1), (3, 2)]
    assert [list(r) for r in M.rows] == definition_M(oe.arcs)


@given(graphs(), st.integers(min_value=0, max_value=10**6))
def test_edge_adjacency_matches_definition(g, seed):
    oe = orient(g, "random", seed=seed)
    assert [list(r) for r in edge_adjacency(oe).rows] == definition_M(oe.arcs)


def test_triangle_literal_orientation_is_block_diagonal():
    oe = orient(cycle(3), "arcs", arcs=[(0, 1), (1, 2), (2, 0)])
    N = assemble(oe).N
    Z = [[0] * 3 for _ in range(3)]
    expected = [a + b for a, b in zip(CIRCULANT, Z)] + [a + b for a, b in zip(Z, [[1, 0, -1], [-1, 1, 0], [0, -1, 1]])]
    assert [list(r) for r in N.rows] == expected


def test_star_degrees():
    # canonical arcs leave the hub 0, so forward arcs end at leaves
    assert assemble(orient(star(3))).D.diag() == [0, 0, 0, 2, 2, 2]
    hub_last = Graph(4, ((0, 3), (1, 3), (2, 3)))
    assert assemble(orient(hub_last)).D.diag() == [2, 2, 2, 0, 0, 0]


def test_blocks_examples():
    bd = blocks(assemble(orient(cycle(3), "arcs", arcs=[(0, 1), (1, 2), (2, 0)])))
    assert bd.Q.is_zero() and bd.R.is_zero()
    assert bd.P == IntMatrix(CIRCULANT)
    k23 = complete_bipartite(2, 3)
    bd = blocks(assemble(orient(k23, "bipartite", bipartition=is_bipartite_bfs(k23))))
    assert bd.M11.is_zero() and bd.M22.is_zero()
    assert bd.Q == -bd.M12 and bd.R == -bd.M21


def test_block_sum_examples():
    c3 = cycle(3)
    n_sum, m_sum = block_sum(blocks(assemble(orient(c3))))
    assert m_sum == c3.adjacency_matrix()
    n_sum, _ = block_sum(blocks(assemble(orient(path(3)))))
    assert n_sum == IntMatrix([[1, -1], [-1, 1]])
    assert block_sum(blocks(assemble(orient(path(2))))) == (IntMatrix.zeros(1), IntMatrix.zeros(1))


def test_strongly_connected_examples():
    assert not digraph_strongly_connected(edge_adjacency(orient(cycle(3))))
    assert digraph_strongly_connected(edge_adjacency(orient(complete(4))))
    assert not digraph_strongly_connected(edge_adjacency(orient(path(3))))
    assert not digraph_strongly_connected(IntMatrix.zeros(0))


def test_swap_conjugation_examples():
    assert swap_conjugation_check(assemble(orient(cycle(3)))).all
    assert swap_conjugation_check(assemble(orient(petersen()))).all
    assert not swap_conjugation_check(assemble(orient(path(6)))).col_sums_zero
    assert swap_matrix(1) == IntMatrix([[0, 1], [1, 0]])


def test_exhaustive_sum_and_symmetry_invariants():
    for n in range(1, 7):
        for g in all_graphs(n):
            em = assemble(orient(g))
            oe = em.oriented
            m2 = 2 * g.m
            assert em.M.row_sums() == [g.degree(oe.target(i)) - 1 for i in range(m2)]
            assert em.M.col_sums() == [g.degree(oe.source(j)) - 1 for j in range(m2)]
            equal_degree_edges = all(g.degree(u) == g.degree(v) for u, v in g.edges)
            assert (not any(em.N.col_sums())) == equal_degree_edges
            assert not any(em.N.row_sums())
            bd = blocks(em)
            assert bd.M12.is_symmetric() and bd.M21.is_symmetric()
            assert bd.Q.is_symmetric() and bd.R.is_symmetric()
            assert IntMatrix.block([[bd.P, bd.Q], [bd.R, bd.S]]) == em.N
            d12 = (bd.D1 + bd.D2).diag()
            assert d12 == [g.degree(oe.target(i)) + g.degree(oe.target(i + g.m)) - 2 for i in range(g.m)]
            assert em.D.trace() == sum(d * d for d in g.degrees()) - 2 * g.m


def test_irreducible_when_min_degree_two_and_not_cycle():
    for n in range(3, 8):
        for g in connected_graphs(n):
            s = structural_predicates(g)
            if s.min_degree >= 2 and not s.is_cycle_graph:
                assert digraph_strongly_connected(edge_adjacency(orient(g)))


@given(graphs(max_n=6), st.integers(min_value=0, max_value=10**9))
def test_charpoly_N_independent_of_orientation(g, seed):
    base = charpoly(assemble(orient(g)).N)
    assert charpoly(assemble(orient(g, "random", seed=seed)).N) == base


@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_charpoly_N_independent_of_labeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert charpoly(assemble(orient(g.relabel(perm))).N) == charpoly(assemble(orient(g)).N)


def test_format_matrix_layout():
    oe = orient(cycle(3), "arcs", arcs=[(0, 1), (1, 2), (2, 0)])
    text = format_matrix(assemble(oe).N, oe)
    lines = text.splitlines()
    assert lines[0].split() == ["|", "e1", "e2", "e3", "|", "e1^-1", "e2^-1", "e3^-1"]
    assert lines[2].split() == ["e1", "|", "1", "-1", "0", "|", "0", "0", "0"]
    assert lines[5].startswith("-")


def test_cycle_traversal_permutation():
    for n in range(3, 9):
        oe = orient(cycle(n), "random", seed=n)
        perm = cycle_traversal_permutation(oe)
        assert sorted(perm) == list(range(2 * n))
        N = assemble(oe).N.permuted(perm)
        assert N.submatrix(range(n), range(n, 2 * n)).is_zero()
        # forward block: identity minus the shift along the walk
        shift = IntMatrix([[int(j == (i + 1) % n) for j in range(n)] for i in range(n)])
        assert N.submatrix(range(n), range(n)) == IntMatrix.identity(n) - shift
    for bad in (path(4), complete(4)):
        with pytest.raises(ValueError):
            cycle_traversal_permutation(orient(bad))
