from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from edgespectra.enumerate import all_graphs, canonical_form
from edgespectra.families import (
    complete,
    complete_bipartite,
    cycle,
    generate_family,
    hypercube,
    parse_family,
    path,
    petersen,
    star,
    tree_from_pruefer,
)
from edgespectra.graph import (
    Bipartition,
    Graph,
    GraphError,
    disjoint_union,
    format_edge_list,
    is_bipartite_bfs,
    kronecker_double_cover,
    line_graph,
    parse_edge_list,
    structural_predicates,
)
from edgespectra.graph6 import Graph6Error, parse_graph6, to_graph6
from edgespectra.orientation import OrientationError, orient, parse_orientation


def same_graph(a: Graph, b: Graph) -> bool:
    return canonical_form(a) == canonical_form(b)


def test_parse_edge_list_examples():
    g = parse_edge_list("0 1\n1 2\n0 2")
    assert (g.n, g.m) == (3, 3)
    assert same_graph(g, cycle(3))
    k2 = parse_edge_list("0 1")
    assert (k2.n, k2.m) == (2, 1)


def test_parse_edge_list_header_and_comments():
    g = parse_edge_list("# a comment\nn 5\n\n3 1\n")
    assert g.n == 5 and g.edges == ((1, 3),)


@pytest.mark.parametrize(
    "text, match",
    [
        ("0 0", "loop"),
        ("0 1\n1 0", "duplicate"),
        ("0 1\n0 1", "duplicate"),
        ("0 x", "malformed"),
        ("0 1 2", "malformed"),
        ("n 2\n0 2", "declared"),
        ("0 1\nn 3", "header"),
    ],
)
def test_parse_edge_list_errors(text, match):
    with pytest.raises(GraphError, match=match):
        parse_edge_list(text)


@given(graphs())
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(2, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 0)))


def test_graph6_examples():
    # 'B' = 3 vertices; '_' = 95 - 63 = 0b100000, bits (0,1),(0,2),(1,2) = 1,0,0
    g = parse_graph6("B_")
    assert g.n == 3 and g.edges == ((0, 1),)
    # 'W' = 0b011000: edges (0,2), (1,2), a path centered at 2
    assert parse_graph6("BW").edges == ((0, 2), (1, 2))
    assert parse_graph6(b"Bw").edges == ((0, 1), (0, 2), (1, 2))
    one = parse_graph6("@")
    assert (one.n, one.m) == (1, 0)
    assert parse_graph6(">>graph6<<Bw\n") == parse_graph6("Bw")


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x1f", "~??"])
def test_graph6_errors(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_roundtrip_and_networkx_agreement():
    for n in range(0, 7):
        for g in all_graphs(n):
            s = to_graph6(g)
            assert parse_graph6(s) == g
            if n:
                ref_graph = nx.empty_graph(n)
                ref_graph.add_edges_from(g.edges)
                ref = nx.to_graph6_bytes(ref_graph, nodes=range(n), header=False)
                assert s.encode() == ref.strip()


def test_graph6_long_form():
    g = cycle(70)
    s = to_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g
    assert s.encode() == nx.to_graph6_bytes(nx.cycle_graph(70), header=False).strip()


def test_families():
    k23 = complete_bipartite(2, 3)
    assert k23.m == 6
    assert tree_from_pruefer([]) == Graph(2, ((0, 1),))
    star5 = tree_from_pruefer([1, 1, 1, 1])
    assert star5.n == 6 and sorted(star5.degrees()) == [1, 1, 1, 1, 1, 5]
    assert same_graph(star5, star(5))
    assert petersen().m == 15 and structural_predicates(petersen()).regular_degree == 3
    assert hypercube(3).m == 12 and structural_predicates(hypercube(3)).regular_degree == 3
    assert complete(5).m == 10
    assert parse_family("kpq:2,3") == k23
    assert parse_family("cycle:3") == cycle(3)
    assert parse_family("petersen") == petersen()
    assert parse_family("pruefer:1,1,1,1") == star5
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        parse_family("cycle")
    with pytest.raises(GraphError):
        parse_family("wheel:5")
    with pytest.raises(GraphError):
        generate_family("kpq", 0, 3)


def test_pruefer_decodes_every_labeled_tree_on_five_vertices():
    seen = set()
    for a in range(5):
        for b in range(5):
            for c in range(5):
                t = tree_from_pruefer([a, b, c])
                assert structural_predicates(t).is_tree
                seen.add(t.edges)
    assert len(seen) == 5**3  # Cayley


def test_is_bipartite_bfs_examples():
    assert is_bipartite_bfs(cycle(3)) is None
    assert is_bipartite_bfs(complete_bipartite(2, 3)) == Bipartition(frozenset({0, 1}), frozenset({2, 3, 4}))
    assert is_bipartite_bfs(path(6)) == Bipartition(frozenset({0, 2, 4}), frozenset({1, 3, 5}))


def _has_odd_cycle(g: Graph) -> bool:
    # brute force: a 2-coloring exists iff some assignment of sides works
    return not any(
        all(((mask >> u) & 1) != ((mask >> v) & 1) for u, v in g.edges) for mask in range(1 << g.n)
    )


def test_bipartite_bfs_matches_brute_force_exhaustively():
    for n in range(1, 7):
        for g in all_graphs(n):
            bip = is_bipartite_bfs(g)
            assert (bip is None) == _has_odd_cycle(g)
            if bip is not None:
                assert bip.is_valid_for(g)


def test_structural_predicates_examples():
    s = structural_predicates(cycle(3))
    assert s.connected and not s.is_tree and s.is_cycle_graph and not s.has_pendant and s.regular_degree == 2
    s = structural_predicates(path(6))
    assert s.connected and s.is_tree and s.has_pendant and s.degree_sequence == (1, 2, 2, 2, 2, 1)
    s = structural_predicates(complete_bipartite(2, 3))
    assert s.connected and not s.is_tree and not s.has_pendant and s.regular_degree is None
    s = structural_predicates(disjoint_union(path(2), path(3)))
    assert not s.connected and s.is_forest and not s.is_tree


def test_orient_examples():
    oe = orient(cycle(3))
    assert oe.arcs == ((0, 1), (0, 2), (1, 2))
    assert oe.source(3) == 1 and oe.target(3) == 0
    assert oe.label(0) == "e1" and oe.label(3) == "e1^-1"
    k23 = complete_bipartite(2, 3)
    bo = orient(k23, "bipartite", bipartition=is_bipartite_bfs(k23))
    assert all(t in {2, 3, 4} for _, t in bo.arcs)
    with pytest.raises(OrientationError):
        orient(cycle(3), "bipartite", bipartition=Bipartition(frozenset({0}), frozenset({1, 2})))
    with pytest.raises(OrientationError):
        orient(cycle(3), "random")
    r = orient(path(6), "random", seed=7)
    assert r == orient(path(6), "random", seed=7)
    assert sorted(tuple(sorted(a)) for a in r.arcs) == list(path(6).edges)


def test_parse_orientation():
    assert parse_orientation("canonical") == {"strategy": "canonical"}
    assert parse_orientation("random:7") == {"strategy": "random", "seed": 7}
    assert parse_orientation("arcs:0>1,1>2") == {"strategy": "arcs", "arcs": [(0, 1), (1, 2)]}
    for bad in ("random:x", "arcs:0-1", "sideways"):
        with pytest.raises(OrientationError):
            parse_orientation(bad)


def test_line_graph_examples():
    assert same_graph(line_graph(path(3)), path(2))
    assert same_graph(line_graph(cycle(3)), cycle(3))
    assert same_graph(line_graph(star(3)), cycle(3))


@given(graphs())
def test_line_graph_degrees(g):
    lg = line_graph(g)
    assert lg.n == g.m
    for i, (u, v) in enumerate(g.edges):
        assert lg.degree(i) == g.degree(u) + g.degree(v) - 2


def _product_edges(g: Graph) -> set[tuple[int, int]]:
    # direct expansion of the tensor product with K2 = {0, 1}
    out = set()
    verts = [(v, layer) for layer in (0, 1) for v in range(g.n)]
    for (x1, y1), (x2, y2) in combinations(verts, 2):
        if g.has_edge(x1, x2) and y1 != y2:
            a, b = y1 * g.n + x1, y2 * g.n + x2
            out.add((min(a, b), max(a, b)))
    return out


def test_kronecker_double_cover_examples():
    assert same_graph(kronecker_double_cover(cycle(3)), cycle(6))
    assert kronecker_double_cover(path(2)).edges == ((0, 3), (1, 2))
    cover = kronecker_double_cover(path(3))
    assert set(cover.edges) == _product_edges(path(3))
    comps = cover.components()
    assert sorted(len(c) for c in comps) == [3, 3]
    assert [sorted(cover.degree(v) for v in c) for c in comps] == [[1, 1, 2], [1, 1, 2]]


@given(graphs())
def test_kronecker_double_cover_properties(g):
    cover = kronecker_double_cover(g)
    assert set(cover.edges) == _product_edges(g)
    assert cover.m == 2 * g.m
    assert is_bipartite_bfs(cover) is not None
    s = structural_predicates(g)
    expect_connected = s.connected and is_bipartite_bfs(g) is None
    assert structural_predicates(cover).connected == expect_connected


@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_canonical_form(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)
