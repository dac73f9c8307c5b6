import networkx as nx
import pytest
from hypothesis import given, settings

from indsat.errors import ContractError, Graph6Error
from indsat.graph import (Graph, SpiderSpec, add_edge, bridges, complement, complete,
                          complete_bipartite, components, cut_vertices, cycle, cycle_with_chord,
                          cycle_with_pendant, delete_edge, disjoint_union, girth, is_forest, make,
                          matching, maximal_cliques, parse_adjacency_list, parse_graph6, path,
                          spider, star, subdivide, to_graph6)
from indsat.iso import are_isomorphic

from conftest import small_graphs, to_nx


def test_graph6_small_examples():
    assert parse_graph6("A_") == complete(2)
    assert parse_graph6("A?") == Graph.empty(2)
    assert parse_graph6("Bw") == complete(3)
    assert to_graph6(complete(2)) == "A_"
    assert to_graph6(Graph.empty(2)) == "A?"


def test_graph6_roundtrip_c4():
    c4 = cycle(4)
    assert parse_graph6(to_graph6(c4)) == c4


def test_graph6_matches_networkx_encoding():
    for g in (cycle(5), path(4), star(3), complete_bipartite(2, 3), cycle(12)):
        expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert to_graph6(g) == expected


def test_graph6_long_size_prefix():
    g = path(70)
    assert parse_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "B\x01", "A_?", "Ab"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ContractError):
        Graph(2, (2, 0))
    with pytest.raises(ContractError):
        Graph.from_edges(2, [(0, 0)])


def test_complement_examples():
    assert complement(complete(4)) == Graph.empty(4)
    assert are_isomorphic(complement(cycle(5)), cycle(5))
    assert are_isomorphic(complement(path(4)), path(4))


def test_add_delete_examples():
    assert are_isomorphic(add_edge(cycle(4), (0, 2)), delete_edge(complete(4), (0, 1)))
    assert are_isomorphic(delete_edge(complete(3), (0, 2)), path(3))
    g = cycle(5)
    assert delete_edge(add_edge(g, (0, 2)), (0, 2)) == g
    with pytest.raises(ContractError):
        add_edge(g, (0, 1))
    with pytest.raises(ContractError):
        delete_edge(g, (0, 2))


def test_components_examples():
    assert components(Graph.empty(2)) == [[0], [1]]
    assert components(path(3)) == [[0, 1, 2]]
    assert [len(c) for c in components(disjoint_union(complete(3), complete(2)))] == [3, 2]


def test_maximal_cliques_examples():
    assert maximal_cliques(complete(3)) == [[0, 1, 2]]
    assert maximal_cliques(path(3)) == [[0, 1], [1, 2]]
    k4e = delete_edge(complete(4), (0, 1))
    assert maximal_cliques(k4e) == [[0, 2, 3], [1, 2, 3]]


def test_cut_vertices_and_bridges():
    assert cut_vertices(path(3)) == [1]
    assert bridges(path(3)) == [(0, 1), (1, 2)]
    assert cut_vertices(cycle(4)) == [] and bridges(cycle(4)) == []
    assert cut_vertices(star(3)) == [0]
    assert len(bridges(star(3))) == 3


def test_subdivide_examples():
    assert are_isomorphic(subdivide(complete(2), 3), path(5))
    assert are_isomorphic(subdivide(complete(3), 1), cycle(6))
    assert subdivide(cycle(5), 0) == cycle(5)


def test_generators():
    assert are_isomorphic(spider(SpiderSpec(3, 1)), star(3))
    ct5 = cycle_with_chord(5)
    assert ct5.num_edges() == 6 and ct5.has_edge(0, 2)
    cp3 = cycle_with_pendant(3)
    assert sorted(cp3.degrees()) == [1, 2, 2, 3]
    assert make("M", 3) == matching(3)
    assert make("Kab", 2, 3) == complete_bipartite(2, 3)
    assert make("spider", 3, 2) == spider(3, 2)
    with pytest.raises(ContractError):
        make("nope")


def test_adjacency_list_convenience():
    assert parse_adjacency_list("3 0-1 1-2") == path(3)


@settings(max_examples=300)
@given(small_graphs(max_n=10))
def test_graph6_roundtrip_property(g):
    assert parse_graph6(to_graph6(g)) == g


@settings(max_examples=200)
@given(small_graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@settings(max_examples=100)
@given(small_graphs(max_n=6))
def test_subdivision_girth_and_forest(g):
    for k in (1, 2):
        s = subdivide(g, k)
        assert is_forest(s) == is_forest(g)
        if girth(g) != float("inf"):
            assert girth(s) >= (k + 1) * girth(g)


@settings(max_examples=200)
@given(small_graphs())
def test_maximal_cliques_match_networkx(g):
    cliques = maximal_cliques(g)
    ref = sorted(sorted(c) for c in nx.find_cliques(to_nx(g))) if g.n else []
    assert cliques == ref
    covered = {(a, b) for c in cliques for i, a in enumerate(c) for b in c[i + 1:]}
    assert set(g.edges()) <= covered


@settings(max_examples=200)
@given(small_graphs())
def test_cut_vertices_and_bridges_match_networkx(g):
    x = to_nx(g)
    assert cut_vertices(g) == sorted(nx.articulation_points(x))
    assert bridges(g) == sorted(tuple(sorted(e)) for e in nx.bridges(x))
