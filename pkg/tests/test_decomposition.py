from itertools import product

from hypothesis import given, settings

from indsat.coloring import dimension
from indsat.decomposition import (TwoHammingDecomposition, all_decompositions, coordinates,
                                  decompose, is_balanced, is_valid_decomposition, min_k,
                                  optimal_decompositions, outside_neighbours_ok, restrict_count)
from indsat.embedding import contains_induced
from indsat.graph import (Graph, complete, cycle, disjoint_union, is_connected, matching,
                          maximal_cliques, path, star)
from indsat.hamming import build
from indsat.iso import graphs

from conftest import small_graphs


def brute_decompositions(h: Graph) -> set:
    """Every assignment of maximal cliques to two families that yields a valid decomposition."""
    cliques = [tuple(c) for c in maximal_cliques(h) if len(c) >= 2]
    out = set()
    for sides in product((0, 1), repeat=len(cliques)):
        fams = [[c for c, s in zip(cliques, sides) if s == f] for f in (0, 1)]
        for f in fams:
            cov = {v for c in f for v in c}
            f.extend((v,) for v in range(h.n) if v not in cov)
            f.sort()
        dec = TwoHammingDecomposition(tuple(fams[0]), tuple(fams[1]))
        if is_valid_decomposition(h, dec):
            out.add((dec.f1, dec.f2))
    return out


def test_decompose_examples():
    c4 = decompose(cycle(4))
    assert c4.f1 == ((0, 1), (2, 3)) and c4.f2 == ((0, 3), (1, 2))
    assert decompose(star(3)) is None
    p3 = decompose(path(3))
    assert p3.f1 == ((0, 1), (2,)) and p3.f2 == ((0,), (1, 2))


def test_min_k_examples():
    assert min_k(cycle(4))[0] == 2
    for m in range(1, 5):
        k = min_k(complete(m))[0]
        assert k == m
        assert contains_induced(build(2, m).graph, complete(m))
        if m > 1:
            assert not contains_induced(build(2, m - 1).graph, complete(m))
    # two disjoint edges need a third clique in one family
    assert min_k(matching(2))[0] == 3
    assert not contains_induced(build(2, 2).graph, matching(2))
    assert contains_induced(build(2, 3).graph, matching(2))


def test_balance_examples():
    assert is_balanced(cycle(4)) is True
    assert is_balanced(path(3)) is True
    assert is_balanced(complete(2)) is False
    assert is_balanced(star(3)) is None


def test_restrict_count_examples():
    dec = decompose(path(3))
    assert restrict_count(dec, 1, range(3)) == dec.c1
    assert restrict_count(dec, 2, []) == 0
    assert restrict_count(dec, 1, [0, 1]) == 1


def test_disconnected_swap_choices():
    g = disjoint_union(complete(3), complete(2))
    decs = list(all_decompositions(g))
    assert len(decs) == 4
    opt = optimal_decompositions(g)
    assert all(max(d.c1, d.c2) == min_k(g)[0] for _, d in opt)


def test_oracle_on_all_graphs_up_to_six():
    hosts = [build(2, k).graph for k in range(1, 7)]
    for n in range(1, 7):
        for g in graphs(n):
            dec = decompose(g)
            assert (dec is None) == (dimension(g) > 2)
            if dec is None:
                continue
            assert is_valid_decomposition(g, dec)
            assert outside_neighbours_ok(g, dec)
            least = next(k for k in range(1, 7) if contains_induced(hosts[k - 1], g))
            assert min_k(g)[0] == least


def test_unique_decomposition_for_connected_graphs_up_to_seven():
    for n in range(2, 8):
        for g in graphs(n):
            if not is_connected(g) or decompose(g) is None:
                continue
            found = brute_decompositions(g)
            dec = decompose(g)
            assert found == {(dec.f1, dec.f2), (dec.f2, dec.f1)}


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=7))
def test_coordinates_embed(g):
    dec = decompose(g)
    if dec is None:
        return
    coords = coordinates(dec, g.n)
    assert len(set(coords)) == g.n
    for a in range(g.n):
        for b in range(a + 1, g.n):
            d = sum(x != y for x, y in zip(coords[a], coords[b]))
            assert (d == 1) == g.has_edge(a, b)
