from itertools import combinations

from hypothesis import given, settings

from indsat.embedding import contains_induced
from indsat.graph import (Graph, complement, complete, cycle, delete_edge, disjoint_union,
                          is_connected, mask_of, path, star)
from indsat.hamming import build
from indsat.iso import are_isomorphic, graphs
from indsat.modular import (blowup, full_vertices, homogeneous_sets, is_homogeneous, is_prime,
                            minimal_homogeneous_set, theorem20_check)

from conftest import small_graphs

K4E = delete_edge(complete(4), (0, 1))


def naive_homogeneous(g: Graph) -> list:
    out = []
    for size in range(2, g.n):
        for s in combinations(range(g.n), size):
            m = mask_of(s)
            if all((g.adj[y] & m) in (0, m) for y in range(g.n) if not m >> y & 1):
                out.append(s)
    return out


def test_homogeneous_examples():
    hs = list(homogeneous_sets(cycle(4)))
    assert (0, 2) in hs and (1, 3) in hs
    assert list(homogeneous_sets(cycle(5))) == []
    assert list(homogeneous_sets(star(3))) == [(1, 2), (1, 3), (2, 3), (1, 2, 3)]
    assert is_homogeneous(star(3), [1, 2])


def test_prime_examples():
    assert is_prime(cycle(5)) and is_prime(path(4))
    assert not is_prime(cycle(4)) and not is_prime(star(3)) and not is_prime(K4E)
    assert not is_prime(complete(2))


def test_minimal_homogeneous_examples():
    assert minimal_homogeneous_set(cycle(4)) == (0, 2)
    assert minimal_homogeneous_set(star(3)) == (1, 2)
    assert minimal_homogeneous_set(cycle(5)) is None


def test_blowup_examples():
    assert blowup(complete(2), complete(2)) == complete(4)
    g = cycle(4)
    assert blowup(Graph.empty(2), g) == disjoint_union(g, g)
    assert are_isomorphic(blowup(cycle(5), Graph.empty(1)), cycle(5))
    assert blowup(g, g).n == 16


def test_full_vertices_examples():
    assert full_vertices(complete(4)) == [0, 1, 2, 3]
    assert full_vertices(star(3)) == [0]
    assert full_vertices(cycle(5)) == []


def test_theorem20_rejections():
    assert not theorem20_check(complete(3), path(3)).accepted
    assert theorem20_check(complete(3), path(3)).reason == "pattern is not prime"
    rep = theorem20_check(cycle(4), path(4))
    assert not rep.accepted and "not saturated" in rep.reason


def test_theorem20_synthetic_pair():
    g = build(2, 3).graph
    rep = theorem20_check(g, cycle(5))
    assert rep.accepted and rep.blowup_holds and rep.blowup_size == 81
    assert rep.passed


def test_prime_graphs_structure_up_to_seven():
    for n in range(1, 8):
        for g in graphs(n):
            if not is_prime(g):
                continue
            assert n >= 4
            assert is_connected(g) and is_connected(complement(g))
            assert not full_vertices(g) and 0 not in g.degrees()


def test_cographs_are_not_prime():
    for n in range(4, 8):
        for g in graphs(n, [path(4)]):
            assert not is_prime(g)


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=7))
def test_homogeneous_sets_match_naive(g):
    assert list(homogeneous_sets(g)) == sorted(naive_homogeneous(g), key=lambda s: (len(s), s))


@settings(max_examples=40, deadline=None)
@given(small_graphs(min_n=1, max_n=3), small_graphs(min_n=1, max_n=3), small_graphs(min_n=1, max_n=3))
def test_blowup_distributes_over_union(a, b, c):
    assert blowup(disjoint_union(a, b), c) == disjoint_union(blowup(a, c), blowup(b, c))


def test_blowup_contains_both_factors():
    g = blowup(cycle(5), path(3))
    assert contains_induced(g, cycle(5)) and contains_induced(g, path(3))
