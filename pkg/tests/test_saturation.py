import pytest
from hypothesis import given, settings

from indsat.errors import ContractError, ResourceLimitError
from indsat.graph import (Graph, complement, complete, cycle, delete_edge, path, to_graph6)
from indsat.hamming import build
from indsat.iso import graphs
from indsat.saturation import (full_vertex_violations, is_cograph, read_corpus, replay,
                               search_saturating, search_saturating_family, verify, verify_family,
                               verify_hamming)

from conftest import small_graphs

K4E = delete_edge(complete(4), (0, 1))


def test_verify_examples():
    assert verify(complete(3), path(3)).holds
    assert verify(Graph.empty(2), complete(2)).holds
    rep = verify(cycle(4), path(4))
    assert not rep.holds and rep.kind == "addition_miss"
    assert replay(cycle(4), [path(4)], rep)


def test_verify_exhaustive_lists_every_failure():
    rep = verify(cycle(4), path(4), exhaustive=True)
    assert [k for k, _ in rep.failures] == ["addition_miss", "addition_miss"]


def test_verify_hamming_examples():
    assert verify_hamming(build(2, 4), K4E).holds
    assert verify_hamming(build(2, 2), path(3)).holds == verify(cycle(4), path(3)).holds


def test_verify_family_examples():
    g = cycle(5)
    assert verify_family(g, [path(3)]).holds == verify(g, path(3)).holds
    rep = verify_family(g, [path(3), complete(2)])
    assert not rep.holds and rep.kind == "contains_H"
    with pytest.raises(ContractError):
        verify_family(g, [])


def test_no_graph_saturates_c4_complement_c4_c5():
    fam = [complement(cycle(4)), cycle(4), cycle(5)]
    assert search_saturating_family(fam, 6) == []


def test_search_examples():
    assert search_saturating(path(4), 6) == []
    assert Graph.empty(2) in search_saturating(complete(2), 2)
    assert complete(3) in search_saturating(path(3), 3)
    with pytest.raises(ResourceLimitError):
        search_saturating(path(4), 9)


def test_search_with_corpus():
    corpus = read_corpus(["# header", "", to_graph6(complete(3)), to_graph6(cycle(4))])
    assert search_saturating(path(3), 4, corpus) == [complete(3)]


def test_corpus_reports_line_number():
    with pytest.raises(ContractError, match="line 2"):
        read_corpus(["Bw", "B"])


def test_cograph_examples():
    assert is_cograph(complete(4)) and is_cograph(Graph.empty(4)) and is_cograph(cycle(4))
    assert not is_cograph(path(4)) and not is_cograph(cycle(5))


def test_cograph_matches_p4_freeness():
    from indsat.embedding import contains_induced
    for n in range(1, 7):
        for g in graphs(n):
            assert is_cograph(g) == (not contains_induced(g, path(4)))


def test_family_sweeps():
    assert search_saturating_family([path(4), cycle(4)], 6) == []
    assert full_vertex_violations(7) == []


def test_hamming_shortcut_matches_definition():
    patterns = [g for n in range(1, 6) for g in graphs(n)]
    hosts = [build(n, k) for n in range(1, 4) for k in range(1, 4)]
    for h in patterns:
        for hg in hosts:
            assert verify_hamming(hg, h).holds == verify(hg.graph, h).holds, (h, hg)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6), small_graphs(min_n=2, max_n=4))
def test_complement_duality(g, h):
    assert verify(g, h).holds == verify(complement(g), complement(h)).holds


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6), small_graphs(min_n=2, max_n=4))
def test_failure_certificates_replay(g, h):
    rep = verify(g, h)
    assert replay(g, [h], rep)
