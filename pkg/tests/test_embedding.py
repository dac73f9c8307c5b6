from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indsat.embedding import (contains_induced, count_embeddings, find_embedding,
                              is_induced_embedding)
from indsat.errors import ContractError
from indsat.graph import Graph, complete, cycle, path, star
from indsat.hamming import build

from conftest import small_graphs


def naive_contains(host: Graph, pattern: Graph) -> bool:
    for image in permutations(range(host.n), pattern.n):
        if is_induced_embedding(pattern, image, host.has_edge):
            return True
    return False


def naive_count(host: Graph, pattern: Graph) -> int:
    return sum(is_induced_embedding(pattern, image, host.has_edge)
               for image in permutations(range(host.n), pattern.n))


def test_contains_examples():
    assert contains_induced(cycle(4), path(3))
    assert not contains_induced(complete(4), cycle(4))
    for k in range(2, 6):
        assert not contains_induced(build(2, k).graph, star(3))


def test_find_embedding_examples():
    emb = find_embedding(cycle(5), path(4), {0: 0})
    assert emb is not None and emb[0] == 0
    assert is_induced_embedding(path(4), emb, cycle(5).has_edge)
    h = build(2, 3)
    for v in range(h.graph.n):
        assert find_embedding(h.graph, cycle(4), {0: v}) is not None
    assert find_embedding(complete(3), Graph.empty(2)) is None


def test_count_examples():
    assert count_embeddings(cycle(4), complete(2), 100) == 8
    assert count_embeddings(complete(3), complete(3), 100) == 6
    assert count_embeddings(path(3), path(3), 100) == 2
    assert count_embeddings(complete(4), complete(2), 5) == 5
    with pytest.raises(ContractError):
        count_embeddings(cycle(4), complete(2), 0)


def test_empty_pattern_embeds_everywhere():
    assert find_embedding(cycle(4), Graph.empty(0)) == []


@settings(max_examples=250, deadline=None)
@given(small_graphs(max_n=7), small_graphs(max_n=5))
def test_contains_agrees_with_naive(host, pattern):
    assert contains_induced(host, pattern) == naive_contains(host, pattern)
    assert (find_embedding(host, pattern) is not None) == contains_induced(host, pattern)


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=6), small_graphs(max_n=4))
def test_count_agrees_with_naive(host, pattern):
    assert count_embeddings(host, pattern, 10 ** 6) == naive_count(host, pattern)


@settings(max_examples=150, deadline=None)
@given(small_graphs(min_n=1, max_n=5), st.integers(1, 3), st.integers(1, 3), st.data())
def test_hamming_pin_property(pattern, n, k, data):
    hg = build(n, k)
    if not contains_induced(hg.graph, pattern):
        return
    u = data.draw(st.integers(0, pattern.n - 1))
    v = data.draw(st.integers(0, hg.graph.n - 1))
    assert find_embedding(hg.graph, pattern, {u: v}) is not None
