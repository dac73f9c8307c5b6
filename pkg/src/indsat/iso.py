"""Canonical labelling, isomorphism testing and small-graph enumeration.

Canonical forms use colour refinement plus individualisation; at every
branching cell only one vertex per twin class is tried (swapping twins is an
automorphism that fixes everything already individualised).  The canonical
graph is the lexicographically largest adjacency-row tuple over all leaves.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .errors import ResourceLimitError
from .graph import Graph, bits, complement, is_connected, to_graph6

ISO_MAX_N = 12


def _refine(g: Graph, colors: list[int]) -> list[int]:
    adj = g.adj
    n = g.n
    num = len(set(colors))
    while True:
        keys = [(colors[v], tuple(sorted(colors[w] for w in bits(adj[v])))) for v in range(n)]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if len(rank) == num:
            return new
        colors, num = new, len(rank)


def _signature(g: Graph, colors: list[int]) -> tuple[tuple[int, ...], list[int]]:
    # colours are a permutation of 0..n-1 at a leaf
    rows = [0] * g.n
    for v in range(g.n):
        m = 0
        for w in bits(g.adj[v]):
            m |= 1 << colors[w]
        rows[colors[v]] = m
    return tuple(rows), colors


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for r in reps:
            mask = ~(1 << v | 1 << r)
            if g.adj[v] & mask == g.adj[r] & mask:
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(g: Graph, limit: int | None = ISO_MAX_N) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is the canonical graph."""
    if limit is not None and g.n > limit:
        raise ResourceLimitError(f"canonical form limited to n <= {limit}, got {g.n}", limit)
    if g.n == 0:
        return []
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        n_colors = max(colors) + 1
        if n_colors == g.n:
            sig, perm = _signature(g, colors)
            if best[0] is None or sig > best[0]:
                best[0], best[1] = sig, perm
            return
        sizes = [0] * n_colors
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(n_colors) if sizes[c] > 1)
        cell = [v for v in range(g.n) if colors[v] == target]
        for v in _twin_representatives(g, cell):
            child = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            search(child)

    search([0] * g.n)
    return best[1]


def canonical_graph(g: Graph, limit: int | None = ISO_MAX_N) -> Graph:
    return g.relabel(canonical_labeling(g, limit))


def canonical_form(g: Graph, limit: int | None = ISO_MAX_N) -> str:
    """graph6 string of the canonical relabelling; equal iff isomorphic."""
    return to_graph6(canonical_graph(g, limit))


def are_isomorphic(g: Graph, h: Graph, limit: int | None = ISO_MAX_N) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, limit) == canonical_form(h, limit)


# ---------------------------------------------------------------------------
# enumeration


def _extend(parents: Iterable[Graph], admissible: Callable[[Graph], bool],
            neighbourhoods: Callable[[Graph], Iterable[int]]) -> list[Graph]:
    seen: dict[str, Graph] = {}
    for p in parents:
        n = p.n
        for s in neighbourhoods(p):
            rows = list(p.adj)
            for v in bits(s):
                rows[v] |= 1 << n
            rows.append(s)
            child = Graph.trusted(n + 1, tuple(rows))
            if not admissible(child):
                continue
            key = canonical_form(child)
            if key not in seen:
                seen[key] = child
    return [canonical_graph(seen[k]) for k in sorted(seen)]


def _all_subsets(p: Graph) -> Iterable[int]:
    return range(1 << p.n)


@lru_cache(maxsize=None)
def _level(n: int, forbidden: tuple[str, ...]) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    parents = _level(n - 1, forbidden)
    if forbidden:
        from .embedding import contains_induced_through
        from .graph import parse_graph6

        pats = [parse_graph6(f) for f in forbidden]

        def admissible(g: Graph) -> bool:
            # only subgraphs through the new vertex can be new copies
            return not any(p.n <= g.n and contains_induced_through(g, p, g.n - 1) for p in pats)
    else:
        def admissible(g: Graph) -> bool:
            return True
    return tuple(_extend(parents, admissible, _all_subsets))


def graphs(n: int, forbidden: Iterable[Graph] = ()) -> list[Graph]:
    """All graphs on exactly ``n`` vertices up to isomorphism, in canonical order.

    ``forbidden`` restricts to graphs with no induced copy of any listed graph;
    the class is hereditary so augmenting admissible graphs by one vertex
    reaches every admissible graph.
    """
    key = tuple(sorted({canonical_form(f) for f in forbidden}))
    return list(_level(n, key))


def graphs_up_to(max_n: int, forbidden: Iterable[Graph] = (), min_n: int = 1) -> Iterator[Graph]:
    forbidden = list(forbidden)
    for n in range(min_n, max_n + 1):
        yield from graphs(n, forbidden)


def connected_graphs_up_to(max_n: int, forbidden: Iterable[Graph] = ()) -> Iterator[Graph]:
    return (g for g in graphs_up_to(max_n, forbidden) if is_connected(g))


@lru_cache(maxsize=None)
def _forest_level(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)

    def at_most_one(p: Graph) -> Iterable[int]:
        return [0, *(1 << v for v in range(p.n))]

    return tuple(_extend(_forest_level(n - 1), lambda g: True, at_most_one))


def forests(n: int) -> list[Graph]:
    """All forests on ``n`` vertices up to isomorphism (new vertices attach to at most one old one)."""
    return list(_forest_level(n))


def self_complementary(g: Graph) -> bool:
    return are_isomorphic(g, complement(g))
