"""Hamming graphs: the Cartesian product of n cliques K_k.

Vertices are n-tuples over {0..k-1}; the flat index is the mixed-radix value
with coordinate 1 most significant.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .errors import ContractError, ResourceLimitError
from .graph import Graph, add_edge, delete_edge

DEFAULT_VERTEX_BUDGET = 10_000

Coord = tuple[int, ...]


def vertex_budget() -> int:
    return int(os.environ.get("INDSAT_BUDGET_VERTICES", DEFAULT_VERTEX_BUDGET))


def hamming_distance(a: Coord, b: Coord) -> int:
    return sum(x != y for x, y in zip(a, b))


@dataclass(frozen=True)
class HammingGraph:
    n: int
    k: int
    graph: Graph = field(repr=False, compare=False)

    def to_tuple(self, index: int) -> Coord:
        out = []
        for _ in range(self.n):
            index, r = divmod(index, self.k)
            out.append(r)
        return tuple(reversed(out))

    def to_index(self, t: Coord) -> int:
        if len(t) != self.n or any(not 0 <= x < self.k for x in t):
            raise ContractError(f"{t!r} is not a vertex of H({self.n},{self.k})")
        index = 0
        for x in t:
            index = index * self.k + x
        return index

    def tuples(self) -> list[Coord]:
        return list(product(range(self.k), repeat=self.n))

    def unit(self, i: int, value: int = 1) -> Coord:
        """The vector with ``value`` in coordinate ``i`` (1-based) and zeros elsewhere."""
        return tuple(value if j == i - 1 else 0 for j in range(self.n))


def build(n: int, k: int, budget: int | None = None) -> HammingGraph:
    if n < 1 or k < 1:
        raise ContractError("need n >= 1 and k >= 1")
    cap = vertex_budget() if budget is None else budget
    if k ** n > cap:
        raise ResourceLimitError(f"H({n},{k}) has {k ** n} vertices, budget is {cap}", cap)
    return _build(n, k)


@lru_cache(maxsize=64)
def _build(n: int, k: int) -> HammingGraph:
    size = k ** n
    stride = [k ** (n - 1 - i) for i in range(n)]
    rows = []
    for idx in range(size):
        m = 0
        for s in stride:
            digit = idx // s % k
            base = idx - digit * s
            for d in range(k):
                if d != digit:
                    m |= 1 << (base + d * s)
        rows.append(m)
    return HammingGraph(n, k, Graph.trusted(size, tuple(rows)))


def hamming_adjacency(extra: tuple[Coord, Coord] | None = None):
    """Adjacency predicate on tuples for an implicit (possibly huge) Hamming host.

    ``extra`` is an added non-edge, turning the host into G + e.
    """
    pair = frozenset(extra) if extra else None

    def adjacent(a: Coord, b: Coord) -> bool:
        if pair is not None and frozenset((a, b)) == pair:
            return True
        return hamming_distance(a, b) == 1

    return adjacent


def translate_automorphism(hg: HammingGraph, w: Coord, v: Coord) -> list[int]:
    """Permutation x -> x - w + v (mod k) of the flat indices; maps w to v."""
    hg.to_index(w), hg.to_index(v)
    perm = []
    for idx in range(hg.k ** hg.n):
        x = hg.to_tuple(idx)
        perm.append(hg.to_index(tuple((a - b + c) % hg.k for a, b, c in zip(x, w, v))))
    return perm


def representative_symbol(k: int) -> int:
    return 2 if k >= 3 else 1


def nonedge_representatives(hg: HammingGraph) -> list[tuple[Coord, Coord]]:
    """One non-edge per distance class q = 2..n: 0 and q leading symbols then zeros."""
    if hg.n < 2 or hg.k < 2:
        return []
    s = representative_symbol(hg.k)
    zero = (0,) * hg.n
    return [(zero, tuple(s if j < q else 0 for j in range(hg.n))) for q in range(2, hg.n + 1)]


def representative_vector(n: int, q: int, k: int = 3) -> Coord:
    s = representative_symbol(k)
    return tuple(s if j < q else 0 for j in range(n))


def edge_representative(hg: HammingGraph) -> tuple[int, int]:
    """The edge 0 -- e_1 (every edge is equivalent under automorphisms)."""
    if hg.k < 2:
        raise ContractError("H(n,1) has no edges")
    return (0, hg.to_index(hg.unit(1)))


def with_added(hg: HammingGraph, u: Coord, v: Coord) -> Graph:
    return add_edge(hg.graph, (hg.to_index(u), hg.to_index(v)))


def with_deleted(hg: HammingGraph, e: tuple[int, int]) -> Graph:
    return delete_edge(hg.graph, e)


def format_tuple(t: Coord) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"
