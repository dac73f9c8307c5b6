"""2-Hamming decompositions.

A decomposition splits the edge set into two families, each a vertex-disjoint
union of cliques covering every vertex (singletons allowed).  Every triangle
is forced into a single clique, so the family cliques are exactly the maximal
cliques; a decomposition exists iff maximal cliques are edge-disjoint and
their intersection graph is bipartite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .graph import Graph, mask_of, maximal_cliques

Clique = tuple[int, ...]


@dataclass(frozen=True)
class TwoHammingDecomposition:
    f1: tuple[Clique, ...]
    f2: tuple[Clique, ...]

    @property
    def c1(self) -> int:
        return len(self.f1)

    @property
    def c2(self) -> int:
        return len(self.f2)

    def family(self, i: int) -> tuple[Clique, ...]:
        if i not in (1, 2):
            raise ValueError("family index is 1 or 2")
        return self.f1 if i == 1 else self.f2

    def count(self, i: int) -> int:
        return len(self.family(i))

    def swapped(self) -> "TwoHammingDecomposition":
        return TwoHammingDecomposition(self.f2, self.f1)

    def clique_of(self, i: int, v: int) -> Clique:
        for c in self.family(i):
            if v in c:
                return c
        raise KeyError(v)

    def family_of_edge(self, a: int, b: int) -> int:
        for i in (1, 2):
            c = self.clique_of(i, a)
            if b in c:
                return i
        raise KeyError((a, b))

    def degree_in(self, i: int, v: int) -> int:
        return len(self.clique_of(i, v)) - 1

    def as_dict(self) -> dict:
        return {"f1": [list(c) for c in self.f1], "f2": [list(c) for c in self.f2],
                "c1": self.c1, "c2": self.c2}


def restrict_count(dec: TwoHammingDecomposition, family_index: int, vertices) -> int:
    """Number of cliques of the family lying entirely inside ``vertices``."""
    m = vertices if isinstance(vertices, int) else mask_of(vertices)
    return sum(1 for c in dec.family(family_index) if mask_of(c) & ~m == 0)


def is_valid_decomposition(h: Graph, dec: TwoHammingDecomposition) -> bool:
    """Replay the defining conditions from scratch."""
    edge_cover: dict[tuple[int, int], int] = {}
    for fam in (dec.f1, dec.f2):
        seen = 0
        for c in fam:
            m = mask_of(c)
            if seen & m or len(c) == 0:
                return False
            seen |= m
            for i, a in enumerate(c):
                for b in c[i + 1:]:
                    if not h.has_edge(a, b):
                        return False
                    e = (min(a, b), max(a, b))
                    edge_cover[e] = edge_cover.get(e, 0) + 1
        if seen != h.full_mask:
            return False
    return len(edge_cover) == h.num_edges() and all(v == 1 for v in edge_cover.values())


@dataclass
class _Structure:
    cliques: list[Clique]
    comp_of: list[int]     # clique -> component of the intersection graph
    side: list[int]        # clique -> 0/1 in the canonical 2-colouring
    n_comps: int


def _structure(h: Graph) -> _Structure | None:
    cliques = [tuple(c) for c in maximal_cliques(h) if len(c) >= 2]
    if sum(len(c) * (len(c) - 1) // 2 for c in cliques) != h.num_edges():
        return None  # some edge lies in two maximal cliques
    at: list[list[int]] = [[] for _ in range(h.n)]
    for i, c in enumerate(cliques):
        for v in c:
            at[v].append(i)
    if any(len(a) >= 3 for a in at):
        return None
    nbrs: list[list[int]] = [[] for _ in cliques]
    for a in at:
        if len(a) == 2:
            nbrs[a[0]].append(a[1])
            nbrs[a[1]].append(a[0])
    side = [-1] * len(cliques)
    comp_of = [-1] * len(cliques)
    n_comps = 0
    # cliques come sorted, so the first unvisited one is the least of its component
    for start in range(len(cliques)):
        if side[start] != -1:
            continue
        side[start] = 0
        comp_of[start] = n_comps
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    comp_of[y] = n_comps
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
        n_comps += 1
    return _Structure(cliques, comp_of, side, n_comps)


def _assemble(h: Graph, st: _Structure, swaps: Sequence[int]) -> TwoHammingDecomposition:
    fams: list[list[Clique]] = [[], []]
    covered = [0, 0]
    for i, c in enumerate(st.cliques):
        f = st.side[i] ^ swaps[st.comp_of[i]]
        fams[f].append(c)
        covered[f] |= mask_of(c)
    for f in (0, 1):
        fams[f].extend((v,) for v in range(h.n) if not covered[f] >> v & 1)
        fams[f].sort()
    return TwoHammingDecomposition(tuple(fams[0]), tuple(fams[1]))


def decompose(h: Graph) -> TwoHammingDecomposition | None:
    """The canonical decomposition, or None when ``h`` is not 2-Hamming.

    In every clique-bearing component the least clique goes to ``f1``.
    Connected graphs have exactly this one decomposition up to swapping.
    """
    st = _structure(h)
    if st is None:
        return None
    return _assemble(h, st, [0] * st.n_comps)


def all_decompositions(h: Graph) -> Iterator[tuple[tuple[int, ...], TwoHammingDecomposition]]:
    """Every decomposition, keyed by its swap vector (one bit per component), in lex order."""
    st = _structure(h)
    if st is None:
        return
    for swaps in product((0, 1), repeat=st.n_comps):
        yield swaps, _assemble(h, st, swaps)


def optimal_decompositions(h: Graph) -> list[tuple[tuple[int, ...], TwoHammingDecomposition]]:
    decs = list(all_decompositions(h))
    if not decs:
        return []
    best = min(max(d.c1, d.c2) for _, d in decs)
    return [(s, d) for s, d in decs if max(d.c1, d.c2) == best]


def min_k(h: Graph) -> tuple[int, TwoHammingDecomposition] | None:
    """Least k with h induced in K_k x K_k, with the optimal decomposition attaining it.

    Ties between swap vectors go to the lexicographically least vector.
    """
    opt = optimal_decompositions(h)
    if not opt:
        return None
    _, dec = opt[0]
    return max(dec.c1, dec.c2), dec


def is_balanced(h: Graph) -> bool | None:
    """True if some optimal decomposition has equal component counts; None if not 2-Hamming."""
    opt = optimal_decompositions(h)
    if not opt:
        return None
    return any(d.c1 == d.c2 for _, d in opt)


def is_two_hamming(h: Graph) -> bool:
    return _structure(h) is not None


def outside_neighbours_ok(h: Graph, dec: TwoHammingDecomposition) -> bool:
    """Every vertex outside a family clique sees at most one of its vertices."""
    for fam in (dec.f1, dec.f2):
        for c in fam:
            m = mask_of(c)
            for v in range(h.n):
                if not m >> v & 1 and (h.adj[v] & m).bit_count() > 1:
                    return False
    return True


def family_graph(h: Graph, dec: TwoHammingDecomposition, i: int) -> Graph:
    rows = [0] * h.n
    for c in dec.family(i):
        m = mask_of(c)
        for v in c:
            rows[v] = m & ~(1 << v)
    return Graph.trusted(h.n, tuple(rows))


def coordinates(dec: TwoHammingDecomposition, n: int) -> list[tuple[int, int]]:
    """Vertex -> (index of its f1 clique, index of its f2 clique): an embedding into K_k x K_k."""
    out = [[0, 0] for _ in range(n)]
    for i, fam in enumerate((dec.f1, dec.f2)):
        for idx, c in enumerate(fam):
            for v in c:
                out[v][i] = idx
    return [(a, b) for a, b in out]

