"""Exact induced-subgraph isomorphism by backtracking.

Pattern vertices are placed in a fixed connected order (most neighbours
already placed, then highest degree, then lowest index); host candidates
are tried in ascending order, so the first embedding found is the
lexicographically least one under that order.  Candidates are filtered with
bit rows: a host vertex must be adjacent to the images of placed pattern
neighbours and non-adjacent to the images of placed non-neighbours.
"""

from __future__ import annotations

from typing import Callable, Iterator, Mapping, Sequence

from .errors import ContractError
from .graph import Graph, bits


def search_order(pattern: Graph, first: Sequence[int] = ()) -> list[int]:
    order = list(first)
    placed = 0
    for v in order:
        placed |= 1 << v
    degs = pattern.degrees()
    while len(order) < pattern.n:
        best = max(
            (v for v in range(pattern.n) if not placed >> v & 1),
            key=lambda v: ((pattern.adj[v] & placed).bit_count(), degs[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def _embeddings(host: Graph, pattern: Graph, pin: Mapping[int, int] | None) -> Iterator[list[int]]:
    pin = dict(pin or {})
    for u, v in pin.items():
        if not (0 <= u < pattern.n and 0 <= v < host.n):
            raise ContractError(f"invalid pin {u}->{v}")
    if pattern.n > host.n:
        return
    order = search_order(pattern, sorted(pin))
    p_adj = pattern.adj
    h_adj = host.adj
    h_deg = host.degrees()
    p_deg = pattern.degrees()
    hn, pn = host.n, pattern.n
    # degree feasibility: enough neighbours and enough non-neighbours
    feasible = []
    for x in range(pn):
        m = 0
        lo, lo_non = p_deg[x], pn - 1 - p_deg[x]
        for y in range(hn):
            if h_deg[y] >= lo and hn - 1 - h_deg[y] >= lo_non:
                m |= 1 << y
        feasible.append(m)
    # for each position, the earlier positions split into neighbours / non-neighbours
    earlier = []
    for i, x in enumerate(order):
        nb = [j for j in range(i) if p_adj[x] >> order[j] & 1]
        non = [j for j in range(i) if not p_adj[x] >> order[j] & 1]
        earlier.append((nb, non))
    full = host.full_mask
    image = [0] * pn
    used = 0

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if i == pn:
            out = [0] * pn
            for j, x in enumerate(order):
                out[x] = image[j]
            yield out
            return
        x = order[i]
        cand = feasible[x] & ~used
        nb, non = earlier[i]
        for j in nb:
            cand &= h_adj[image[j]]
        for j in non:
            cand &= full & ~h_adj[image[j]]
        if x in pin:
            cand &= 1 << pin[x]
        for y in bits(cand):
            image[i] = y
            yield from rec(i + 1, used | 1 << y)

    yield from rec(0, used)


def find_embedding(host: Graph, pattern: Graph, pin: Mapping[int, int] | None = None) -> list[int] | None:
    """First induced embedding (``sigma[x]`` = host image of pattern vertex ``x``) or None."""
    for emb in _embeddings(host, pattern, pin):
        return emb
    return None


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_embedding(host, pattern) is not None


def contains_induced_through(host: Graph, pattern: Graph, v: int) -> bool:
    """Is there an induced copy of ``pattern`` whose image uses host vertex ``v``?"""
    return any(find_embedding(host, pattern, {u: v}) is not None for u in range(pattern.n))


def iter_embeddings(host: Graph, pattern: Graph, pin: Mapping[int, int] | None = None) -> Iterator[list[int]]:
    return _embeddings(host, pattern, pin)


def count_embeddings(host: Graph, pattern: Graph, cap: int) -> int:
    """min(cap, number of labelled induced embeddings)."""
    if cap < 1:
        raise ContractError("cap must be >= 1")
    count = 0
    for _ in _embeddings(host, pattern, None):
        count += 1
        if count >= cap:
            break
    return count


def is_induced_embedding(pattern: Graph, sigma: Sequence, adjacent: Callable[[object, object], bool]) -> bool:
    """Check an explicit map against an adjacency predicate on host vertex names.

    Works for hosts that are never materialised, e.g. large Hamming graphs
    whose vertices are coordinate tuples.
    """
    if len(sigma) != pattern.n or len(set(sigma)) != pattern.n:
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.has_edge(a, b) != bool(adjacent(sigma[a], sigma[b])):
                return False
    return True


def first_violation(pattern: Graph, sigma: Sequence, adjacent: Callable[[object, object], bool]):
    """The first pattern pair whose adjacency is not preserved, or None."""
    if len(set(sigma)) != len(sigma):
        return ("not injective",)
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.has_edge(a, b) != bool(adjacent(sigma[a], sigma[b])):
                return (a, b)
    return None
