"""Homogeneous sets, prime graphs and the blowup product."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import ContractError
from .graph import Graph, bits, mask_of, to_graph6


def _splitters(g: Graph, x: int) -> int:
    """Vertices outside ``x`` adjacent to some but not all of ``x``."""
    out = 0
    for y in bits(g.full_mask & ~x):
        seen = g.adj[y] & x
        if seen and seen != x:
            out |= 1 << y
    return out


def closure(g: Graph, x: int) -> int:
    """Least homogeneous set containing ``x`` (absorb splitters until none remain)."""
    while True:
        s = _splitters(g, x)
        if not s:
            return x
        x |= s


def is_homogeneous(g: Graph, x) -> bool:
    m = x if isinstance(x, int) else mask_of(x)
    return _splitters(g, m) == 0


def homogeneous_sets(g: Graph, include_singletons: bool = False) -> Iterator[tuple[int, ...]]:
    """Every homogeneous set of size 2..n-1, ordered by (size, lexicographic).

    Every such set is reached from the closure of one of its pairs by
    repeatedly closing with one more of its vertices.
    """
    full = g.full_mask
    found: set[int] = set()
    todo = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            c = closure(g, 1 << a | 1 << b)
            if c != full and c not in found:
                found.add(c)
                todo.append(c)
    while todo:
        x = todo.pop()
        for z in bits(full & ~x):
            c = closure(g, x | 1 << z)
            if c != full and c not in found:
                found.add(c)
                todo.append(c)
    sets = [tuple(bits(m)) for m in found]
    if include_singletons and g.n >= 2:
        sets.extend((v,) for v in range(g.n))
    sets.sort(key=lambda s: (len(s), s))
    yield from sets


def is_prime(g: Graph) -> bool:
    """At least three vertices and no homogeneous set of size 2..n-1."""
    if g.n < 3:
        return False
    return next(homogeneous_sets(g), None) is None


def minimal_homogeneous_set(g: Graph) -> tuple[int, ...] | None:
    """The (size, lex)-least homogeneous set of size >= 2; being smallest it is inclusion-minimal."""
    return next(homogeneous_sets(g), None)


def blowup(g1: Graph, g2: Graph) -> Graph:
    """Replace each vertex of ``g1`` by a copy of ``g2``; vertex (i, j) is ``i*|g2| + j``."""
    if g1.n == 0 or g2.n == 0:
        raise ContractError("blowup needs non-empty graphs")
    m = g2.n
    block = (1 << m) - 1
    rows = []
    for i in range(g1.n):
        across = 0
        for j in bits(g1.adj[i]):
            across |= block << (j * m)
        for j in range(m):
            rows.append(across | g2.adj[j] << (i * m))
    return Graph.trusted(g1.n * m, tuple(rows))


def full_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


@dataclass
class BlowupReport:
    accepted: bool
    reason: str = ""
    blowup_holds: bool | None = None
    blowup_size: int | None = None
    sub_set: tuple[int, ...] | None = None
    sub_graph6: str | None = None
    sub_is_prime: bool | None = None
    sub_holds: bool | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.accepted and bool(self.blowup_holds) and self.sub_holds in (None, True)

    def as_dict(self) -> dict:
        d = {k: v for k, v in self.__dict__.items() if v is not None and k != "details"}
        if self.sub_set is not None:
            d["sub_set"] = list(self.sub_set)
        d["passed"] = self.passed
        return d


def theorem20_check(g: Graph, h: Graph) -> BlowupReport:
    """For prime ``h`` and ``g`` saturated for ``h``: the self-blowup of ``g`` is saturated too,
    and if ``g`` is not prime the subgraph on a minimal homogeneous set is."""
    from .saturation import verify

    if not is_prime(h):
        return BlowupReport(False, "pattern is not prime")
    if not verify(g, h).holds:
        return BlowupReport(False, "g is not saturated for the pattern")
    big = blowup(g, g)
    rep = BlowupReport(True, blowup_holds=verify(big, h).holds, blowup_size=big.n)
    s = minimal_homogeneous_set(g) if g.n >= 3 else None
    if s is not None:
        sub = g.induced(list(s))
        rep.sub_set = s
        rep.sub_graph6 = to_graph6(sub)
        rep.sub_is_prime = is_prime(sub)
        rep.sub_holds = verify(sub, h).holds
    return rep
