"""Induced saturation: checks, Hamming-host shortcuts and small exhaustive searches.

``g`` is induced-saturated for ``h`` when ``g`` has no induced ``h`` but
every single edge deletion and every single edge addition creates one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .embedding import contains_induced, find_embedding
from .errors import ContractError, ResourceLimitError
from .graph import (Graph, add_edge, complement, component_masks, delete_edge,
                    parse_graph6, path, cycle, to_graph6)
from .hamming import HammingGraph, edge_representative, nonedge_representatives
from .iso import canonical_form, canonical_graph, graphs

SEARCH_MAX_N = 8


@dataclass
class SaturationReport:
    holds: bool
    kind: str | None = None             # contains_H | deletion_miss | addition_miss
    certificate: object = None          # embedding, or the edge / non-edge
    failures: list = field(default_factory=list)   # exhaustive mode: every (kind, certificate)

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict:
        out: dict = {"holds": self.holds}
        if not self.holds:
            out["failure"] = {"kind": self.kind, "certificate": _jsonable(self.certificate)}
        if self.failures:
            out["failures"] = [{"kind": k, "certificate": _jsonable(c)} for k, c in self.failures]
        return out


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    if isinstance(x, list):
        return [_jsonable(y) for y in x]
    return x


def _report(failures: list, exhaustive: bool) -> SaturationReport:
    if not failures:
        return SaturationReport(True)
    kind, cert = failures[0]
    return SaturationReport(False, kind, cert, failures if exhaustive else [])


def _contains_any(g: Graph, hs: Sequence[Graph]) -> bool:
    return any(contains_induced(g, h) for h in hs)


def _copy_through(g: Graph, hs: Sequence[Graph], a: int, b: int) -> bool:
    """Does ``g`` contain a member using both ``a`` and ``b``?

    When ``g`` is a single-edge change of an ``h``-free graph, any new copy
    must use the changed pair, so pinning it is enough and much faster.
    """
    adjacent = g.has_edge(a, b)
    for h in hs:
        for x in range(h.n):
            for y in range(h.n):
                if x != y and h.has_edge(x, y) == adjacent and find_embedding(g, h, {x: a, y: b}) is not None:
                    return True
    return False


def verify_family(g: Graph, hs: Sequence[Graph], exhaustive: bool = False) -> SaturationReport:
    """Saturation for a family: no member induced, every single-edge change creates some member."""
    hs = list(hs)
    if not hs:
        raise ContractError("family must be non-empty")
    failures: list = []
    for h in hs:
        emb = find_embedding(g, h)
        if emb is not None:
            failures.append(("contains_H", emb))
            break
    if failures and not exhaustive:
        return _report(failures, exhaustive)
    free = not failures
    for e in g.edges():
        g2 = delete_edge(g, e)
        if not (_copy_through(g2, hs, *e) if free else _contains_any(g2, hs)):
            failures.append(("deletion_miss", e))
            if not exhaustive:
                return _report(failures, exhaustive)
    for f in g.nonedges():
        g2 = add_edge(g, f)
        if not (_copy_through(g2, hs, *f) if free else _contains_any(g2, hs)):
            failures.append(("addition_miss", f))
            if not exhaustive:
                return _report(failures, exhaustive)
    return _report(failures, exhaustive)


def verify(g: Graph, h: Graph, exhaustive: bool = False) -> SaturationReport:
    return verify_family(g, [h], exhaustive)


def verify_hamming(hg: HammingGraph, h: Graph) -> SaturationReport:
    """Same verdict as ``verify(hg.graph, h)`` using the symmetry of the host.

    All edges of the host are equivalent, and non-edges at equal distance
    are equivalent.  So: the host must avoid ``h``; deleting one edge creates
    ``h`` iff ``h + f`` embeds for some non-edge f of ``h``; adding a non-edge
    at distance q creates ``h`` iff ``h`` embeds into the host plus one
    representative non-edge (for two coordinates all non-edges have distance
    2, and the test becomes: ``h - e`` embeds for some edge e of ``h``).
    An edgeless host (k = 1) falls back to the direct check.
    """
    g = hg.graph
    if g.num_edges() == 0:
        return verify(g, h)
    emb = find_embedding(g, h)
    if emb is not None:
        return SaturationReport(False, "contains_H", emb)
    if not any(contains_induced(g, add_edge(h, f)) for f in h.nonedges()):
        return SaturationReport(False, "deletion_miss", edge_representative(hg))
    reps = nonedge_representatives(hg)
    if hg.n == 2:
        if not any(contains_induced(g, delete_edge(h, e)) for e in h.edges()):
            u, v = reps[0]
            return SaturationReport(False, "addition_miss", (hg.to_index(u), hg.to_index(v)))
    else:
        for u, v in reps:
            f = (hg.to_index(u), hg.to_index(v))
            if not contains_induced(add_edge(g, f), h):
                return SaturationReport(False, "addition_miss", f)
    return SaturationReport(True)


def replay(g: Graph, hs: Sequence[Graph], report: SaturationReport) -> bool:
    """Re-check a failure certificate against the raw graphs."""
    if report.holds:
        return verify_family(g, hs).holds
    if report.kind == "contains_H":
        from .embedding import is_induced_embedding
        sigma = report.certificate
        return any(len(sigma) == h.n and is_induced_embedding(h, sigma, g.has_edge) for h in hs)
    if report.kind == "deletion_miss":
        return g.has_edge(*report.certificate) and not _contains_any(delete_edge(g, report.certificate), hs)
    if report.kind == "addition_miss":
        return (not g.has_edge(*report.certificate)
                and not _contains_any(add_edge(g, report.certificate), hs))
    return False


# ---------------------------------------------------------------------------
# searches


def read_corpus(lines: Iterable[str]) -> list[Graph]:
    """graph6 lines, '#' comments and blank lines skipped; a bad line raises with its number."""
    out = []
    for no, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            out.append(parse_graph6(s))
        except ValueError as exc:
            raise ContractError(f"corpus line {no}: {exc}") from exc
    return out


def search_saturating_family(hs: Sequence[Graph], max_n: int, corpus: Iterable[Graph] | None = None,
                             allow_large: bool = False, min_n: int = 2) -> list[Graph]:
    """Every graph (up to isomorphism) on ``min_n..max_n`` vertices saturated for the family.

    Without a corpus, only graphs avoiding every member are generated (the
    class is closed under induced subgraphs).  The single-vertex graph is
    skipped by default: it saturates any pattern with two or more vertices
    vacuously.
    """
    hs = list(hs)
    if max_n > SEARCH_MAX_N and not allow_large:
        raise ResourceLimitError(f"max_n={max_n} exceeds {SEARCH_MAX_N}; pass allow_large", SEARCH_MAX_N)
    found: dict[tuple[int, str], Graph] = {}
    if corpus is None:
        for n in range(max(min_n, 0), max_n + 1):
            for g in graphs(n, hs):
                if verify_family(g, hs).holds:
                    found[(n, canonical_form(g))] = g
    else:
        for g in corpus:
            if not min_n <= g.n <= max_n:
                continue
            key = (g.n, canonical_form(g))
            if key in found:
                continue
            if verify_family(g, hs).holds:
                found[key] = canonical_graph(g)
    return [found[k] for k in sorted(found)]


def search_saturating(h: Graph, max_n: int, corpus: Iterable[Graph] | None = None,
                      allow_large: bool = False, min_n: int = 2) -> list[Graph]:
    return search_saturating_family([h], max_n, corpus, allow_large, min_n)


def is_cograph(g: Graph) -> bool:
    """Complement-reducibility: every induced subgraph on 2+ vertices is disconnected or co-disconnected."""
    def rec(mask: int) -> bool:
        if mask & (mask - 1) == 0:
            return True
        comps = component_masks(g, mask)
        if len(comps) == 1:
            comps = component_masks(co, mask)
            if len(comps) == 1:
                return False
        return all(rec(c) for c in comps)

    co = complement(g)
    return rec(g.full_mask)


def full_vertex_violations(max_n: int = 7) -> list[Graph]:
    """Connected {P4, C4}-free graphs on at most ``max_n`` vertices with no full vertex."""
    from .graph import is_connected
    bad = []
    for n in range(1, max_n + 1):
        for g in graphs(n, [path(4), cycle(4)]):
            if is_connected(g) and not any(d == n - 1 for d in g.degrees()):
                bad.append(g)
    return bad


def graph6_list(gs: Iterable[Graph]) -> list[str]:
    return [to_graph6(g) for g in gs]
