"""Deciding whether some K_k x K_k is induced-saturated for a connected graph.

A connected graph is good exactly when it is chipped (only possible route
when it is not 2-Hamming) or, when it is 2-Hamming, when it lies in both
rebalancing classes A and B.  Every witness carries enough data to be
replayed from the raw graph.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterator

from .decomposition import TwoHammingDecomposition, decompose, min_k, restrict_count
from .errors import ContractError
from .graph import Graph, add_edge, bits, component_masks, delete_edges, is_connected, mask_of


@dataclass(frozen=True)
class ChippedWitness:
    kind: str               # "ch1" | "ch2" | "ch3"
    u: int
    v: int
    w: int
    x: int | None           # fourth clique vertex for ch3
    clique: tuple[int, ...]
    component: tuple[int, ...] = ()   # the component meeting the clique only in u (ch3)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["clique"] = list(self.clique)
        d["component"] = list(self.component)
        return d


@dataclass(frozen=True)
class ClassWitness:
    kind: str               # "a1" | "a2" | "b1" | "b2"
    u: int
    v: int
    w: int | None = None
    parts: tuple[tuple[int, ...], ...] = ()
    counts: tuple[tuple[int, int], ...] = ()   # (C(F1|Hj), C(F2|Hj)) per part
    family: int | None = None                  # b1: family index of the bridge

    def as_dict(self) -> dict:
        d = asdict(self)
        d["parts"] = [list(p) for p in self.parts]
        d["counts"] = [list(c) for c in self.counts]
        return d


@dataclass
class GoodnessVerdict:
    verdict: str                        # "chipped" | "classAB" | "notgood"
    chipped: ChippedWitness | None = None
    witness_a: ClassWitness | None = None
    witness_b: ClassWitness | None = None
    k: int | None = None
    reason: str = ""
    decomposition: TwoHammingDecomposition | None = field(default=None, repr=False)

    @property
    def good(self) -> bool:
        return self.verdict != "notgood"

    def as_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.chipped:
            out["kind"] = self.chipped.kind
            out["witness"] = self.chipped.as_dict()
        if self.witness_a:
            out["witness_a"] = self.witness_a.as_dict()
        if self.witness_b:
            out["witness_b"] = self.witness_b.as_dict()
        if self.k is not None:
            out["k"] = self.k
        if self.reason:
            out["reason"] = self.reason
        return out


# ---------------------------------------------------------------------------
# chipped


def _without_clique_edges(g: Graph, clique) -> Graph:
    es = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    return delete_edges(g, es)


def _chipped_at(h: Graph, u: int, v: int) -> Iterator[ChippedWitness]:
    hp = add_edge(h, (u, v))
    if not is_connected(hp):
        return
    dec = decompose(hp)
    if dec is None:
        return
    fam = dec.family_of_edge(u, v)
    clique = dec.clique_of(fam, u)
    if len(clique) not in (3, 4):
        return
    rest = [z for z in clique if z not in (u, v)]
    comps = component_masks(_without_clique_edges(hp, clique))
    kmask = mask_of(clique)
    if len(clique) == 3:
        w = rest[0]
        if hp.degree(w) >= 3:
            yield ChippedWitness("ch1", u, v, w, None, clique)
        elif len(comps) == 2 and 1 << w in comps:
            yield ChippedWitness("ch2", u, v, w, None, clique)
        return
    # the definition names the endpoints u, v and the others w, x; try every role assignment
    for a, b in ((u, v), (v, u)):
        for w, x in ((rest[0], rest[1]), (rest[1], rest[0])):
            if hp.degree(w) != 3:
                continue
            for c in comps:
                if c & kmask == 1 << a:
                    yield ChippedWitness("ch3", a, b, w, x, clique, tuple(bits(c)))


def chipped_witnesses(h: Graph) -> Iterator[ChippedWitness]:
    """Every chipped witness, non-edges in lexicographic order."""
    for u, v in h.nonedges():
        yield from _chipped_at(h, u, v)


def find_chipped(h: Graph) -> ChippedWitness | None:
    for w in chipped_witnesses(h):
        return w
    return None


def replay_chipped(h: Graph, wit: ChippedWitness) -> bool:
    """Re-check a chipped witness using only the raw graph."""
    u, v, w = wit.u, wit.v, wit.w
    if h.has_edge(u, v):
        return False
    hp = add_edge(h, (u, v))
    if not is_connected(hp):
        return False
    dec = decompose(hp)
    if dec is None:
        return False
    clique = tuple(sorted(wit.clique))
    if clique not in dec.f1 and clique not in dec.f2:
        return False
    expected = {u, v, w} | ({wit.x} if wit.x is not None else set())
    if set(clique) != expected or len(clique) != len(expected):
        return False
    comps = component_masks(_without_clique_edges(hp, clique))
    if wit.kind == "ch1":
        return len(clique) == 3 and hp.degree(w) >= 3
    if wit.kind == "ch2":
        return len(clique) == 3 and len(comps) == 2 and 1 << w in comps
    if wit.kind == "ch3":
        c = mask_of(wit.component)
        return (len(clique) == 4 and hp.degree(w) == 3 and c in comps
                and c & mask_of(clique) == 1 << u)
    return False


# ---------------------------------------------------------------------------
# classes A and B


def oriented_decomposition(h: Graph) -> TwoHammingDecomposition | None:
    """The decomposition of a connected unbalanced 2-Hamming graph with C(F1) > C(F2)."""
    if h.n == 0 or not is_connected(h):
        return None
    dec = decompose(h)
    if dec is None or dec.c1 == dec.c2:
        return None
    return dec if dec.c1 > dec.c2 else dec.swapped()


def _counts(dec: TwoHammingDecomposition, part: int) -> tuple[int, int]:
    return restrict_count(dec, 1, part), restrict_count(dec, 2, part)


def _split_with_singleton(g: Graph, w: int) -> tuple[int, int] | None:
    """If ``g`` has exactly three components, one of them {w}, return the other two."""
    comps = component_masks(g)
    if len(comps) != 3 or 1 << w not in comps:
        return None
    a, b = (c for c in comps if c != 1 << w)
    return a, b


def class_a_witnesses(h: Graph, dec: TwoHammingDecomposition | None = None) -> Iterator[ClassWitness]:
    dec = dec or oriented_decomposition(h)
    if dec is None:
        return
    for u, v in h.nonedges():
        if dec.degree_in(1, u) == 0 and dec.degree_in(1, v) == 0:
            yield ClassWitness("a1", u, v)
        for w in bits(h.adj[u] & h.adj[v]):
            split = _split_with_singleton(delete_edges(h, [(u, w), (w, v)]), w)
            if split is None:
                continue
            counts = tuple(_counts(dec, p) for p in split)
            if all(c1 > c2 for c1, c2 in counts):
                yield ClassWitness("a2", u, v, w, tuple(tuple(bits(p)) for p in split), counts)


def class_b_witnesses(h: Graph, dec: TwoHammingDecomposition | None = None) -> Iterator[ClassWitness]:
    dec = dec or oriented_decomposition(h)
    if dec is None:
        return
    for u, v in h.edges():
        without = delete_edges(h, [(u, v)])
        comps = component_masks(without)
        if len(comps) == len(component_masks(h)) + 1:
            i = dec.family_of_edge(u, v)
            counts = tuple(_counts(dec, p) for p in comps)
            if all(c1 >= c2 + i for c1, c2 in counts):
                yield ClassWitness("b1", u, v, None, tuple(tuple(bits(p)) for p in comps), counts, i)
        for w in bits(h.adj[u] & h.adj[v]):
            split = _split_with_singleton(delete_edges(h, [(u, v), (u, w), (v, w)]), w)
            if split is None:
                continue
            counts = tuple(_counts(dec, p) for p in split)
            if all(c1 > c2 for c1, c2 in counts):
                yield ClassWitness("b2", u, v, w, tuple(tuple(bits(p)) for p in split), counts)


def in_class_a(h: Graph) -> ClassWitness | None:
    return next(class_a_witnesses(h), None)


def in_class_b(h: Graph) -> ClassWitness | None:
    return next(class_b_witnesses(h), None)


def replay_class_witness(h: Graph, wit: ClassWitness) -> bool:
    dec = oriented_decomposition(h)
    if dec is None:
        return False
    source = class_a_witnesses if wit.kind.startswith("a") else class_b_witnesses
    return wit in set(source(h, dec))


# ---------------------------------------------------------------------------


def classify(h: Graph) -> GoodnessVerdict:
    if h.n == 0 or not is_connected(h):
        raise ContractError("classification is defined for connected graphs")
    dec = decompose(h)
    if dec is None:
        wit = find_chipped(h)
        if wit is not None:
            return GoodnessVerdict("chipped", chipped=wit)
        return GoodnessVerdict("notgood", reason="dim>2, not chipped")
    if dec.c1 == dec.c2:
        return GoodnessVerdict("notgood", reason="balanced", decomposition=dec)
    oriented = dec if dec.c1 > dec.c2 else dec.swapped()
    wa = next(class_a_witnesses(h, oriented), None)
    wb = next(class_b_witnesses(h, oriented), None)
    if wa is None or wb is None:
        missing = " and ".join(n for n, w in (("A", wa), ("B", wb)) if w is None)
        return GoodnessVerdict("notgood", witness_a=wa, witness_b=wb,
                               reason=f"not in class {missing}", decomposition=oriented)
    k = min_k(h)[0] - 1
    return GoodnessVerdict("classAB", witness_a=wa, witness_b=wb, k=k, decomposition=oriented)
