"""Nice edge colourings and graph dimension.

A colouring is nice when every triangle is monochromatic and every pair of
distinct non-adjacent vertices has two different colours, each present on
every induced path between them.  A graph has a nice colouring with n
colours exactly when it is an induced subgraph of some product of n cliques,
so the least such n is the dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import ContractError, ResourceLimitError
from .graph import Edge, Graph, bits, component_masks

DEFAULT_PATH_BUDGET = 1_000_000
INFINITE = math.inf


@dataclass
class NiceColoring:
    palette: int
    colors: dict[Edge, int] = field(default_factory=dict)

    def __getitem__(self, e) -> int:
        a, b = e
        return self.colors[(a, b) if a < b else (b, a)]

    def as_triples(self) -> list[list[int]]:
        return [[a, b, c] for (a, b), c in sorted(self.colors.items())]

    def remap(self, mapping: dict[int, int], palette: int) -> "NiceColoring":
        return NiceColoring(palette, {e: mapping[c] for e, c in self.colors.items()})


@dataclass
class NiceCheck:
    ok: bool
    violation: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


class PathBudgetExceeded(ResourceLimitError):
    pass


def induced_paths(g: Graph, u: int, v: int, budget: int = DEFAULT_PATH_BUDGET) -> Iterator[list[int]]:
    """Every induced u-v path exactly once, as vertex lists starting at ``u``."""
    if u == v:
        raise ContractError("induced paths need distinct endpoints")
    adj = g.adj
    count = 0
    path = [u]
    # ``blocked`` = vertices adjacent to some path vertex other than the last

    def rec(last: int, on_path: int, blocked: int) -> Iterator[list[int]]:
        nonlocal count
        if adj[last] >> v & 1:
            count += 1
            if count > budget:
                raise PathBudgetExceeded(f"more than {budget} induced paths between {u} and {v}", budget)
            yield path + [v]
            return
        cand = adj[last] & ~on_path & ~blocked
        for w in bits(cand):
            path.append(w)
            yield from rec(w, on_path | 1 << w, blocked | adj[last])
            path.pop()

    yield from rec(u, 1 << u, 0)


def _path_colors(path: list[int], coloring: NiceColoring) -> set[int]:
    return {coloring[(a, b)] for a, b in zip(path, path[1:])}


def verify_nice(g: Graph, coloring: NiceColoring, budget: int = DEFAULT_PATH_BUDGET) -> NiceCheck:
    """Check both conditions; on failure report the offending triangle or pair."""
    for e in g.edges():
        c = coloring.colors.get(e)
        if c is None or not 1 <= c <= coloring.palette:
            return NiceCheck(False, ("uncolored", e))
    for a, b in g.edges():
        for c in bits(g.adj[a] & g.adj[b] & ~((1 << (b + 1)) - 1)):
            if not coloring[(a, b)] == coloring[(a, c)] == coloring[(b, c)]:
                return NiceCheck(False, ("triangle", (a, b, c)))
    for u, v in g.nonedges():
        common = set(range(1, coloring.palette + 1))
        for p in induced_paths(g, u, v, budget):
            common &= _path_colors(p, coloring)
            if len(common) < 2:
                break
        if len(common) < 2:
            return NiceCheck(False, ("pair", (u, v)))
    return NiceCheck(True)


def common_color(g: Graph, coloring: NiceColoring, u: int, v: int,
                 budget: int = DEFAULT_PATH_BUDGET) -> int:
    """Least colour present on every induced u-v path."""
    common = set(range(1, coloring.palette + 1))
    for p in induced_paths(g, u, v, budget):
        common &= _path_colors(p, coloring)
    if not common:
        raise ContractError(f"no colour common to all induced {u}-{v} paths; colouring is not nice")
    return min(common)


# ---------------------------------------------------------------------------
# search


def triangle_classes(g: Graph) -> tuple[list[Edge], list[int]]:
    """Edges and, per edge, the index of its triangle-closure class.

    Edges sharing a triangle must share a colour; classes are numbered by
    their least edge.
    """
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for a, b in edges:
        for c in bits(g.adj[a] & g.adj[b]):
            union(index[(a, b)], index[(a, c) if a < c else (c, a)])
            union(index[(a, b)], index[(b, c) if b < c else (c, b)])
    roots: dict[int, int] = {}
    cls = []
    for i in range(len(edges)):
        r = find(i)
        if r not in roots:
            roots[r] = len(roots)
        cls.append(roots[r])
    return edges, cls


@dataclass
class _Constraints:
    n_classes: int
    pair_paths: list[list[int]]      # per constrained pair: class masks of its paths
    pairs_without_paths: bool
    impossible: bool
    class_pairs: list[list[int]]     # per class: constrained pairs touching it


def _constraints(g: Graph, budget: int) -> tuple[list[Edge], list[int], _Constraints]:
    edges, cls = triangle_classes(g)
    n_classes = max(cls, default=-1) + 1
    index = {e: i for i, e in enumerate(edges)}
    pair_paths: list[list[int]] = []
    without = False
    impossible = False
    for u, v in g.nonedges():
        masks = set()
        for p in induced_paths(g, u, v, budget):
            m = 0
            for a, b in zip(p, p[1:]):
                m |= 1 << cls[index[(a, b) if a < b else (b, a)]]
            masks.add(m)
        if not masks:
            without = True
            continue
        if any(m.bit_count() < 2 for m in masks):
            impossible = True
        # a superset path never shrinks the set of colours common to all paths
        minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
        pair_paths.append(sorted(minimal))
    class_pairs: list[list[int]] = [[] for _ in range(n_classes)]
    for pi, masks in enumerate(pair_paths):
        touched = 0
        for m in masks:
            touched |= m
        for c in bits(touched):
            class_pairs[c].append(pi)
    return edges, cls, _Constraints(n_classes, pair_paths, without, impossible, class_pairs)


def _search(con: _Constraints, palette: int, node_budget: int | None) -> list[int] | None:
    if con.impossible or palette < 1 and con.n_classes:
        return None
    if con.pairs_without_paths and palette < 2:
        return None
    n = con.n_classes
    color = [0] * n   # 0 = unassigned, else 1..palette
    full = (1 << (palette + 1)) - 2
    nodes = 0

    def pair_ok(pi: int, assigned: int) -> bool:
        common = full
        for m in con.pair_paths[pi]:
            if m & ~assigned:
                continue
            cs = 0
            for c in bits(m):
                cs |= 1 << color[c]
            common &= cs
            if common.bit_count() < 2:
                return False
        return True

    def rec(t: int, used: int, assigned: int) -> bool:
        nonlocal nodes
        if t == n:
            return True
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise ResourceLimitError(f"nice-colouring search exceeded {node_budget} nodes", node_budget)
        assigned |= 1 << t
        for c in range(1, min(used + 1, palette) + 1):
            color[t] = c
            if all(pair_ok(pi, assigned) for pi in con.class_pairs[t]):
                if rec(t + 1, max(used, c), assigned):
                    return True
        color[t] = 0
        return False

    if rec(0, 0, 0):
        return color
    return None


def search_nice(g: Graph, n: int, budget: int = DEFAULT_PATH_BUDGET,
                node_budget: int | None = None) -> NiceColoring | None:
    """Least nice colouring with palette [n] (lexicographic over edges), or None."""
    if n < 0:
        raise ContractError("palette size must be >= 0")
    edges, cls, con = _constraints(g, budget)
    found = _search(con, n, node_budget)
    if found is None:
        return None
    return NiceColoring(n, {e: found[c] for e, c in zip(edges, cls)})


def dimension_with_witness(g: Graph, budget: int = DEFAULT_PATH_BUDGET,
                           node_budget: int | None = None) -> tuple[float, NiceColoring | None]:
    """(dimension, a nice colouring attaining it); dimension is ``INFINITE`` when none exists.

    Graphs on at most one vertex have dimension 0.  A nice colouring never
    needs more colours than there are triangle classes, and two colours must
    exist whenever some pair has no path at all, so the search stops there.
    """
    if g.n <= 1:
        return 0, NiceColoring(0)
    edges, cls, con = _constraints(g, budget)
    if con.impossible:
        return INFINITE, None
    top = max(con.n_classes, 2 if con.pairs_without_paths else 1)
    for m in range(1, top + 1):
        found = _search(con, m, node_budget)
        if found is not None:
            return m, NiceColoring(m, {e: found[c] for e, c in zip(edges, cls)})
    return INFINITE, None


def dimension(g: Graph, budget: int = DEFAULT_PATH_BUDGET) -> float:
    return dimension_with_witness(g, budget)[0]


def format_dimension(d: float) -> int | str:
    return "infinite" if d == INFINITE else int(d)


# ---------------------------------------------------------------------------
# nice colouring -> coordinates


def coordinates_from_coloring(g: Graph, coloring: NiceColoring) -> list[tuple[int, ...]] | None:
    """Coordinates in a product of ``palette`` cliques, from a nice colouring.

    Coordinate i of a vertex is the index of its component after deleting
    the edges of colour i.  The result is returned only if it really is an
    induced embedding (distinct tuples, adjacency iff Hamming distance 1).
    """
    palette = coloring.palette
    labels = [[0] * palette for _ in range(g.n)]
    for i in range(1, palette + 1):
        rows = list(g.adj)
        for (a, b), c in coloring.colors.items():
            if c == i:
                rows[a] &= ~(1 << b)
                rows[b] &= ~(1 << a)
        for idx, comp in enumerate(component_masks(Graph.trusted(g.n, tuple(rows)))):
            for v in bits(comp):
                labels[v][i - 1] = idx
    coords = [tuple(row) for row in labels]
    if len(set(coords)) != g.n:
        return None
    for a, b in combinations(range(g.n), 2):
        d = sum(x != y for x, y in zip(coords[a], coords[b]))
        if (d == 1) != g.has_edge(a, b):
            return None
    return coords
