"""Simple undirected graphs on vertices 0..n-1 with bitmask adjacency rows.

Everything in the package passes :class:`Graph` values around.  Graphs are
immutable; the mutating-looking helpers (``add_edge``, ``delete_edge``, ...)
return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ContractError, Graph6Error

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ContractError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise ContractError(f"row {v} has a self-loop or out-of-range bit")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ContractError(f"adjacency not symmetric at ({v}, {w})")

    @classmethod
    def trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Skip validation; callers guarantee symmetric, loop-free rows."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if a == b or not (0 <= a < n and 0 <= b < n):
                raise ContractError(f"invalid edge ({a}, {b}) for n={n}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[Edge]:
        return [(a, b) for a in range(self.n) for b in bits(self.adj[a] >> (a + 1) << (a + 1))]

    def nonedges(self) -> list[Edge]:
        return [(a, b) for a, b in combinations(range(self.n), 2) if not self.adj[a] >> b & 1]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0..len-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(index[w] for w in bits(self.adj[v]) if w in index))
        return Graph.trusted(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[w] for w in bits(self.adj[v]))
        return Graph.trusted(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _norm(e: Sequence[int]) -> Edge:
    a, b = e
    return (a, b) if a < b else (b, a)


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    a, b = _norm(e)
    if a == b or not 0 <= a < b < g.n:
        raise ContractError(f"invalid edge {e!r}")
    if g.has_edge(a, b):
        raise ContractError(f"edge {a}{b} already present")
    rows = list(g.adj)
    rows[a] |= 1 << b
    rows[b] |= 1 << a
    return Graph.trusted(g.n, tuple(rows))


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    a, b = _norm(e)
    if not (0 <= a < b < g.n) or not g.has_edge(a, b):
        raise ContractError(f"edge {e!r} not present")
    rows = list(g.adj)
    rows[a] &= ~(1 << b)
    rows[b] &= ~(1 << a)
    return Graph.trusted(g.n, tuple(rows))


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    for e in edges:
        g = delete_edge(g, e)
    return g


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph.trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph.trusted(offset, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return g.induced([w for w in range(g.n) if w != v])


# ---------------------------------------------------------------------------
# structure


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by least vertex."""
    remaining = g.full_mask if within is None else within
    out = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        remaining &= ~comp
    return out


def components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def maximal_cliques(g: Graph) -> list[list[int]]:
    """All maximal cliques, each sorted, listed lexicographically.

    Bron-Kerbosch with pivoting; the pivot is the lowest-index vertex of
    P | X maximising |P & N(u)|.
    """
    out: list[list[int]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(list(bits(r)))
            return
        best, pivot = -1, 0
        for u in bits(p | x):
            c = (p & g.adj[u]).bit_count()
            if c > best:
                best, pivot = c, u
        for v in bits(p & ~g.adj[pivot]):
            nv = g.adj[v]
            expand(r | 1 << v, p & nv, x & nv)
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.full_mask, 0)
    out.sort()
    return out


def _lowpoint_dfs(g: Graph):
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = set()
    bridge_list = []
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridge_list.append(_norm((parent, v)))
                if parent != root and low[v] >= disc[parent]:
                    cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    return sorted(cut), sorted(bridge_list)


def cut_vertices(g: Graph) -> list[int]:
    return _lowpoint_dfs(g)[0]


def bridges(g: Graph) -> list[Edge]:
    return _lowpoint_dfs(g)[1]


def subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by an induced path with ``k`` new internal vertices.

    Original vertices keep their labels; the internal vertices of edge number
    ``t`` (in ``g.edges()`` order) are ``n + t*k .. n + t*k + k - 1``, running
    from the smaller endpoint to the larger.
    """
    if k < 0:
        raise ContractError("k must be non-negative")
    if k == 0:
        return g
    new_edges = []
    nxt = g.n
    for a, b in g.edges():
        path = [a, *range(nxt, nxt + k), b]
        nxt += k
        new_edges.extend(zip(path, path[1:]))
    return Graph.from_edges(nxt, new_edges)


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``inf`` for forests)."""
    best = float("inf")
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def is_forest(g: Graph) -> bool:
    return g.num_edges() == g.n - len(component_masks(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.num_edges() == g.n - 1


# ---------------------------------------------------------------------------
# generators


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ContractError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (P_n in the vertex-count convention)."""
    if n < 1:
        raise ContractError("paths need n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ContractError("part sizes must be non-negative")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return complete_bipartite(1, leaves)


def matching(m: int) -> Graph:
    """mK_2."""
    return Graph.from_edges(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])


@dataclass(frozen=True)
class SpiderSpec:
    legs: int
    height: int | tuple[int, ...]

    def leg_lengths(self) -> tuple[int, ...]:
        if isinstance(self.height, int):
            return (self.height,) * self.legs
        return tuple(self.height)


def spider(spec: SpiderSpec | int, height: int | Sequence[int] | None = None) -> Graph:
    """Spider with head 0; leg ``i`` occupies a consecutive block of labels."""
    if not isinstance(spec, SpiderSpec):
        h = height if isinstance(height, int) else tuple(height or ())
        spec = SpiderSpec(spec, h)
    lengths = spec.leg_lengths()
    if spec.legs < 1 or len(lengths) != spec.legs or min(lengths) < 1:
        raise ContractError(f"invalid spider {spec}")
    edges = []
    nxt = 1
    for q in lengths:
        prev = 0
        for _ in range(q):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def spider_legs(spec: SpiderSpec) -> list[list[int]]:
    """Vertex sequences head..leaf of each leg of ``spider(spec)``."""
    legs = []
    nxt = 1
    for q in spec.leg_lengths():
        legs.append([0, *range(nxt, nxt + q)])
        nxt += q
    return legs


def cycle_with_pendant(n: int) -> Graph:
    """C'_n: a cycle C_n and a K_2 sharing one vertex (the pendant is vertex n)."""
    return Graph.from_edges(n + 1, [*cycle(n).edges(), (0, n)])


def cycle_with_chord(n: int) -> Graph:
    """C~_n: C_n plus the chord joining two vertices at distance 2 (0 and 2)."""
    if n < 4:
        raise ContractError("C~_n needs n >= 4")
    return add_edge(cycle(n), (0, 2))


def cycle_with_path(cycle_len: int, path_len: int) -> Graph:
    """A cycle with a pendant path of ``path_len`` edges attached at vertex 0."""
    if path_len < 1:
        raise ContractError("path length must be >= 1")
    edges = cycle(cycle_len).edges()
    prev = 0
    for v in range(cycle_len, cycle_len + path_len):
        edges.append((prev, v))
        prev = v
    return Graph.from_edges(cycle_len + path_len, edges)


_NAMED = {
    "K": complete,
    "C": cycle,
    "P": path,
    "S": star,
    "M": matching,
}


def make(name: str, *params: int) -> Graph:
    """Generator dispatch: ``make("K", 4)``, ``make("Kab", 2, 3)``, ``make("spider", 3, 2)``..."""
    if name in _NAMED:
        return _NAMED[name](*params)
    if name == "Kab":
        return complete_bipartite(*params)
    if name == "spider":
        legs, *heights = params
        return spider(SpiderSpec(legs, heights[0] if len(heights) == 1 else tuple(heights)))
    if name == "Cprime":
        return cycle_with_pendant(*params)
    if name == "Ctilde":
        return cycle_with_chord(*params)
    raise ContractError(f"unknown generator {name!r}")


# ---------------------------------------------------------------------------
# graph6


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_size_prefix(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside 63..126", i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size field", len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size field", len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = n << 6 | v
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - pos < need:
        raise Graph6Error(f"expected {need} data bytes, found {len(vals) - pos}", len(vals))
    if len(vals) - pos > need:
        raise Graph6Error("trailing bytes after graph data", pos + need)
    rows = [0] * n
    k = 0
    data = vals[pos:]
    for j in range(1, n):
        for i in range(j):
            if data[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and data[-1] & ((1 << (6 * need - k)) - 1):
        raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph(n, tuple(rows))


def parse_adjacency_list(text: str) -> Graph:
    """Convenience format: first token n, then whitespace-separated ``a-b`` edges."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ContractError("empty adjacency text")
    n = int(tokens[0])
    edges = []
    for tok in tokens[1:]:
        a, _, b = tok.partition("-")
        edges.append((int(a), int(b)))
    return Graph.from_edges(n, edges)
