from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from indsat.graph import Graph


@st.composite
def small_graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def to_nx(g: Graph) -> nx.Graph:
    x = nx.Graph()
    x.add_nodes_from(range(g.n))
    x.add_edges_from(g.edges())
    return x


def from_nx(x: nx.Graph) -> Graph:
    nodes = sorted(x.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[a], index[b]) for a, b in x.edges()])
