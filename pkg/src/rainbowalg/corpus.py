"""Small-graph test corpora.

Non-isomorphic graphs come from the networkx graph atlas (all graphs on
up to seven vertices); vertices are shifted to 1-based labels and edges
sorted, so every corpus graph has a reproducible edge order.
"""

from __future__ import annotations

import networkx as nx

from .graph import Graph, diameter, generate, is_connected

__all__ = ["atlas_graphs", "rainbow_corpus", "named_families"]


def _from_nx(g: nx.Graph) -> Graph:
    return Graph(g.number_of_nodes(), tuple(sorted((u + 1, v + 1) for u, v in g.edges())))


def atlas_graphs(max_n: int, min_n: int = 1) -> list[tuple[str, Graph]]:
    """Every graph on ``min_n..max_n`` vertices up to isomorphism (``max_n <= 7``)."""
    if max_n > 7:
        raise ValueError("the atlas stops at seven vertices")
    out = []
    for idx, g in enumerate(nx.graph_atlas_g()):
        if min_n <= g.number_of_nodes() <= max_n:
            out.append((f"atlas{idx}", _from_nx(g)))
    return out


def named_families(max_n: int = 6) -> list[tuple[str, Graph]]:
    """Complete graphs, stars, C_4, C_5 and wheels with at most ``max_n`` vertices."""
    out = [(f"K{n}", generate("complete", n)) for n in range(2, max_n + 1)]
    out += [(f"K1,{n}", generate("star", n)) for n in range(2, max_n)]
    out += [("C4", generate("cycle", 4)), ("C5", generate("cycle", 5))]
    out += [(f"W{n}", generate("wheel", n)) for n in range(3, max_n)]
    return out


def rainbow_corpus(max_n: int = 6) -> list[tuple[str, Graph]]:
    """Connected graphs with diameter at most 2 on ``2..max_n`` vertices, plus the named families."""
    out = [(name, g) for name, g in atlas_graphs(max_n, 2)
           if is_connected(g) and diameter(g) <= 2]
    return out + named_families(max_n)
