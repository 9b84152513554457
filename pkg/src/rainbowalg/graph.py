"""Simple undirected graphs with 1-indexed vertices and indexed edges.

Edge ``i`` (1-based) names the polynomial variable ``x_i`` in every
edge-variable encoding, so the edge order is part of a graph's identity.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    DimacsError,
    DuplicateEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexOutOfRangeError,
)

__all__ = [
    "Graph",
    "Path",
    "parse_dimacs",
    "to_dimacs",
    "generate",
    "diameter",
    "is_connected",
    "simple_paths",
    "non_adjacent_pairs",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``1..n``.

    ``edges[i - 1]`` is edge ``e_i``; each pair is stored as ``(min, max)``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= self.n:
                    raise VertexOutOfRangeError(f"vertex {w} outside 1..{self.n}")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise DuplicateEdgeError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, dict[int, int]]:
        """``adjacency[u][v]`` is the 1-based index of edge ``{u, v}``."""
        adj: dict[int, dict[int, int]] = {v: {} for v in range(1, self.n + 1)}
        for idx, (u, v) in enumerate(self.edges, start=1):
            adj[u][v] = idx
            adj[v][u] = idx
        return adj

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, {})

    def edge_index(self, u: int, v: int) -> int:
        return self.adjacency[u][v]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple(edges))


@dataclass(frozen=True)
class Path:
    """A simple path: its vertex sequence and the indices of traversed edges."""

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.edge_indices)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format (``c`` comments, ``p edge n m``, ``e u v`` lines)."""
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise MalformedHeaderError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise MalformedHeaderError(f"expected 'p edge n m', got {line!r}", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedHeaderError(f"non-integer sizes in {line!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise MalformedHeaderError("negative sizes", lineno)
        elif parts[0] == "e":
            if n is None:
                raise MalformedHeaderError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise DimacsError(f"expected 'e u v', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"non-integer vertex in {line!r}", lineno) from None
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}", lineno)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise VertexOutOfRangeError(f"vertex {w} outside 1..{n}", lineno)
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise DuplicateEdgeError(f"duplicate edge {pair}", lineno)
            seen.add(pair)
            edges.append(pair)
        else:
            raise DimacsError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise MalformedHeaderError("missing problem line")
    if declared_m != len(edges):
        raise MalformedHeaderError(f"header declares {declared_m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def generate(kind: str, n: int) -> Graph:
    """Build a named graph family with a fixed edge order.

    ``star``: center 1, leaves ``2..n+1``, ``e_i = (1, i+1)``; ``n`` counts leaves.
    ``cycle``: ``e_i = (v_i, v_{i+1 mod n})``.
    ``path``: ``n`` vertices, ``e_i = (v_i, v_{i+1})``.
    ``complete``: pairs in lexicographic order.
    ``wheel``: hub ``n+1`` over the cycle on ``1..n``; rim edges first, then spokes.
    """
    minimum = {"star": 1, "cycle": 3, "path": 1, "complete": 1, "wheel": 3}
    if kind not in minimum:
        raise ValueError(f"unknown graph kind {kind!r}")
    if n < minimum[kind]:
        raise ValueError(f"{kind} needs n >= {minimum[kind]}, got {n}")
    if kind == "star":
        return Graph(n + 1, tuple((1, i + 1) for i in range(1, n + 1)))
    if kind == "cycle":
        return Graph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))
    if kind == "path":
        return Graph(n, tuple((i, i + 1) for i in range(1, n)))
    if kind == "complete":
        return Graph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))
    rim = tuple((i, i % n + 1) for i in range(1, n + 1))
    return Graph(n + 1, rim + tuple((i, n + 1) for i in range(1, n + 1)))


def _bfs(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(_bfs(g, 1)) == g.n


def diameter(g: Graph) -> float:
    """Longest shortest-path distance; ``math.inf`` for disconnected graphs."""
    best = 0
    for s in range(1, g.n + 1):
        dist = _bfs(g, s)
        if len(dist) < g.n:
            return math.inf
        best = max(best, max(dist.values()))
    return best


def _walk(g: Graph, target: int, max_len: int, stack: list[int], edges: list[int],
          on_path: set[int]) -> Iterator[Path]:
    u = stack[-1]
    for w in g.neighbors(u):
        if w in on_path:
            continue
        stack.append(w)
        edges.append(g.adjacency[u][w])
        if w == target:
            yield Path(tuple(stack), tuple(edges))
        elif len(edges) < max_len:
            on_path.add(w)
            yield from _walk(g, target, max_len, stack, edges, on_path)
            on_path.discard(w)
        stack.pop()
        edges.pop()


def simple_paths(g: Graph, u: int, v: int, max_len: int) -> list[Path]:
    """All simple ``u``-``v`` paths with at most ``max_len`` edges, in lexicographic
    order of their vertex sequences."""
    if u == v:
        raise ValueError("endpoints must differ")
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    return list(_walk(g, v, max_len, [u], [], {u}))


def non_adjacent_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, g.n + 1) for j in range(i + 1, g.n + 1)
            if not g.has_edge(i, j)]
