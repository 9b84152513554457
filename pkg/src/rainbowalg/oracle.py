"""Brute-force ground truth for every algebraic verdict.

All searches enumerate assignments in lexicographic order (first
coordinate slowest) in numpy chunks and refuse to start when the
assignment count exceeds ``budget``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import BudgetExceededError, DisconnectedGraphError
from .graph import Graph, diameter, is_connected, simple_paths
from .poly import PolySystem

__all__ = [
    "DEFAULT_BUDGET",
    "EdgeColoring",
    "RainbowChecker",
    "rainbow_connected",
    "find_rainbow_coloring",
    "rc_at_most",
    "rc_exact",
    "chromatic_feasible",
    "stable_set_count",
    "solve_bruteforce",
    "count_solutions",
]

DEFAULT_BUDGET = 2 ** 24
_CHUNK = 1 << 15


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    palette: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(not 0 <= c < self.palette for c in self.colors):
            raise ValueError(f"colors must lie in 0..{self.palette - 1}")


def _check_budget(count: int, budget: int, what: str):
    if count > budget:
        raise BudgetExceededError(f"{what}: {count} assignments exceed budget {budget}")


def _assignments(base: int, width: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the lexicographic enumeration of ``range(base)**width``."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.int64)
    for j in range(width - 1, -1, -1):
        out[:, j] = idx % base
        idx //= base
    return out


class RainbowChecker:
    """Rainbow-connectivity test for a fixed graph and palette size.

    A rainbow path never repeats a color, so only simple paths with at most
    ``palette`` edges need to be considered.
    """

    def __init__(self, g: Graph, palette: int):
        if not is_connected(g):
            raise DisconnectedGraphError("rainbow connectivity is undefined for disconnected graphs")
        self.graph = g
        self.palette = palette
        # per non-adjacent pair: list of paths, each a list of edge-index pairs (0-based)
        self.requirements: list[list[list[tuple[int, int]]]] = []
        for i in range(1, g.n + 1):
            for j in range(i + 1, g.n + 1):
                if g.has_edge(i, j):
                    continue
                paths = simple_paths(g, i, j, palette) if palette >= 1 else []
                self.requirements.append([
                    [(a - 1, b - 1) for a, b in combinations(p.edge_indices, 2)] for p in paths
                ])

    def check(self, colors: Sequence[int]) -> bool:
        return bool(self.check_many(np.asarray([colors], dtype=np.int64))[0])

    def check_many(self, colorings: np.ndarray) -> np.ndarray:
        ok = np.ones(colorings.shape[0], dtype=bool)
        for paths in self.requirements:
            reach = np.zeros_like(ok)
            for pairs in paths:
                rainbow = np.ones_like(ok)
                for a, b in pairs:
                    rainbow &= colorings[:, a] != colorings[:, b]
                reach |= rainbow
            ok &= reach
            if not ok.any():
                break
        return ok


def rainbow_connected(g: Graph, coloring: EdgeColoring | Sequence[int], palette: int | None = None) -> bool:
    """True iff every vertex pair is joined by a path with pairwise distinct edge colors."""
    if isinstance(coloring, EdgeColoring):
        colors, palette = coloring.colors, coloring.palette
    else:
        colors = tuple(coloring)
        if palette is None:
            palette = max(colors, default=-1) + 1
        coloring = EdgeColoring(colors, palette)
    if len(colors) != g.m:
        raise ValueError(f"coloring has {len(colors)} entries, graph has {g.m} edges")
    return RainbowChecker(g, palette).check(colors)


def find_rainbow_coloring(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """First rainbow-connecting coloring in ``{0..k-1}**m`` with ``e_1`` colored 0.

    Fixing the first edge's color loses nothing: colors can be permuted.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("rainbow connectivity is undefined for disconnected graphs")
    if g.m == 0:
        return ()
    if k < 1 or diameter(g) > k:
        return None
    free = g.m - 1
    total = k ** free
    _check_budget(total, budget, f"rainbow colorings with {k} colors")
    checker = RainbowChecker(g, k)
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        block = np.zeros((stop - start, g.m), dtype=np.int64)
        block[:, 1:] = _assignments(k, free, start, stop)
        hits = np.flatnonzero(checker.check_many(block))
        if hits.size:
            return tuple(int(c) for c in block[hits[0]])
    return None


def rc_at_most(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Decide ``rc(g) <= k`` exhaustively."""
    return find_rainbow_coloring(g, k, budget) is not None


def rc_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Rainbow connection number: the least palette admitting a rainbow-connecting coloring."""
    if not is_connected(g):
        raise DisconnectedGraphError("rainbow connectivity is undefined for disconnected graphs")
    if g.n <= 1:
        return 0
    k = int(diameter(g))
    while not rc_at_most(g, k, budget):
        k += 1
    return k


def chromatic_feasible(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff ``g`` has a proper vertex coloring with ``k`` colors."""
    if g.n == 0:
        return True
    if k < 1:
        return False
    total = k ** g.n
    _check_budget(total, budget, f"vertex colorings with {k} colors")
    us = np.array([u - 1 for u, _ in g.edges], dtype=np.int64)
    vs = np.array([v - 1 for _, v in g.edges], dtype=np.int64)
    for start in range(0, total, _CHUNK):
        block = _assignments(k, g.n, start, min(total, start + _CHUNK))
        proper = np.all(block[:, us] != block[:, vs], axis=1) if g.m else np.ones(len(block), bool)
        if proper.any():
            return True
    return False


def stable_set_count(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of stable sets with exactly ``k`` vertices."""
    total = 2 ** g.n
    _check_budget(total, budget, "vertex subsets")
    us = np.array([u - 1 for u, _ in g.edges], dtype=np.int64)
    vs = np.array([v - 1 for _, v in g.edges], dtype=np.int64)
    count = 0
    for start in range(0, total, _CHUNK):
        block = _assignments(2, g.n, start, min(total, start + _CHUNK))
        ok = block.sum(axis=1) == k
        if g.m:
            ok &= ~np.any((block[:, us] == 1) & (block[:, vs] == 1), axis=1)
        count += int(ok.sum())
    return count


def _domains(sys: PolySystem, domain) -> list[list[int]]:
    if domain is None:
        domain = sys.field.elements()
    if domain and isinstance(domain[0], (list, tuple)):
        if len(domain) != sys.nvars:
            raise ValueError(f"need {sys.nvars} per-variable domains, got {len(domain)}")
        return [[sys.field(v) for v in d] for d in domain]
    return [[sys.field(v) for v in domain] for _ in range(sys.nvars)]


def _satisfying(sys: PolySystem, domains: list[list[int]], budget: int, first_only: bool):
    sizes = [len(d) for d in domains]
    total = int(np.prod(sizes, dtype=object)) if sizes else 1
    _check_budget(total, budget, "candidate points")
    if any(s == 0 for s in sizes):
        return
    table = [np.asarray(d, dtype=object if not sys.field.char else np.int64) for d in domains]
    n = sys.nvars
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = np.empty((stop - start, n), dtype=np.int64)
        for j in range(n - 1, -1, -1):
            digits[:, j] = idx % sizes[j]
            idx //= sizes[j]
        if sys.field.char:
            points = np.empty_like(digits)
            for j in range(n):
                points[:, j] = table[j][digits[:, j]]
            ok = np.ones(stop - start, dtype=bool)
            for f in sys.polys:
                live = np.flatnonzero(ok)
                if not live.size:
                    break
                ok[live] = f.evaluate_many(points[live]) == 0
            for r in np.flatnonzero(ok):
                yield tuple(int(v) for v in points[r])
                if first_only:
                    return
        else:
            for row in digits:
                pt = tuple(domains[j][d] for j, d in enumerate(row))
                if sys.is_satisfied_by(pt):
                    yield pt
                    if first_only:
                        return


def solve_bruteforce(sys: PolySystem, domain=None, budget: int = DEFAULT_BUDGET):
    """First common zero of ``sys`` over ``domain`` in lexicographic order, or None.

    ``domain`` is one value list shared by every variable, a list of
    per-variable value lists, or None for the whole (prime) field.
    """
    for pt in _satisfying(sys, _domains(sys, domain), budget, first_only=True):
        return pt
    return None


def count_solutions(sys: PolySystem, domain=None, budget: int = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in _satisfying(sys, _domains(sys, domain), budget, first_only=False))
