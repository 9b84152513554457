"""Polynomial encodings of graph problems.

Each encoder returns a :class:`~rainbowalg.poly.PolySystem` whose common
zeros correspond to solutions of the graph problem:

* vertex k-coloring and stable sets use one variable per vertex;
* 2- and k-rainbow connectivity use one variable per edge (``x_i`` for ``e_i``).

Complex roots of unity are replaced by GF(p) with ``p = field_for_k(k)``.
On a path of at most ``k`` edges every edge-pair term evaluates to 0
(distinct colors) or ``k**k`` (equal colors), so a path factor is ``k**k``
times the number of monochromatic pairs, which is below ``p``; the factor
therefore vanishes exactly on rainbow paths.
"""

from __future__ import annotations

from .errors import BudgetExceededError, DiameterGateError, DisconnectedGraphError, FieldError
from .graph import Graph, diameter, is_connected, non_adjacent_pairs, simple_paths
from .poly import Field, GF, Polynomial, PolySystem, is_prime

__all__ = [
    "DEFAULT_PATH_CAP",
    "field_for_k",
    "encode_vertex_coloring",
    "encode_stable_set",
    "encode_rc2",
    "encode_rck",
    "encode",
    "check_rainbow_preconditions",
]

DEFAULT_PATH_CAP = 100_000


def field_for_k(k: int) -> int:
    """Smallest prime ``p`` with ``p % k == 1`` and ``p > k*(k-1)/2``."""
    if k < 2:
        raise ValueError("field_for_k needs k >= 2")
    p = k + 1
    while not (p % k == 1 and 2 * p > k * (k - 1) and is_prime(p)):
        p += 1
    return p


def _prime_above(n: int) -> int:
    p = n + 1
    while not is_prime(p):
        p += 1
    return p


def _edge_sum(xi: Polynomial, xj: Polynomial, k: int) -> Polynomial:
    # sum_{d=0}^{k-1} xi^(k-1-d) xj^d, i.e. (xi^k - xj^k) / (xi - xj)
    total = Polynomial.zero(xi.field, xi.nvars)
    for d in range(k):
        total = total + xi ** (k - 1 - d) * xj ** d
    return total


def encode_vertex_coloring(g: Graph, k: int, field: Field | None = None) -> PolySystem:
    """``x_i**k - 1`` per vertex and the k-term edge sum per edge."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if field is None:
        field = GF(field_for_k(k)) if k >= 2 else GF(2)
    if field.char and (field.char - 1) % k:
        raise FieldError(f"{field} lacks the {k}-th roots of unity ({k} does not divide {field.char - 1})")
    xs = Polynomial.variables(field, g.n)
    polys = [x ** k - 1 for x in xs]
    polys += [_edge_sum(xs[u - 1], xs[v - 1], k) for u, v in g.edges]
    return PolySystem(field, g.n, tuple(polys), "vcolor", k, "vertices")


def encode_stable_set(g: Graph, k: int, field: Field | None = None) -> PolySystem:
    """Stable sets of size ``k`` as 0/1 points: ``x_i**2 - x_i``, ``x_i*x_j``, ``sum x_i - k``.

    Defaults to GF(p) for the smallest prime ``p > n`` so the system can go
    straight to certificate search; any such field (or Q) counts correctly.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if field is None:
        field = GF(_prime_above(g.n))
    if field.char and field.char <= g.n:
        raise FieldError(f"stable-set encoding needs characteristic 0 or p > n = {g.n}, got {field}")
    xs = Polynomial.variables(field, g.n)
    polys = [x * x - x for x in xs]
    polys += [xs[u - 1] * xs[v - 1] for u, v in g.edges]
    total = Polynomial.constant(-k, field, g.n)
    for x in xs:
        total = total + x
    polys.append(total)
    return PolySystem(field, g.n, tuple(polys), "stable", k, "vertices")


def check_rainbow_preconditions(g: Graph, k: int) -> float:
    """Raise unless ``g`` is connected with diameter at most ``k``; return the diameter."""
    if not is_connected(g):
        raise DisconnectedGraphError("rainbow connectivity is undefined for disconnected graphs")
    diam = diameter(g)
    if diam > k:
        raise DiameterGateError(diam, k)
    return diam


def encode_rc2(g: Graph) -> PolySystem:
    """One GF(2) equation per non-adjacent pair: the product over its 2-edge
    paths ``e_a, e_b`` of ``x_a + x_b + 1``."""
    check_rainbow_preconditions(g, 2)
    field = GF(2)
    xs = Polynomial.variables(field, g.m)
    polys = []
    for i, j in non_adjacent_pairs(g):
        factor = Polynomial.one(field, g.m)
        for path in simple_paths(g, i, j, 2):
            a, b = path.edge_indices
            factor = factor * (xs[a - 1] + xs[b - 1] + 1)
        polys.append(factor)
    return PolySystem(field, g.m, tuple(polys), "rc2", 2, "edges")


def encode_rck(g: Graph, k: int, field: Field | None = None,
               path_cap: int = DEFAULT_PATH_CAP) -> PolySystem:
    """``x_i**k - 1`` per edge, and per non-adjacent pair the product over simple
    paths of length at most ``k`` of the summed k-th powers of edge-pair sums."""
    if k < 2:
        raise ValueError("encode_rck needs k >= 2 (rc = 1 iff the graph is complete)")
    check_rainbow_preconditions(g, k)
    if field is None:
        field = GF(field_for_k(k))
    elif not field.char or (field.char - 1) % k or 2 * field.char <= k * (k - 1):
        raise FieldError(f"{field} unsuitable for k={k}: need p = 1 mod k and p > k(k-1)/2")
    xs = Polynomial.variables(field, g.m)
    polys = [x ** k - 1 for x in xs]
    pair_terms: dict[tuple[int, int], Polynomial] = {}
    seen_paths = 0
    for i, j in non_adjacent_pairs(g):
        paths = simple_paths(g, i, j, k)
        seen_paths += len(paths)
        if seen_paths > path_cap:
            raise BudgetExceededError(f"more than {path_cap} paths of length <= {k}")
        factor = Polynomial.one(field, g.m)
        for path in paths:
            inner = Polynomial.zero(field, g.m)
            edges = path.edge_indices
            for s in range(len(edges)):
                for t in range(s + 1, len(edges)):
                    a, b = edges[s], edges[t]
                    if (a, b) not in pair_terms:
                        pair_terms[(a, b)] = _edge_sum(xs[a - 1], xs[b - 1], k) ** k
                    inner = inner + pair_terms[(a, b)]
            factor = factor * inner
        polys.append(factor)
    return PolySystem(field, g.m, tuple(polys), "rck", k, "edges")


def encode(problem: str, g: Graph, k: int | None = None, field: Field | None = None) -> PolySystem:
    """Dispatch on ``problem`` in ``vcolor``, ``stable``, ``rc2``, ``rck``."""
    if problem == "rc2":
        if field is not None and field.char != 2:
            raise FieldError("rc2 is always encoded over GF(2)")
        return encode_rc2(g)
    if k is None:
        raise ValueError(f"problem {problem!r} needs k")
    if problem == "vcolor":
        return encode_vertex_coloring(g, k, field)
    if problem == "stable":
        return encode_stable_set(g, k, field)
    if problem == "rck":
        return encode_rck(g, k, field)
    raise ValueError(f"unknown problem {problem!r}")


def path_count(g: Graph, k: int) -> int:
    """Number of simple paths of length at most ``k`` between non-adjacent pairs."""
    return sum(len(simple_paths(g, i, j, k)) for i, j in non_adjacent_pairs(g))

