"""Deciding rc(G) <= 2 by ideal membership.

The triple products ``(x_i - x_j)(x_i - x_k)(x_j - x_k)`` form a universal
Gröbner basis of the ideal of points with at most two distinct
coordinates. The graph polynomial (a product of path polynomials over all
vertex pairs) lies in that ideal exactly when no 2-coloring of the edges is
rainbow connecting, so a zero remainder means rc(G) >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .encoders import check_rainbow_preconditions
from .errors import BudgetExceededError, DiameterGateError, PreconditionError
from .graph import Graph, simple_paths
from .poly import GRLEX, QQ, MonomialOrder, Polynomial, divide

__all__ = [
    "DEFAULT_TERM_CAP",
    "MembershipVerdict",
    "triple_basis",
    "path_polynomial",
    "graph_polynomial",
    "rc2_membership",
]

DEFAULT_TERM_CAP = 150_000

RC_AT_MOST_2 = "rc<=2"
RC_AT_LEAST_3 = "rc>=3"


@dataclass(frozen=True)
class MembershipVerdict:
    decision: str  # "rc<=2" | "rc>=3"
    reason: str  # "remainderNonzero" | "remainderZero" | "diameterGate"
    remainder: Polynomial
    order: str = "grlex"
    graph_poly_terms: int = 0

    @property
    def rc_at_least_3(self) -> bool:
        return self.decision == RC_AT_LEAST_3

    def to_json(self, emit_remainder: bool = False) -> dict:
        out = {"decision": self.decision, "reason": self.reason, "order": self.order,
               "graphPolyTerms": self.graph_poly_terms,
               "remainderTerms": len(self.remainder)}
        if emit_remainder:
            out["remainder"] = self.remainder.to_json()
        return out


def triple_basis(m: int) -> list[Polynomial]:
    """``(x_i - x_j)(x_i - x_k)(x_j - x_k)`` for all ``1 <= i < j < k <= m``."""
    if m < 1:
        raise ValueError("need at least one variable")
    xs = Polynomial.variables(QQ, m)
    return [(xs[i] - xs[j]) * (xs[i] - xs[k]) * (xs[j] - xs[k])
            for i, j, k in combinations(range(m), 3)]


def path_polynomial(g: Graph, i: int, j: int) -> Polynomial:
    """1 for adjacent ``i, j``; else the sum of ``(x_a - x_b)**2`` over 2-edge paths."""
    if i == j:
        raise ValueError("path polynomials need distinct endpoints")
    if g.has_edge(i, j):
        return Polynomial.one(QQ, g.m)
    xs = Polynomial.variables(QQ, g.m)
    paths = simple_paths(g, i, j, 2)
    if not paths:
        raise PreconditionError(f"vertices {i} and {j} are more than two edges apart")
    total = Polynomial.zero(QQ, g.m)
    for path in paths:
        a, b = path.edge_indices
        total = total + (xs[a - 1] - xs[b - 1]) ** 2
    return total


def graph_polynomial(g: Graph, term_cap: int = DEFAULT_TERM_CAP) -> Polynomial:
    """Expanded product of all path polynomials.

    Raises :class:`BudgetExceededError` once an intermediate product has more
    than ``term_cap`` terms.
    """
    check_rainbow_preconditions(g, 2)
    f = Polynomial.one(QQ, g.m)
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            if g.has_edge(i, j):
                continue
            f = f * path_polynomial(g, i, j)
            if len(f) > term_cap:
                raise BudgetExceededError(
                    f"graph polynomial exceeds {term_cap} terms (reached {len(f)})")
    return f


def rc2_membership(g: Graph, order: MonomialOrder = GRLEX,
                   term_cap: int = DEFAULT_TERM_CAP) -> MembershipVerdict:
    """Divide the graph polynomial by the triple basis; zero remainder means rc >= 3."""
    try:
        check_rainbow_preconditions(g, 2)
    except DiameterGateError:
        return MembershipVerdict(RC_AT_LEAST_3, "diameterGate", Polynomial.zero(QQ, g.m), order.kind)
    f = graph_polynomial(g, term_cap)
    basis = triple_basis(g.m) if g.m else []
    _, r = divide(f, basis, order)
    if r.is_zero():
        return MembershipVerdict(RC_AT_LEAST_3, "remainderZero", r, order.kind, len(f))
    return MembershipVerdict(RC_AT_MOST_2, "remainderNonzero", r, order.kind, len(f))
