"""Nullstellensatz certificate search by linear algebra over GF(p).

For a degree ``d`` every cofactor ``h_i`` is written with unknown
coefficients on all monomials of degree ``<= d``. Expanding
``sum(h_i * f_i) == 1`` coefficient by coefficient gives a linear system in
those unknowns; a solution is a certificate that the ``f_i`` have no common
zero over the algebraic closure of GF(p).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import oracle
from .errors import FieldError
from .poly import GRLEX, Polynomial, PolySystem, monomials_up_to, roots_of_unity

__all__ = [
    "Certificate",
    "SearchOutcome",
    "certificate_at_degree",
    "search_certificate",
    "verify_certificate",
    "default_degree_bound",
    "kollar_bound",
    "rref_solve",
    "witness_domain",
]


@dataclass(frozen=True)
class Certificate:
    degree: int
    cofactors: tuple[Polynomial, ...]

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "cofactors": [h.to_json()["terms"] for h in self.cofactors]}

    @classmethod
    def from_json(cls, data: dict, sys: PolySystem) -> "Certificate":
        fjson = sys.field.to_json()
        hs = tuple(Polynomial.from_json({"field": fjson, "vars": sys.nvars, "terms": t})
                   for t in data["cofactors"])
        return cls(int(data["degree"]), hs)


@dataclass(frozen=True)
class SearchOutcome:
    """Exactly one of: a certificate, a feasible witness, or exhaustion at ``degree_cap``."""

    kind: str  # "certificate" | "witness" | "exhausted"
    degree_cap: int
    certificate: Certificate | None = None
    witness: tuple[int, ...] | None = None
    degrees_tried: tuple[int, ...] = field(default=())

    @property
    def infeasible(self) -> bool:
        return self.kind == "certificate"

    def to_json(self) -> dict:
        out = {"outcome": self.kind, "degreeCap": self.degree_cap,
               "degreesTried": list(self.degrees_tried)}
        if self.certificate is not None:
            out.update(self.certificate.to_json())
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def default_degree_bound(sys: PolySystem) -> int:
    """``n * (d - 1)`` with ``n`` variables and maximum equation degree ``d``; at least 0."""
    return max(0, sys.nvars * (sys.max_degree - 1))


def kollar_bound(sys: PolySystem) -> int:
    """``max(3, d) ** n``; exposed for experiments, never used as a default."""
    return max(3, sys.max_degree) ** sys.nvars


def rref_solve(matrix: np.ndarray, rhs: np.ndarray, p: int) -> np.ndarray | None:
    """Solve ``matrix @ x == rhs`` over GF(p) by reduced row echelon form.

    Free variables are set to zero, so the answer is the unique solution
    supported on the pivot columns. Returns None if the system is inconsistent.
    """
    rows, cols = matrix.shape
    a = np.concatenate([matrix % p, (rhs % p).reshape(-1, 1)], axis=1).astype(np.int64)
    pivots: list[int] = []
    r = 0
    for j in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, j])
        if not nz.size:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, j]), -1, p)
        if inv != 1:
            a[r, j:] = a[r, j:] * inv % p
        others = np.flatnonzero(a[:, j])
        others = others[others != r]
        if others.size:
            if p == 2:
                a[np.ix_(others, np.arange(j, cols + 1))] ^= a[r, j:]
            else:
                block = a[np.ix_(others, np.arange(j, cols + 1))]
                block -= np.outer(a[others, j], a[r, j:])
                a[np.ix_(others, np.arange(j, cols + 1))] = block % p
        pivots.append(j)
        r += 1
    if np.any(a[r:, cols]):
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, j in enumerate(pivots):
        x[j] = a[i, cols]
    return x


def _require_prime(sys: PolySystem):
    if not sys.field.char:
        raise FieldError("certificate search runs over prime fields only")


def certificate_at_degree(sys: PolySystem, d: int) -> Certificate | None:
    """A degree-``d`` certificate for ``sys``, or None if none exists.

    Unknowns are ordered by equation, then by monomial (grlex, largest
    first); the solve is canonical, so equal inputs give equal certificates.
    """
    _require_prime(sys)
    if d < 0 or not sys.polys:
        return None
    p, n = sys.field.char, sys.nvars
    unit = (0,) * n
    monos = monomials_up_to(n, d, GRLEX)
    row_of: dict[tuple[int, ...], int] = {unit: 0}
    entries: list[tuple[int, int, int]] = []
    col = 0
    for f in sys.polys:
        for mu in monos:
            for m, c in f.terms.items():
                prod = tuple(a + b for a, b in zip(mu, m))
                r = row_of.setdefault(prod, len(row_of))
                entries.append((r, col, c))
            col += 1
    matrix = np.zeros((len(row_of), col), dtype=np.int64)
    for r, c_idx, c in entries:
        matrix[r, c_idx] = (matrix[r, c_idx] + c) % p
    rhs = np.zeros(len(row_of), dtype=np.int64)
    rhs[0] = 1
    x = rref_solve(matrix, rhs, p)
    if x is None:
        return None
    cofactors = []
    for i in range(len(sys.polys)):
        chunk = x[i * len(monos):(i + 1) * len(monos)]
        cofactors.append(Polynomial(sys.field, n, {mu: int(v) for mu, v in zip(monos, chunk) if v}))
    cert = Certificate(d, tuple(cofactors))
    if not verify_certificate(sys, cert):
        raise AssertionError("linear solve produced an invalid certificate")
    return cert


def verify_certificate(sys: PolySystem, cert: Certificate) -> bool:
    """Expand ``sum(h_i * f_i)`` exactly and compare with the constant 1."""
    if len(cert.cofactors) != len(sys.polys):
        raise ValueError(f"{len(cert.cofactors)} cofactors for {len(sys.polys)} equations")
    total = Polynomial.zero(sys.field, sys.nvars)
    for h, f in zip(cert.cofactors, sys.polys):
        if h.field != sys.field or h.nvars != sys.nvars:
            raise FieldError("cofactor field or variable count differs from the system")
        total = total + h * f
    return total == Polynomial.one(sys.field, sys.nvars)


def witness_domain(sys: PolySystem) -> list[int]:
    """Values a common zero can take, judged from the system's provenance.

    Encodings carrying ``x**k - 1`` or ``x**2 - x`` for every variable pin
    solutions to roots of unity or to {0, 1}; otherwise the whole field.
    """
    p = sys.field.char
    if sys.problem in ("vcolor", "rck") and sys.k and (p - 1) % sys.k == 0:
        return roots_of_unity(p, sys.k)
    if sys.problem == "stable":
        return [0, 1]
    return sys.field.elements()


def search_certificate(sys: PolySystem, max_degree: int | str | None = "auto",
                       witness_search: bool = False,
                       domain: Sequence[int] | None = None,
                       budget: int = oracle.DEFAULT_BUDGET) -> SearchOutcome:
    """Try degrees ``0, 1, ...`` up to ``max_degree`` and return the first certificate.

    ``"auto"`` caps at ``default_degree_bound`` (at least 1). With
    ``witness_search`` a brute-force pass over ``domain`` runs first, and a
    common zero settles feasibility without any linear algebra.
    """
    _require_prime(sys)
    if max_degree in ("auto", None):
        cap = max(1, default_degree_bound(sys))
    else:
        cap = int(max_degree)
    if not sys.polys:
        return SearchOutcome("witness", cap, witness=(0,) * sys.nvars)
    if witness_search:
        pt = oracle.solve_bruteforce(sys, list(domain) if domain is not None else witness_domain(sys),
                                     budget)
        if pt is not None:
            return SearchOutcome("witness", cap, witness=pt)
    tried = []
    for d in range(cap + 1):
        tried.append(d)
        cert = certificate_at_degree(sys, d)
        if cert is not None:
            return SearchOutcome("certificate", cap, certificate=cert, degrees_tried=tuple(tried))
    return SearchOutcome("exhausted", cap, degrees_tried=tuple(tried))
