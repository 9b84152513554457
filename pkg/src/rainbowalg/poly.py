"""Exact sparse multivariate polynomials over GF(p) and the rationals.

A polynomial is a dict from exponent tuples to nonzero coefficients.
Coefficients are Python ints reduced mod p for prime fields; over the
rationals they are ints when integral and :class:`fractions.Fraction`
otherwise, so integer-valued work never pays for fraction arithmetic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldError

__all__ = [
    "Field",
    "QQ",
    "GF",
    "is_prime",
    "MonomialOrder",
    "Polynomial",
    "PolySystem",
    "divide",
    "leading_term",
    "root_of_unity",
    "roots_of_unity",
]

Monomial = tuple[int, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``char == 0`` is Q, otherwise GF(char)."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not is_prime(self.char):
            raise FieldError(f"characteristic {self.char} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.char != 0

    def __call__(self, value) -> int | Fraction:
        """Coerce an int, Fraction or decimal string into canonical form."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.char:
            if isinstance(value, Fraction):
                if value.denominator % self.char == 0:
                    raise FieldError(f"{value} has no image in GF({self.char})")
                return value.numerator * pow(value.denominator, -1, self.char) % self.char
            return int(value) % self.char
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        return int(value)

    def div(self, a, b):
        if self.char:
            return a * pow(b, -1, self.char) % self.char
        q = Fraction(a) / b
        return q.numerator if q.denominator == 1 else q

    def elements(self) -> list[int]:
        if not self.char:
            raise FieldError("the rationals are not enumerable")
        return list(range(self.char))

    def to_json(self) -> dict:
        return {"char": self.char}

    def __str__(self) -> str:
        return f"GF({self.char})" if self.char else "QQ"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def root_of_unity(p: int, k: int) -> int:
    """Element of exact multiplicative order ``k`` in GF(p).

    Convention: ``g ** ((p - 1) // k)`` for the smallest generator ``g``.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1 or (p - 1) % k:
        raise FieldError(f"GF({p}) has no element of order {k}: {k} does not divide {p - 1}")
    prime_factors = [q for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)]
    for g in range(1, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors):
            return pow(g, (p - 1) // k, p)
    raise AssertionError("GF(p)* is cyclic")  # pragma: no cover


def roots_of_unity(p: int, k: int) -> list[int]:
    w = root_of_unity(p, k)
    return [pow(w, i, p) for i in range(k)]


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grlex`` or ``grevlex``.

    ``precedence`` lists 1-based variable indices from most to least
    significant; the default is ``x_1 > x_2 > ... > x_m``.
    """

    kind: str = "grlex"
    precedence: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, mono: Monomial) -> tuple[int, ...]:
        """Sort key: a larger key means a larger monomial."""
        if self.precedence is not None:
            mono = tuple(mono[i - 1] for i in self.precedence)
        if self.kind == "lex":
            return mono
        deg = sum(mono)
        if self.kind == "grlex":
            return (deg, *mono)
        return (deg, *(-e for e in reversed(mono)))

    def __str__(self) -> str:
        return self.kind


GRLEX = MonomialOrder("grlex")


def _support(mono: Monomial) -> int:
    return sum(1 << i for i, e in enumerate(mono) if e)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables over ``field``."""

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: Field, nvars: int, terms: dict | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise FieldError(f"bad exponent vector {mono} for {nvars} variables")
            c = field(c)
            if c:
                clean[mono] = c
        self._set(field, nvars, clean)

    def _set(self, field, nvars, terms):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, field: Field, nvars: int, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p._set(field, nvars, terms)
        return p

    # constructors
    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Polynomial":
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, c, field: Field, nvars: int) -> "Polynomial":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, field: Field, nvars: int) -> "Polynomial":
        return cls.constant(1, field, nvars)

    @classmethod
    def var(cls, i: int, field: Field, nvars: int) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise FieldError(f"x_{i} outside x_1..x_{nvars}")
        mono = [0] * nvars
        mono[i - 1] = 1
        return cls._raw(field, nvars, {tuple(mono): 1})

    @classmethod
    def variables(cls, field: Field, nvars: int) -> list["Polynomial"]:
        return [cls.var(i, field, nvars) for i in range(1, nvars + 1)]

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    @property
    def degree(self) -> float:
        """Total degree; ``-inf`` for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=float("-inf"))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field or other.nvars != self.nvars:
                raise FieldError(
                    f"mismatched operands: {self.field}[{self.nvars}] vs {other.field}[{other.nvars}]")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.field, self.nvars)
        return NotImplemented

    def _combine(self, other, sign: int) -> "Polynomial":
        terms = dict(self.terms)
        fld = self.field
        for m, c in other.terms.items():
            v = fld(terms.get(m, 0) + sign * c)
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._raw(fld, self.nvars, terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._combine(self, -1)

    def __neg__(self):
        fld = self.field
        return Polynomial._raw(fld, self.nvars, {m: fld(-c) for m, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        fld = self.field
        terms = {}
        for m, c in acc.items():
            c = fld(c)
            if c:
                terms[m] = c
        return Polynomial._raw(fld, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a natural number")
        result = Polynomial.one(self.field, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        fld = self.field
        terms = {}
        for m, d in self.terms.items():
            v = fld(c * d)
            if v:
                terms[tuple(a + b for a, b in zip(m, mono))] = v
        return Polynomial._raw(fld, self.nvars, terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.field, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.field, self.nvars,
                                                    frozenset(self.terms.items()))))
        return self._hash

    # evaluation
    def evaluate(self, point: Sequence):
        """Exact value at ``point`` (length ``nvars``)."""
        if len(point) != self.nvars:
            raise FieldError(f"point has {len(point)} coordinates, expected {self.nvars}")
        fld = self.field
        pt = [fld(v) for v in point]
        total = 0
        for m, c in self.terms.items():
            term = c
            for v, e in zip(pt, m):
                if e:
                    term = term * v ** e
            total += term
        return fld(total)

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Vectorized evaluation over a prime field.

        ``points`` is an integer array of shape ``(N, nvars)`` with entries in
        ``0..p-1``; returns the ``N`` values mod p.
        """
        p = self.field.char
        if not p:
            raise FieldError("vectorized evaluation needs a prime field")
        points = np.asarray(points, dtype=np.int64)
        if points.ndim != 2 or points.shape[1] != self.nvars:
            raise FieldError(f"points must have shape (N, {self.nvars})")
        out = np.zeros(points.shape[0], dtype=np.int64)
        powers: dict[tuple[int, int], np.ndarray] = {}
        for m, c in self.terms.items():
            term = np.full(points.shape[0], c, dtype=np.int64)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = _pow_mod(points[:, i], e, p)
                    term = term * powers[key] % p
            out = (out + term) % p
        return out

    # ordering
    def sorted_terms(self, order: MonomialOrder = GRLEX) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = GRLEX) -> tuple[Monomial, object]:
        return leading_term(self, order)

    # serialization
    def to_json(self, order: MonomialOrder = GRLEX) -> dict:
        return {
            "field": self.field.to_json(),
            "vars": self.nvars,
            "terms": [[str(c), list(m)] for m, c in self.sorted_terms(order)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        fld = Field(int(data["field"]["char"]))
        n = int(data["vars"])
        terms: dict = {}
        for c, m in data["terms"]:
            m = tuple(m)
            terms[m] = terms.get(m, 0) + Fraction(c)
        return cls(fld, n, terms)

    def __repr__(self) -> str:
        return f"Polynomial({self}, {self.field})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)


def _pow_mod(x: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.ones_like(x)
    base = x % p
    while e:
        if e & 1:
            result = result * base % p
        e >>= 1
        base = base * base % p
    return result


def leading_term(f: Polynomial, order: MonomialOrder = GRLEX) -> tuple[Monomial, object]:
    """Largest monomial of ``f`` under ``order`` together with its coefficient."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading term")
    mono = max(f.terms, key=order.key)
    return mono, f.terms[mono]


def divide(f: Polynomial, divisors: Sequence[Polynomial],
           order: MonomialOrder = GRLEX) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division of ``f`` by ``divisors``.

    At each step the current leading term is cancelled by the first divisor
    (in list order) whose leading monomial divides it, otherwise it moves to
    the remainder. Returns ``(quotients, remainder)`` with
    ``f == sum(q * g) + remainder``.
    """
    if not divisors:
        return [], f
    fld, n = f.field, f.nvars
    leads = []
    for g in divisors:
        if g.field != fld or g.nvars != n:
            raise FieldError("divisors must share the dividend's field and variable count")
        if g.is_zero():
            raise ValueError("cannot divide by the zero polynomial")
        lm, lc = leading_term(g, order)
        rest = [(m, c) for m, c in g.terms.items() if m != lm]
        leads.append((lm, _support(lm), lc, rest))

    key = order.key
    work = dict(f.terms)
    heap = [(tuple(-k for k in key(m)), m) for m in work]
    heapq.heapify(heap)
    queued = set(work)
    quotients: list[dict] = [{} for _ in divisors]
    remainder: dict = {}

    while heap:
        _, mono = heapq.heappop(heap)
        queued.discard(mono)
        c = work.pop(mono, 0)
        if not c:
            continue
        support = _support(mono)
        for idx, (lm, lm_support, lc, rest) in enumerate(leads):
            if not lm_support & ~support and _divides(lm, mono):
                shift = tuple(a - b for a, b in zip(mono, lm))
                factor = fld.div(c, lc)
                q = quotients[idx]
                q[shift] = fld(q.get(shift, 0) + factor)
                if not q[shift]:
                    del q[shift]
                for gm, gc in rest:
                    nm = tuple(a + b for a, b in zip(gm, shift))
                    v = fld(work.get(nm, 0) - factor * gc)
                    if v:
                        work[nm] = v
                        if nm not in queued:
                            queued.add(nm)
                            heapq.heappush(heap, (tuple(-k for k in key(nm)), nm))
                    else:
                        work.pop(nm, None)
                break
        else:
            remainder[mono] = c

    return ([Polynomial._raw(fld, n, q) for q in quotients],
            Polynomial._raw(fld, n, remainder))


@dataclass(frozen=True)
class PolySystem:
    """Polynomials over a common field, each constrained to equal zero.

    ``problem``, ``k`` and ``var_meaning`` record where the system came from.
    """

    field: Field
    nvars: int
    polys: tuple[Polynomial, ...] = ()
    problem: str | None = None
    k: int | None = None
    var_meaning: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        for f in self.polys:
            if f.field != self.field or f.nvars != self.nvars:
                raise FieldError("all polynomials in a system must share field and nvars")

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    @property
    def max_degree(self) -> int:
        return max((int(f.degree) for f in self.polys if f), default=0)

    def is_satisfied_by(self, point: Sequence) -> bool:
        return all(f.evaluate(point) == 0 for f in self.polys)

    def to_json(self) -> dict:
        data = {
            "field": self.field.to_json(),
            "vars": self.nvars,
            "polys": [f.to_json()["terms"] for f in self.polys],
        }
        if self.problem is not None:
            data["problem"] = self.problem
        if self.k is not None:
            data["k"] = self.k
        if self.var_meaning is not None:
            data["varMeaning"] = self.var_meaning
        return data

    @classmethod
    def from_json(cls, data: dict) -> "PolySystem":
        fld = Field(int(data["field"]["char"]))
        n = int(data["vars"])
        polys = [Polynomial.from_json({"field": data["field"], "vars": n, "terms": t})
                 for t in data["polys"]]
        return cls(fld, n, tuple(polys), data.get("problem"), data.get("k"),
                   data.get("varMeaning"))


def monomials_up_to(nvars: int, degree: int, order: MonomialOrder = GRLEX) -> list[Monomial]:
    """All monomials of total degree at most ``degree``, largest first."""
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int, slots: int):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            prefix.append(e)
            rec(prefix, left - e, slots - 1)
            prefix.pop()

    if degree >= 0:
        rec([], degree, nvars)
    out.sort(key=order.key, reverse=True)
    return out


def sum_of(polys: Iterable[Polynomial], field: Field, nvars: int) -> Polynomial:
    total = Polynomial.zero(field, nvars)
    for f in polys:
        total = total + f
    return total
