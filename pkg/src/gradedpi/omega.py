"""The commutative polynomial ring Ω = F[ξ_ij^(k)] and sparse matrices over it.

A variable ξ_ij^(k) is the triple ``(k, i, j)``. A monomial is a sorted tuple
of ``(variable, exponent)`` pairs; polynomials map monomials to coefficients
of a fixed coefficient ring (rationals or GF(p)).
"""
from __future__ import annotations

from collections import defaultdict

from .scalars import QQ

OmegaVariable = tuple  # (k, i, j)
OmegaMonomial = tuple  # ((var, exp), ...) sorted by var


def mono_mul(a: OmegaMonomial, b: OmegaMonomial) -> OmegaMonomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_from_vars(variables) -> OmegaMonomial:
    d = {}
    for v in variables:
        d[v] = d.get(v, 0) + 1
    return tuple(sorted(d.items()))


def mono_vars(m: OmegaMonomial):
    return [v for v, _ in m]


def format_mono(m: OmegaMonomial) -> str:
    if not m:
        return "1"
    parts = []
    for (k, i, j), e in m:
        s = f"ξ[{k},{i},{j}]"
        parts.append(s if e == 1 else f"{s}^{e}")
    return " · ".join(parts)


class OmegaPolynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, terms=None, ring=QQ):
        self.ring = ring
        out = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, dict) else terms):
                out[m] = out.get(m, 0) + c
        self.terms = {m: c for m, c in ((m, ring.coerce(c)) for m, c in out.items()) if c}

    @classmethod
    def _raw(cls, terms, ring):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, OmegaPolynomial):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "OmegaPolynomial") -> "OmegaPolynomial":
        out = dict(self.terms)
        mod = self.ring.modulus
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if mod:
                v %= mod
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return OmegaPolynomial._raw(out, self.ring)

    def scale(self, c) -> "OmegaPolynomial":
        c = self.ring.coerce(c)
        if not c:
            return OmegaPolynomial._raw({}, self.ring)
        mod = self.ring.modulus
        if mod:
            return OmegaPolynomial._raw({m: v * c % mod for m, v in self.terms.items()}, self.ring)
        return OmegaPolynomial._raw({m: v * c for m, v in self.terms.items()}, self.ring)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "OmegaPolynomial") -> "OmegaPolynomial":
        out = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[mono_mul(m1, m2)] += c1 * c2
        return OmegaPolynomial(out, self.ring)

    def monomials(self):
        return sorted(self.terms)

    def is_monomial(self) -> bool:
        """A single monomial with coefficient 1."""
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def map_monomials(self, fn) -> "OmegaPolynomial":
        """Apply ``fn`` to each monomial; ``None`` drops it."""
        out = {}
        for m, c in self.terms.items():
            m2 = fn(m)
            if m2 is not None:
                out[m2] = out.get(m2, 0) + c
        return OmegaPolynomial(out, self.ring)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self.terms[m]
            body = format_mono(m)
            parts.append(body if c == 1 else f"{c}·{body}")
        return " + ".join(parts)

    __repr__ = __str__


class GenericMatrix:
    """A sparse n x n matrix with entries in Ω; zero entries are never stored."""

    __slots__ = ("n", "entries", "ring")

    def __init__(self, n: int, entries=None, ring=QQ):
        self.n = n
        self.ring = ring
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    @classmethod
    def zero(cls, n, ring=QQ):
        return cls(n, {}, ring)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, GenericMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __add__(self, other: "GenericMatrix") -> "GenericMatrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return GenericMatrix(self.n, out, self.ring)

    def scale(self, c) -> "GenericMatrix":
        return GenericMatrix(self.n, {k: v.scale(c) for k, v in self.entries.items()}, self.ring)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other: "GenericMatrix") -> "GenericMatrix":
        rows = defaultdict(list)
        for (j, k), q in other.entries.items():
            rows[j].append((k, q))
        out = {}
        for (i, j), p in self.entries.items():
            for k, q in rows.get(j, ()):
                prod = p * q
                out[(i, k)] = out[(i, k)] + prod if (i, k) in out else prod
        return GenericMatrix(self.n, out, self.ring)

    def nonzero_rows(self) -> set[int]:
        return {i for i, _ in self.entries}

    def map_entries(self, fn) -> "GenericMatrix":
        return GenericMatrix(self.n, {k: fn(v) for k, v in self.entries.items()}, self.ring)

    def __str__(self):
        if not self.entries:
            return "0"
        return "\n".join(f"({i},{j}): {self.entries[(i, j)]}" for i, j in sorted(self.entries))

    __repr__ = __str__
