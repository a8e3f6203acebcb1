"""Graded polynomials in the free (nonunital) associative algebra F<X>.

A variable is x_g^{(i)}: a degree in the grading group plus a copy index.
Variables of different degree are different even when the index agrees.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import UniverseTooSmallError
from .grading import GradedSubalgebra
from .groups import GroupElement
from .monomials import default_universe, minimal_monomial_basis, zero_degrees
from .scalars import simplify


@dataclass(frozen=True)
class GradedVariable:
    degree: GroupElement
    index: int

    @property
    def key(self):
        return (self.degree.key, self.index)

    def __str__(self):
        return f"x[{self.degree},{self.index}]"

    __repr__ = __str__


def _word_key(word):
    return tuple(v.key for v in word)


def _clean(c):
    c = simplify(c)
    return Fraction(c) if isinstance(c, int) else c


class GradedPolynomial:
    """An exact linear combination of graded monomials (words of variables).

    Equal words are merged on construction and zero coefficients dropped, so
    two polynomials are equal iff their term dictionaries are.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        merged = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, c in items:
                word = tuple(word)
                merged[word] = merged.get(word, 0) + c
        self.terms = {w: _clean(c) for w, c in merged.items() if c}

    @classmethod
    def monomial(cls, word: Sequence[GradedVariable], coefficient=1) -> "GradedPolynomial":
        return cls({tuple(word): coefficient})

    @classmethod
    def zero(cls) -> "GradedPolynomial":
        return cls()

    def items(self):
        """(word, coefficient) pairs in canonical order."""
        return sorted(self.terms.items(), key=lambda t: _word_key(t[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return GradedPolynomial(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return GradedPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GradedPolynomial):
            return GradedPolynomial(
                (w1 + w2, c1 * c2)
                for w1, c1 in self.terms.items()
                for w2, c2 in other.terms.items()
            )
        return GradedPolynomial({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, scalar):
        return GradedPolynomial({w: scalar * c for w, c in self.terms.items()})

    def variables(self) -> set[GradedVariable]:
        return {v for w in self.terms for v in w}

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def is_multilinear(self) -> bool:
        """Every monomial uses each of the same set of variables exactly once."""
        if not self.terms:
            return True
        words = list(self.terms)
        first = set(words[0])
        for w in words:
            if len(set(w)) != len(w) or set(w) != first:
                return False
        return True

    def is_multihomogeneous(self) -> bool:
        return len({multidegree(w) for w in self.terms}) <= 1

    def has_empty_word(self) -> bool:
        return () in self.terms

    def __str__(self):
        from .parsing import pretty_print

        return pretty_print(self)

    __repr__ = __str__


def multidegree(word: Iterable[GradedVariable]):
    """Occurrence count of each variable, as a hashable canonical tuple."""
    counts = Counter(word)
    return tuple(sorted(counts.items(), key=lambda t: t[0].key))


def monomial_word(degrees: Sequence[GroupElement], start: int = 1) -> tuple[GradedVariable, ...]:
    """x_{h_1}^{(start)} x_{h_2}^{(start+1)} ... with fresh indices."""
    return tuple(GradedVariable(h, start + t) for t, h in enumerate(degrees))


def multihomogeneous_components(f: GradedPolynomial) -> list[GradedPolynomial]:
    """Split ``f`` into multihomogeneous parts; the parts sum to ``f``."""
    parts: dict = {}
    for w, c in f.terms.items():
        parts.setdefault(multidegree(w), {})[w] = c
    keys = sorted(parts, key=lambda md: tuple((v.key, k) for v, k in md))
    return [GradedPolynomial(parts[k]) for k in keys]


def identity_3(e: GroupElement) -> GradedPolynomial:
    """x_e^{(1)} x_e^{(2)} − x_e^{(2)} x_e^{(1)}."""
    a, b = GradedVariable(e, 1), GradedVariable(e, 2)
    return GradedPolynomial({(a, b): 1, (b, a): -1})


def identity_4(g: GroupElement) -> GradedPolynomial:
    """x_g^{(1)} x_{g^{-1}}^{(2)} x_g^{(3)} − x_g^{(3)} x_{g^{-1}}^{(2)} x_g^{(1)}."""
    a, b, c = GradedVariable(g, 1), GradedVariable(g.inverse(), 2), GradedVariable(g, 3)
    return GradedPolynomial({(a, b, c): 1, (c, b, a): -1})


def identity_5(g: GroupElement) -> GradedPolynomial:
    return GradedPolynomial.monomial((GradedVariable(g, 1),))


def basis_generators(
    B: GradedSubalgebra, degree_universe: Iterable[GroupElement] | None = None
) -> list[tuple[str, GradedPolynomial]]:
    """Tagged generators of the T_G-ideal of graded identities of B.

    Tags are ``"(3)"``, ``"(4:g)"``, ``"(5:g)"`` and ``"(mon)"``.
    """
    universe = default_universe(B) if degree_universe is None else list(degree_universe)
    missing = [g for g in B.support if g not in set(universe)]
    if missing:
        raise UniverseTooSmallError(
            "degree universe must contain the support; missing " + ", ".join(map(str, missing))
        )
    e = B.group.identity
    out = []
    if e in B.maps:
        out.append(("(3)", identity_3(e)))
    for g in B.support:
        if g != e:
            out.append((f"(4:{g})", identity_4(g)))
    for g in zero_degrees(B, universe):
        out.append((f"(5:{g})", identity_5(g)))
    for word in minimal_monomial_basis(B):
        out.append(("(mon)", GradedPolynomial.monomial(monomial_word(word))))
    return out
