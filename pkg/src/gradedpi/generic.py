"""Graded generic elements and the exact identity oracle.

Substituting x_g^{(k)} ↦ ξ_g^{(k)} = Σ_{i ∈ D_ĝ} ξ_{i ĝ(i)}^{(k)} e_{i ĝ(i)} maps F<X>
onto the relatively free algebra of B; its kernel is exactly the ideal of
graded identities, so ``evaluate(f) == 0`` decides identities without any
randomness.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Sequence

from .errors import (
    MultidegreeMismatchError,
    NotMultihomogeneousError,
    NotMultilinearError,
)
from .freealg import GradedPolynomial, GradedVariable, multidegree
from .grading import GradedSubalgebra
from .groups import GroupElement
from .omega import GenericMatrix, OmegaPolynomial, format_mono, mono_from_vars
from .scalars import QQ


def generic_element(B: GradedSubalgebra, g: GroupElement, k: int, ring=QQ) -> GenericMatrix:
    if k < 1:
        raise ValueError("copy index k must be at least 1")
    entries = {}
    for i, j in B.component_basis(g):
        entries[(i, j)] = OmegaPolynomial({(((k, i, j), 1),): 1}, ring)
    return GenericMatrix(B.n, entries, ring)


def evaluate_word(B: GradedSubalgebra, word: Sequence[GradedVariable], ring=QQ, _cache=None) -> GenericMatrix:
    if not word:
        raise ValueError("the free algebra is nonunital: empty words cannot be evaluated")
    cache = {} if _cache is None else _cache
    out = None
    for v in word:
        key = (v.degree, v.index)
        m = cache.get(key)
        if m is None:
            m = cache[key] = generic_element(B, v.degree, v.index, ring)
        out = m if out is None else out @ m
        if out.is_zero():
            break
    return out


def evaluate(B: GradedSubalgebra, f: GradedPolynomial, ring=QQ) -> GenericMatrix:
    """f(ξ) in M_n(Ω), computed with full polynomial arithmetic."""
    total = GenericMatrix.zero(B.n, ring)
    cache = {}
    for word, c in f.items():
        total = total + evaluate_word(B, word, ring, cache).scale(c)
    return total


def is_graded_identity(B: GradedSubalgebra, f: GradedPolynomial, ring=QQ) -> bool:
    """Exact decision: f is a graded identity of B over every infinite field of the
    ring's characteristic."""
    return evaluate(B, f, ring).is_zero()


@dataclass(frozen=True)
class Fingerprint:
    """Nonzero entries (row, column, Ω-monomial) of a monomial's generic evaluation.

    Every entry has coefficient 1 and there is at most one per row. An empty
    fingerprint means the monomial is an identity.
    """

    entries: tuple

    @property
    def is_identity(self) -> bool:
        return not self.entries

    def __str__(self):
        if not self.entries:
            return "IsIdentity"
        return "; ".join(f"({i},{j}): {format_mono(m)}" for i, j, m in self.entries)


def fingerprint(B: GradedSubalgebra, word: Sequence[GradedVariable]) -> Fingerprint:
    """Walk each row along the composed partial maps, collecting path variables."""
    if not word:
        raise ValueError("empty monomial")
    tables = [(B.partial_map(v.degree).values, v.index) for v in word]
    entries = []
    for row in range(1, B.n + 1):
        c = row
        path = []
        for vals, k in tables:
            nxt = vals[c - 1]
            if not nxt:
                break
            path.append((k, c, nxt))
            c = nxt
        else:
            entries.append((row, c, mono_from_vars(path)))
    return Fingerprint(tuple(entries))


def congruent_mod_U(B: GradedSubalgebra, m1: Sequence[GradedVariable], m2: Sequence[GradedVariable]) -> bool:
    """Whether the two monomials share a (row, column, entry) in their generic
    evaluations, which makes them congruent modulo the ideal of (3)–(5)."""
    if multidegree(m1) != multidegree(m2):
        raise MultidegreeMismatchError("monomials must have the same multidegree")
    f1, f2 = fingerprint(B, m1), fingerprint(B, m2)
    if f1.is_identity or f2.is_identity:
        raise ValueError("congruence is only defined for monomials that are not identities")
    return bool(set(f1.entries) & set(f2.entries))


@dataclass(frozen=True)
class FingerprintClass:
    fingerprint: Fingerprint
    coefficient_sum: object
    members: tuple


@dataclass(frozen=True)
class CanonicalForm:
    classes: tuple
    identity_monomials: tuple

    @property
    def is_identity(self) -> bool:
        return all(not c.coefficient_sum for c in self.classes)


def canonical_form(B: GradedSubalgebra, f: GradedPolynomial, ring=QQ) -> CanonicalForm:
    """Group the monomials of a multihomogeneous ``f`` by fingerprint.

    ``f`` is an identity iff every class has zero coefficient sum.
    """
    if not f.is_multihomogeneous():
        raise NotMultihomogeneousError("canonical_form needs a multihomogeneous polynomial")
    groups: dict = {}
    idents = []
    for word, c in f.items():
        fp = fingerprint(B, word)
        if fp.is_identity:
            idents.append(word)
            continue
        total, members = groups.get(fp, (0, []))
        members.append(word)
        total = total + ring.coerce(c)
        if ring.modulus:
            total %= ring.modulus
        groups[fp] = (total, members)
    classes = tuple(
        FingerprintClass(fp, ring.coerce(total), tuple(members))
        for fp, (total, members) in sorted(groups.items(), key=lambda t: t[0].entries)
    )
    return CanonicalForm(classes, tuple(idents))


def project_to_subalgebra(M: GenericMatrix, B: GradedSubalgebra) -> GenericMatrix:
    """Send every ξ_ij^(k) with e_ij ∉ B to zero (the map Θ on M_n(Ω))."""
    units = B.units.pairs

    def keep(mono):
        for (k, i, j), _ in mono:
            if (i, j) not in units:
                return None
        return mono

    return M.map_entries(lambda p: p.map_monomials(keep))


def find_multilinear_counterexample(B: GradedSubalgebra, f: GradedPolynomial, ring=QQ):
    """A substitution of matrix units under which ``f`` is nonzero, or ``None``.

    Independent of the generic-matrix path: plain products of matrix units.
    """
    if not f.is_multilinear():
        raise NotMultilinearError("brute-force check needs a multilinear polynomial")
    if not f:
        return None
    variables = sorted(f.variables(), key=lambda v: v.key)
    choices = [B.component_basis(v.degree) for v in variables]
    if any(not c for c in choices):
        return None
    slot = {v: t for t, v in enumerate(variables)}
    terms = [([slot[v] for v in w], ring.coerce(c)) for w, c in f.items()]
    for units in cartesian(*choices):
        acc = {}
        for positions, c in terms:
            i, j = units[positions[0]]
            for p in positions[1:]:
                a, b = units[p]
                if a != j:
                    break
                j = b
            else:
                acc[(i, j)] = acc.get((i, j), 0) + c
        if ring.modulus:
            if any(v % ring.modulus for v in acc.values()):
                return dict(zip(variables, units))
        elif any(acc.values()):
            return dict(zip(variables, units))
    return None


def brute_force_multilinear_check(B: GradedSubalgebra, f: GradedPolynomial, ring=QQ) -> bool:
    """True iff ``f`` vanishes under every substitution of matrix units."""
    return find_multilinear_counterexample(B, f, ring) is None
