"""Finite-dimensional verification models: truncated Grassmann and free
β-commutative algebras, plus exhaustive multilinear evaluation on B ⊗ model.

A model exposes ``group``, ``truncation``, ``basis`` (hashable words),
``degree(w)``, ``basis_of_degree(h)`` and ``multiply(a, b)``; the product of
two basis words is ``None`` or ``(scalar, word)``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product as cartesian
from typing import Sequence

from ..errors import (
    GradedPIError,
    InvariantViolation,
    NotMultilinearError,
    TruncationTooSmallError,
)
from ..freealg import GradedPolynomial
from ..grading import GradedSubalgebra
from ..groups import GroupElement, cyclic
from ..scalars import root_of_unity
from .bicharacter import Bicharacter


def _check_associative(model):
    for a in model.basis:
        for b in model.basis:
            for c in model.basis:
                left = model.multiply(a, b)
                left = None if left is None else _scaled(left[0], model.multiply(left[1], c))
                ab_c = model.multiply(b, c)
                right = None if ab_c is None else _scaled(ab_c[0], model.multiply(a, ab_c[1]))
                if left != right:
                    raise InvariantViolation(f"model is not associative at {a}, {b}, {c}")


def _scaled(s, prod):
    if prod is None:
        return None
    return (s * prod[0], prod[1])


class GrassmannModel:
    """E_k: the exterior algebra on e_1..e_k, Z_2-graded by word length.

    Basis words are bitmasks; bit i-1 stands for e_i.
    """

    def __init__(self, k: int):
        if k < 0:
            raise GradedPIError("number of generators must be non-negative")
        self.k = k
        self.truncation = k
        self.group = cyclic(2)
        self.basis = tuple(range(1 << k))
        self._by_degree = {0: [], 1: []}
        for w in self.basis:
            self._by_degree[bin(w).count("1") % 2].append(w)
        if k <= 4:
            _check_associative(self)

    def degree(self, w) -> GroupElement:
        return self.group.element(bin(w).count("1") % 2)

    def basis_of_degree(self, h: GroupElement):
        return self._by_degree[h.value]

    def multiply(self, a: int, b: int):
        if a & b:
            return None
        swaps = 0
        rest = b
        while rest:
            low = rest & -rest
            # generators of a with larger index must pass this one
            swaps += bin(a & ~((low << 1) - 1)).count("1")
            rest ^= low
        return (Fraction(-1) if swaps % 2 else Fraction(1), a | b)

    def word_str(self, w: int) -> str:
        if not w:
            return "1"
        return "".join(f"e{i + 1}" for i in range(self.k) if w >> i & 1)

    def __repr__(self):
        return f"E_{self.k}"


class ColorModel:
    """Truncated free β-commutative algebra on generators of given H-degrees.

    Words are exponent vectors read in generator order (normal order). A
    generator of degree h with β(h,h) = −1 squares to zero; words longer than
    the truncation are zero. The empty word is the unit.
    """

    def __init__(self, beta: Bicharacter, generator_degrees: Sequence[GroupElement], truncation: int):
        if truncation < 0:
            raise GradedPIError("truncation must be non-negative")
        self.beta = beta
        self.group = beta.group
        self.gens = tuple(self.group.check(h) for h in generator_degrees)
        self.truncation = truncation
        half = beta.m // 2 if beta.m % 2 == 0 else None
        self.odd = tuple(half is not None and beta.exponent(h, h) == half for h in self.gens)
        words = []
        self._enumerate(0, [], 0, words)
        self.basis = tuple(words)
        self._by_degree = {}
        for w in self.basis:
            self._by_degree.setdefault(self.degree(w).value, []).append(w)

    def _enumerate(self, t, prefix, length, out):
        if t == len(self.gens):
            out.append(tuple(prefix))
            return
        top = 1 if self.odd[t] else self.truncation - length
        for e in range(0, max(top, 0) + 1):
            if length + e > self.truncation:
                break
            self._enumerate(t + 1, prefix + [e], length + e, out)

    @classmethod
    def for_arity(cls, beta: Bicharacter, k: int) -> "ColorModel":
        """k generators of each degree h ≠ 0 with β(h,h) = −1, one of every other
        nonzero degree, truncated at k."""
        half = beta.m // 2 if beta.m % 2 == 0 else None
        gens = []
        for h in beta.group.elements():
            if h.is_identity():
                continue
            square_zero = half is not None and beta.exponent(h, h) == half
            gens.extend([h] * (k if square_zero else 1))
        return cls(beta, gens, k)

    def degree(self, w) -> GroupElement:
        d = self.group.identity
        for h, e in zip(self.gens, w):
            for _ in range(e):
                d = d * h
        return d

    def basis_of_degree(self, h: GroupElement):
        return self._by_degree.get(h.value, [])

    def multiply(self, a, b):
        if sum(a) + sum(b) > self.truncation:
            return None
        word = tuple(x + y for x, y in zip(a, b))
        if any(o and e > 1 for o, e in zip(self.odd, word)):
            return None
        exp = 0
        for i, ea in enumerate(a):
            if not ea:
                continue
            for j in range(i):
                if b[j]:
                    exp += ea * b[j] * self.beta.exponent(self.gens[i], self.gens[j])
        return (root_of_unity(self.beta.m, exp), word)

    def word_str(self, w) -> str:
        parts = []
        for i, e in enumerate(w):
            if e:
                parts.append(f"c{i + 1}" if e == 1 else f"c{i + 1}^{e}")
        return "".join(parts) or "1"

    def __repr__(self):
        return f"ColorModel({len(self.gens)} generators, d={self.truncation})"


def _is_zero_scalar(x) -> bool:
    return not x


def _split_variable_degree(v, G, H):
    value = v.degree.value
    group = v.degree.group
    if group.kind != "product" or len(group.factors) != 2 or group.factors[0] != G or group.factors[1] != H:
        raise GradedPIError(f"variable {v} does not have a degree in {G} x {H}")
    return G.element(value[0]), H.element(value[1])


def _search(B, model, variables, unit_choices, word_choices, terms, first_units):
    """Scan substitutions whose first variable takes a unit from ``first_units``."""
    for units in cartesian(first_units, *unit_choices[1:]):
        live = []
        for positions, c in terms:
            i, j = units[positions[0]]
            for p in positions[1:]:
                a, b = units[p]
                if a != j:
                    break
                j = b
            else:
                live.append((positions, c, (i, j)))
        if not live:
            continue
        for words in cartesian(*word_choices):
            acc = {}
            for positions, c, cell in live:
                s, w = Fraction(1), words[positions[0]]
                for p in positions[1:]:
                    prod = model.multiply(w, words[p])
                    if prod is None:
                        break
                    s, w = s * prod[0], prod[1]
                else:
                    key = (cell, w)
                    acc[key] = acc.get(key, 0) + c * s
            if any(not _is_zero_scalar(x) for x in acc.values()):
                return {v: (u, w) for v, u, w in zip(variables, units, words)}
    return None


def find_tensor_counterexample(B: GradedSubalgebra, model, f: GradedPolynomial, threads: int = 1):
    """A substitution (matrix unit, model word) per variable making f nonzero, or None.

    With several threads the first variable's units are split across
    workers; the reported witness is the one from the earliest chunk so the
    answer does not depend on scheduling.
    """
    if not f.is_multilinear():
        raise NotMultilinearError("tensor evaluation needs a multilinear polynomial")
    if not f:
        return None
    variables = sorted(f.variables(), key=lambda v: v.key)
    if len(variables) > model.truncation:
        raise TruncationTooSmallError(
            f"model truncation {model.truncation} is below the arity {len(variables)}"
        )
    G, H = B.group, model.group
    unit_choices, word_choices = [], []
    for v in variables:
        g, h = _split_variable_degree(v, G, H)
        unit_choices.append(B.component_basis(g))
        word_choices.append(model.basis_of_degree(h))
    if any(not c for c in unit_choices) or any(not c for c in word_choices):
        return None
    slot = {v: t for t, v in enumerate(variables)}
    terms = [([slot[v] for v in w], c) for w, c in f.items()]
    first = unit_choices[0]
    if threads <= 1 or len(first) == 1:
        return _search(B, model, variables, unit_choices, word_choices, terms, first)
    chunks = [[u] for u in first]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(
            pool.map(lambda ch: _search(B, model, variables, unit_choices, word_choices, terms, ch), chunks)
        )
    for r in results:
        if r is not None:
            return r
    return None


def tensor_evaluate(B: GradedSubalgebra, model, f: GradedPolynomial, threads: int = 1) -> bool:
    """True iff f vanishes on B ⊗ model under every substitution of basis tensors."""
    return find_tensor_counterexample(B, model, f, threads) is None


def model_for(beta: Bicharacter, arity: int, truncation: int | None = None):
    """E_k for the Grassmann bicharacter, otherwise ColorModel.for_arity."""
    k = max(arity, truncation or 0)
    if beta.is_grassmann():
        return GrassmannModel(k)
    return ColorModel.for_arity(beta, k)
