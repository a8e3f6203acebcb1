"""Transport of multilinear identities from B to B ⊗ E and B ⊗ C.

ζ_J makes the variables with index in J odd and multiplies each monomial by
the sign of the order in which its odd variables appear. φ_h is the general
version for a bicharacter β on H: variable i gets degree (g_i, h_i) and each
monomial picks up the reordering scalar λ.
"""
from __future__ import annotations

from itertools import product as cartesian
from typing import Iterable, Sequence

from ..errors import GradedPIError, LengthMismatchError, NotMultilinearError
from ..freealg import GradedPolynomial, GradedVariable, basis_generators
from ..grading import GradedSubalgebra
from ..groups import Group, GroupElement, cyclic, direct_product
from ..scalars import root_of_unity, scalar_key
from .bicharacter import Bicharacter, lambda_exponent


def _require_multilinear(f: GradedPolynomial):
    if not f.is_multilinear():
        raise NotMultilinearError("transport maps need a multilinear polynomial")


def _distinct_indices(f: GradedPolynomial) -> list[int]:
    """Sorted variable indices of ``f``; each index must name one variable."""
    by_index = {}
    for v in f.variables():
        if by_index.setdefault(v.index, v) != v:
            raise NotMultilinearError(f"index {v.index} is used by two variables of different degree")
    return sorted(by_index)


def sign_of_order(indices: Sequence[int]) -> int:
    inv = sum(1 for a in range(len(indices)) for b in range(a + 1, len(indices)) if indices[a] > indices[b])
    return -1 if inv % 2 else 1


def super_group(G: Group) -> Group:
    return direct_product(G, cyclic(2))


def zeta_J(f: GradedPolynomial, J: Iterable[int]) -> GradedPolynomial:
    """Variables with index in J become odd; signs follow the odd variables' order."""
    _require_multilinear(f)
    _distinct_indices(f)
    J = set(J)
    if not f:
        return GradedPolynomial.zero()
    G = next(iter(f.variables())).degree.group
    P = super_group(G)
    out = {}
    for word, c in f.terms.items():
        odd = [v.index for v in word if v.index in J]
        new = tuple(GradedVariable(P.element((v.degree.value, 1 if v.index in J else 0)), v.index) for v in word)
        out[new] = c * sign_of_order(odd)
    return GradedPolynomial(out)


def phi_h(f: GradedPolynomial, h: Sequence[GroupElement], beta: Bicharacter) -> GradedPolynomial:
    """x_{g,i} ↦ x_{(g,h_i),i}, each monomial scaled by λ of its variable order.

    ``h[i-1]`` is the H-degree given to the variable with index i.
    """
    _require_multilinear(f)
    indices = _distinct_indices(f)
    if indices and len(h) < indices[-1]:
        raise LengthMismatchError(f"need at least {indices[-1]} H-degrees, got {len(h)}")
    H = beta.group
    for x in h:
        H.check(x)
    if not f:
        return GradedPolynomial.zero()
    G = next(iter(f.variables())).degree.group
    P = direct_product(G, H)
    rank = {i: r + 1 for r, i in enumerate(indices)}
    hs = [h[i - 1] for i in indices]
    out = {}
    for word, c in f.terms.items():
        sigma = [rank[v.index] for v in word]
        lam = root_of_unity(beta.m, lambda_exponent(beta, hs, sigma))
        new = tuple(GradedVariable(P.element((v.degree.value, h[v.index - 1].value)), v.index) for v in word)
        out[new] = c * lam
    return GradedPolynomial(out)


# -- canonical representatives up to relabeling and scaling ---------------------------

def _relabel(f: GradedPolynomial, anchor) -> GradedPolynomial:
    mapping = {}
    for v in anchor:
        if v not in mapping:
            mapping[v] = GradedVariable(v.degree, len(mapping) + 1)
    for v in sorted(f.variables() - set(mapping), key=lambda v: v.key):
        mapping[v] = GradedVariable(v.degree, len(mapping) + 1)
    lead = f.terms[anchor]
    return GradedPolynomial({tuple(mapping[v] for v in w): c / lead for w, c in f.terms.items()})


def _poly_key(f: GradedPolynomial):
    return tuple((tuple(v.key for v in w), scalar_key(c)) for w, c in f.items())


def canonical_relabel(f: GradedPolynomial) -> GradedPolynomial:
    """A representative of f up to degree-preserving renaming of variables and a
    nonzero scalar.

    Each monomial is tried as the anchor: variables are renumbered by first
    occurrence in it and its coefficient is scaled to 1. The smallest result
    under a fixed total order wins.
    """
    if not f:
        return f
    best = None
    best_key = None
    for anchor in f.terms:
        g = _relabel(f, anchor)
        k = _poly_key(g)
        if best_key is None or k < best_key:
            best, best_key = g, k
    return best


# -- transported bases --------------------------------------------------------------

def _grassmann_tag(tag: str, f: GradedPolynomial, parities: Sequence[int]) -> str:
    if tag == "(3)":
        return "(8)" if sum(parities) == 2 else "(7)"
    if tag.startswith("(4:"):
        g = tag[3:-1]
        middle = parities[1]
        outer = parities[0] + parities[2]
        if middle == 0:
            code = {0: 9, 1: 9, 2: 12}[outer]
        else:
            code = {0: 10, 1: 11, 2: 13}[outer]
        return f"({code}:{g})"
    if tag.startswith("(5:"):
        return f"(5:({tag[3:-1]},{parities[0]}))"
    return "(mon:" + "".join(str(p) for p in parities) + ")"


def transform_basis(
    B: GradedSubalgebra,
    beta: Bicharacter,
    degree_universe: Iterable[GroupElement] | None = None,
) -> list[tuple[str, GradedPolynomial]]:
    """Images φ_h(f) of the basis of T_G(B), for every h ∈ H^arity, deduplicated
    up to relabeling of variables and scaling.

    For the Grassmann bicharacter tags follow the classical list: ``(7)``,
    ``(8)`` for the commutator, ``(9:g)``..``(13:g)`` for the length-3
    identities, ``(5:(g,δ))`` and ``(mon:<parities>)``. Otherwise the source tag
    is suffixed with ``[h=...]``.
    """
    H = beta.group
    if not H.is_finite:
        raise GradedPIError("H must be finite")
    grassmann = beta.is_grassmann()
    seen = set()
    out = []
    for tag, f in basis_generators(B, degree_universe):
        k = len(_distinct_indices(f))
        for h in cartesian(H.elements(), repeat=k):
            image = phi_h(f, h, beta)
            canon = canonical_relabel(image)
            key = _poly_key(canon)
            if key in seen:
                continue
            seen.add(key)
            if grassmann:
                label = _grassmann_tag(tag, f, [x.value for x in h])
            else:
                label = f"{tag}[h={','.join(str(x) for x in h)}]"
            out.append((label, canon))
    return out
