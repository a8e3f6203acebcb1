"""Regular gradings.

An H-grading is regular when (1) every word of degrees (h_1..h_p) is realized
by a nonzero product a_{h_1}⋯a_{h_p}, and (2) there are scalars θ(g, h) with
ab = θ(g,h) ba for all a ∈ A_g, b ∈ A_h. The algebra is given by a basis of
homogeneous elements and its structure constants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product as cartesian
from math import gcd
from typing import Sequence

from ..errors import ComponentTooBigError, GradedPIError, InvariantViolation
from ..grading import GradedSubalgebra
from ..groups import Group, GroupElement
from ..scalars import root_of_unity, simplify
from .bicharacter import Bicharacter, make_bicharacter, verify_bicharacter


@dataclass(frozen=True, eq=False)
class GradedStructure:
    """Basis elements with H-degrees and a sparse multiplication table.

    ``table[(a, b)] = (scalar, c)`` means b_a b_b = scalar · b_c; missing
    pairs multiply to zero. ``monomial_basis`` declares that larger
    components are allowed because basis products are already scalar
    multiples of basis elements.
    """

    group: Group
    labels: tuple
    degrees: tuple
    table: dict
    monomial_basis: bool = False

    def component(self, h: GroupElement) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == h]

    def multiply(self, a: int, b: int):
        return self.table.get((a, b))

    @classmethod
    def from_model(cls, model) -> "GradedStructure":
        basis = list(model.basis)
        index = {w: i for i, w in enumerate(basis)}
        table = {}
        for a, wa in enumerate(basis):
            for b, wb in enumerate(basis):
                prod = model.multiply(wa, wb)
                if prod is not None:
                    table[(a, b)] = (prod[0], index[prod[1]])
        return cls(
            model.group,
            tuple(model.word_str(w) for w in basis),
            tuple(model.degree(w) for w in basis),
            table,
            monomial_basis=True,
        )

    @classmethod
    def from_matrices(cls, H: Group, components: dict) -> "GradedStructure":
        """Build from matrices: ``components`` maps a degree to a matrix or a list
        of matrices spanning that component. Degrees may be group elements or
        their plain values.

        Every product of two basis matrices must be zero or a multiple of a
        single basis matrix.
        """
        labels, degrees, mats = [], [], []
        coerced = {(x if isinstance(x, GroupElement) else H.element(x)): v for x, v in components.items()}
        for h in sorted(coerced, key=lambda x: H.check(x).key):
            value = coerced[h]
            group_of = value if _is_list_of_matrices(value) else [value]
            for t, m in enumerate(group_of):
                labels.append(f"a[{h}]" if len(group_of) == 1 else f"a[{h}]_{t + 1}")
                degrees.append(H.check(h))
                mats.append(_as_matrix(m))
        table = {}
        for a, A in enumerate(mats):
            for b, Bm in enumerate(mats):
                P = _matmul(A, Bm)
                if not any(any(r) for r in P):
                    continue
                hit = None
                for c, C in enumerate(mats):
                    ratio = _proportional(P, C)
                    if ratio is not None:
                        hit = (ratio, c)
                        break
                if hit is None:
                    raise GradedPIError(
                        f"{labels[a]}·{labels[b]} is not a multiple of a basis element"
                    )
                if degrees[hit[1]] != degrees[a] * degrees[b]:
                    raise GradedPIError(f"{labels[a]}·{labels[b]} has the wrong degree")
                table[(a, b)] = hit
        return cls(H, tuple(labels), tuple(degrees), table)

    @classmethod
    def from_subalgebra(cls, B: GradedSubalgebra) -> "GradedStructure":
        units = sorted(B.units)
        index = {u: t for t, u in enumerate(units)}
        table = {}
        for (i, j), t in index.items():
            for (k, l), s in index.items():
                if j == k:
                    table[(t, s)] = (Fraction(1), index[(i, l)])
        return cls(
            B.group,
            tuple(f"e{i}{j}" for i, j in units),
            tuple(B.degree_of[u] for u in units),
            table,
        )


def _is_list_of_matrices(value) -> bool:
    return (
        isinstance(value, (list, tuple))
        and value
        and isinstance(value[0], (list, tuple))
        and value[0]
        and isinstance(value[0][0], (list, tuple))
    )


def _as_matrix(m):
    return [[Fraction(x) for x in row] for row in m]


def _matmul(A, B):
    n, k, p = len(A), len(B), len(B[0])
    return [[sum((A[i][t] * B[t][j] for t in range(k)), Fraction(0)) for j in range(p)] for i in range(n)]


def _proportional(P, C):
    """r with P = r·C, or None."""
    r = None
    for rp, rc in zip(P, C):
        for x, y in zip(rp, rc):
            if y == 0:
                if x != 0:
                    return None
                continue
            q = x / y
            if r is None:
                r = q
            elif q != r:
                return None
    return r


@dataclass
class RegularityReport:
    status: str  # "regular", "fails condition 1", "fails condition 2"
    witness: tuple = ()
    theta: dict = field(default_factory=dict)  # (g.value, h.value) -> scalar
    checked_up_to: int = 0

    @property
    def is_regular(self) -> bool:
        return self.status == "regular"

    def __str__(self):
        if self.is_regular:
            return f"regular (words checked up to length {self.checked_up_to})"
        return f"{self.status}, witness ({','.join(str(x) for x in self.witness)})"


def _condition_2(S: GradedStructure):
    H = S.group
    theta = {}
    for g, h in cartesian(H.elements(), repeat=2):
        value = None
        for a in S.component(g):
            for b in S.component(h):
                ab, ba = S.multiply(a, b), S.multiply(b, a)
                if ab is None and ba is None:
                    continue
                if ab is None or ba is None or ab[1] != ba[1]:
                    return None, (g, h)
                r = simplify(ab[0] / ba[0])
                if value is None:
                    value = r
                elif value != r:
                    return None, (g, h)
        if value is not None:
            theta[(g.value, h.value)] = value
    return theta, None


def _condition_1(S: GradedStructure, length_bound: int):
    """First degree word (shortlex) whose products all vanish, or None."""
    H = S.group
    elements = H.elements()
    level = []
    for h in elements:
        reach = frozenset(S.component(h))
        if not reach:
            return (h,)
        level.append(((h,), reach))
    for _ in range(length_bound - 1):
        nxt = []
        for word, reach in level:
            for h in elements:
                out = set()
                for a in reach:
                    for b in S.component(h):
                        prod = S.multiply(a, b)
                        if prod is not None:
                            out.add(prod[1])
                if not out:
                    return word + (h,)
                nxt.append((word + (h,), frozenset(out)))
        # words with the same reachable set behave alike from here on
        dedup = {}
        for word, reach in nxt:
            dedup.setdefault(reach, word)
        level = [(w, r) for r, w in dedup.items()]
    return None


def check_regular(S: GradedStructure, length_bound: int) -> RegularityReport:
    if length_bound < 2:
        raise GradedPIError("length bound must be at least 2")
    if not S.group.is_finite:
        raise GradedPIError("H must be finite")
    if not S.monomial_basis:
        for h in S.group.elements():
            if len(S.component(h)) > 1:
                raise ComponentTooBigError(
                    f"component of degree {h} has dimension {len(S.component(h))}"
                )
    theta, bad_pair = _condition_2(S)
    if bad_pair is not None:
        return RegularityReport("fails condition 2", bad_pair)
    word = _condition_1(S, length_bound)
    if word is not None:
        return RegularityReport("fails condition 1", word)
    report = RegularityReport("regular", (), theta, length_bound)
    if theta_as_bicharacter(S.group, theta) is None:
        raise InvariantViolation("a regular grading produced θ that is not a skew-symmetric bicharacter")
    return report


def _exponent_of(H: Group) -> int:
    orders = []
    for g in H.elements():
        k, x = 1, g
        while not x.is_identity():
            x, k = x * g, k + 1
        orders.append(k)
    return reduce(lambda a, b: a * b // gcd(a, b), orders, 1)


def theta_as_bicharacter(H: Group, theta: dict) -> Bicharacter | None:
    """Express θ by exponents of ζ_M with M the exponent of H, if it is a
    skew-symmetric bicharacter."""
    M = _exponent_of(H)
    roots = [root_of_unity(M, e) for e in range(M)]
    els = H.elements()
    table = []
    for g in els:
        row = []
        for h in els:
            v = theta.get((g.value, h.value))
            e = None if v is None else next((t for t, r in enumerate(roots) if r == v), None)
            if e is None:
                return None
            row.append(e)
        table.append(row)
    if verify_bicharacter(H, M, table) is not None:
        return None
    return make_bicharacter(H, M, table, validate=False)
