"""Skew-symmetric bicharacters β: H x H → F^* on a finite abelian group H.

Values are stored as exponents of a fixed primitive m-th root of unity ζ_m,
which loses nothing for finite H: β(g, h)^{ord g} = β(ord(g)·g, h) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Sequence

from ..errors import GradedPIError, LengthMismatchError, NonAbelianHError
from ..groups import Group, GroupElement, cyclic, direct_product
from ..scalars import root_of_unity


@dataclass(frozen=True)
class Violation:
    """The first failing bicharacter axiom and the elements witnessing it."""

    axiom: str
    elements: tuple

    def __str__(self):
        return f"{self.axiom} fails at {tuple(str(e) for e in self.elements)}"


class InvalidBicharacterError(GradedPIError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True, eq=False)
class Bicharacter:
    group: Group
    m: int
    exponents: dict  # (g.value, h.value) -> int in [0, m)

    def exponent(self, g: GroupElement, h: GroupElement) -> int:
        return self.exponents[(g.value, h.value)]

    def __call__(self, g: GroupElement, h: GroupElement):
        return root_of_unity(self.m, self.exponent(g, h))

    def table(self) -> list[list[int]]:
        els = self.group.elements()
        return [[self.exponent(g, h) for h in els] for g in els]

    def is_grassmann(self) -> bool:
        H = self.group
        if H.kind != "cyclic" or H.order_ != 2:
            return False
        return all(
            root_of_unity(self.m, self.exponents[(a, b)]) == (-1 if a and b else 1)
            for a in (0, 1)
            for b in (0, 1)
        )

    def describe(self) -> dict:
        return {"H": self.group.describe(), "m": self.m, "beta": self.table()}


def _exps_from_table(H: Group, m: int, table: Sequence[Sequence[int]]) -> dict:
    els = H.elements()
    if len(table) != len(els) or any(len(r) != len(els) for r in table):
        raise LengthMismatchError(f"bicharacter table must be {len(els)}x{len(els)}")
    return {
        (g.value, h.value): int(table[a][b]) % m
        for a, g in enumerate(els)
        for b, h in enumerate(els)
    }


def verify_bicharacter(H: Group, m: int, table: Sequence[Sequence[int]]) -> Violation | None:
    """Check biadditivity in each argument and skew-symmetry; ``None`` means ok.

    Triples are scanned in canonical element order, left additivity first.
    """
    if not H.is_finite:
        raise GradedPIError("bicharacters are only supported on finite groups")
    if not H.is_abelian:
        raise NonAbelianHError(f"{H} is not abelian")
    if m < 1:
        raise GradedPIError("root-of-unity order m must be positive")
    exps = _exps_from_table(H, m, table)
    els = H.elements()

    def b(x, y):
        return exps[(x.value, y.value)]

    for g, h, k in cartesian(els, repeat=3):
        if b(g * h, k) != (b(g, k) + b(h, k)) % m:
            return Violation("β(g+h,k) = β(g,k)β(h,k)", (g, h, k))
    for g, h, k in cartesian(els, repeat=3):
        if b(g, h * k) != (b(g, h) + b(g, k)) % m:
            return Violation("β(g,h+k) = β(g,h)β(g,k)", (g, h, k))
    for g, h in cartesian(els, repeat=2):
        if (b(g, h) + b(h, g)) % m:
            return Violation("β(g,h) = β(h,g)^-1", (g, h))
    return None


def make_bicharacter(H: Group, m: int, table: Sequence[Sequence[int]], validate: bool = True) -> Bicharacter:
    if validate:
        v = verify_bicharacter(H, m, table)
        if v is not None:
            raise InvalidBicharacterError(v)
    return Bicharacter(H, m, _exps_from_table(H, m, table))


def grassmann_bicharacter() -> Bicharacter:
    """β(g, h) = (−1)^{gh} on Z_2: the Grassmann algebra's commutation rule."""
    return make_bicharacter(cyclic(2), 2, [[0, 0], [0, 1]])


def trivial_bicharacter(H: Group) -> Bicharacter:
    n = H.order
    return make_bicharacter(H, 1, [[0] * n for _ in range(n)])


def symplectic_bicharacter(k: int) -> Bicharacter:
    """β((a1,a2),(b1,b2)) = ζ_k^{a1 b2 − a2 b1} on Z_k x Z_k (the Pauli grading of M_k)."""
    H = direct_product(cyclic(k), cyclic(k))
    els = H.elements()
    table = [
        [(g.value[0] * h.value[1] - g.value[1] * h.value[0]) % k for h in els] for g in els
    ]
    return make_bicharacter(H, k, table)


def bicharacter_from_json(desc: dict) -> Bicharacter:
    from ..groups import make_group

    return make_bicharacter(make_group(desc["H"]), int(desc["m"]), desc["beta"])


# -- reordering scalars --------------------------------------------------------------

def _check_sigma(h, sigma):
    if len(h) != len(sigma):
        raise LengthMismatchError(f"degree sequence has length {len(h)}, permutation {len(sigma)}")
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise GradedPIError(f"{tuple(sigma)} is not a permutation of 1..{len(sigma)}")


def lambda_exponent(beta: Bicharacter, h: Sequence[GroupElement], sigma: Sequence[int]) -> int:
    """Exponent of λ with x_1⋯x_k = λ x_{σ(1)}⋯x_{σ(k)} in the free β-commutative algebra.

    Accumulated along the adjacent transpositions of a bubble sort; each swap
    of neighbours x_a x_b ↦ x_b x_a contributes β(h_a, h_b).
    """
    _check_sigma(h, sigma)
    word = list(sigma)
    total = 0
    swapped = True
    while swapped:
        swapped = False
        for t in range(len(word) - 1):
            if word[t] > word[t + 1]:
                later, earlier = word[t], word[t + 1]
                word[t], word[t + 1] = earlier, later
                # read forwards: (earlier, later) became (later, earlier)
                total += beta.exponent(h[earlier - 1], h[later - 1])
                swapped = True
    return total % beta.m


def lambda_sigma(beta: Bicharacter, h: Sequence[GroupElement], sigma: Sequence[int]):
    return root_of_unity(beta.m, lambda_exponent(beta, h, sigma))


def lambda_along_path(beta: Bicharacter, h: Sequence[GroupElement], swaps: Sequence[int]):
    """Start from x_1⋯x_k and swap neighbours at the given 0-based positions.

    Returns the resulting word (as variable indices) and the exponent of the
    accumulated scalar.
    """
    word = list(range(1, len(h) + 1))
    total = 0
    for t in swaps:
        a, b = word[t], word[t + 1]
        total += beta.exponent(h[a - 1], h[b - 1])
        word[t], word[t + 1] = b, a
    return tuple(word), total % beta.m
