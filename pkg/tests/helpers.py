"""Independent oracles for the tests: plain matrices and direct definitions,
no use of partial maps or generic elements."""
from fractions import Fraction
from itertools import product

from gradedpi import block_triangular_units, cyclic, full_units, induce_grading


def algebra(order, tuple_, blocks=None, group=None):
    G = group if group is not None else cyclic(order)
    n = len(tuple_)
    units = full_units(n) if blocks is None else block_triangular_units(*blocks)
    return induce_grading(G, [G.element(x) for x in tuple_], units)


def unit_degree(B, i, j):
    return B.tuple_[i - 1].inverse() * B.tuple_[j - 1]


def units_of_degree(B, g):
    return sorted((i, j) for (i, j) in B.units if unit_degree(B, i, j) == g)


def monomial_vanishes(B, degrees):
    """Every choice of one matrix unit per letter multiplies to zero."""
    choices = [units_of_degree(B, g) for g in degrees]
    for pick in product(*choices):
        ok = all(pick[t][1] == pick[t + 1][0] for t in range(len(pick) - 1))
        if ok:
            return False
    return True


def matmul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def bicharacter_failures(H, m, table):
    """All (axiom, elements) pairs that fail, by direct evaluation."""
    els = H.elements()
    pos = {g.value: t for t, g in enumerate(els)}

    def b(x, y):
        return table[pos[x.value]][pos[y.value]] % m

    out = []
    for g, h, k in product(els, repeat=3):
        if b(g * h, k) != (b(g, k) + b(h, k)) % m:
            out.append(("left", (g, h, k)))
        if b(g, h * k) != (b(g, h) + b(g, k)) % m:
            out.append(("right", (g, h, k)))
    for g, h in product(els, repeat=2):
        if (b(g, h) + b(h, g)) % m:
            out.append(("skew", (g, h)))
    return out
