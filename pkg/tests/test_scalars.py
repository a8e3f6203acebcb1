from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedpi.scalars import Cyclotomic, coefficient_ring, cyclotomic_polynomial, root_of_unity, simplify

ORDERS = [3, 4, 5, 6, 8, 12]


def element(m):
    return st.lists(st.integers(-4, 4), min_size=m, max_size=m).map(
        lambda cs: sum((c * Cyclotomic.root(m, e) for e, c in enumerate(cs)), Cyclotomic.lift(0, m))
    )


@st.composite
def triple(draw):
    m = draw(st.sampled_from(ORDERS))
    return m, draw(element(m)), draw(element(m)), draw(element(m))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_roots():
    z = root_of_unity(3, 1)
    assert 1 + z + z * z == 0
    assert z ** 3 == 1 and z != 1
    assert root_of_unity(2, 1) == -1 and isinstance(root_of_unity(2, 1), Fraction)
    assert root_of_unity(4, 2) == -1
    assert simplify(root_of_unity(6, 3)) == -1
    i = root_of_unity(4, 1)
    assert i * i == -1 and i.inverse() == root_of_unity(4, 3)
    # mixed orders meet in the common field
    assert root_of_unity(3, 1) * root_of_unity(6, 3) == -root_of_unity(3, 1)


@given(triple())
@settings(max_examples=80, deadline=None)
def test_field_laws(t):
    m, a, b, c = t
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


def test_prime_field():
    F = coefficient_ring(7)
    assert F.coerce(Fraction(1, 2)) == 4
    assert F.coerce(-1) == 6
    with pytest.raises(ValueError):
        coefficient_ring(6)
    with pytest.raises(ValueError):
        F.coerce(Fraction(1, 7))
