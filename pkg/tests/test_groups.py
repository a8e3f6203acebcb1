import pytest
from hypothesis import given, strategies as st

from gradedpi import cyclic, direct_product, integers, make_group, table_group
from gradedpi.errors import (
    ForeignElementError,
    MalformedTableError,
    MixedGroupsError,
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
)

KLEIN = {"type": "table", "elements": ["e", "a", "b", "c"],
         "table": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]}


def test_cyclic_identity():
    Z3 = make_group({"type": "cyclic", "order": 3})
    assert Z3.identity.value == 0
    assert Z3.order == 3


def test_klein_table_accepted():
    K = make_group(KLEIN)
    assert K.order == 4 and K.is_abelian
    a, b = K.element(1), K.element(2)
    assert str(a * b) == "c"


def test_bad_two_by_two_table():
    with pytest.raises((NotAssociativeError, NoInverseError)):
        table_group(["p", "q"], [[0, 1], [1, 1]])


def test_table_errors_name_witness():
    with pytest.raises(NoIdentityError):
        table_group(["p", "q"], [[0, 0], [0, 0]])
    with pytest.raises(MalformedTableError):
        table_group(["p", "q"], [[0, 1]])
    with pytest.raises(MalformedTableError):
        cyclic(0)
    # a non-associative Latin square (order 3 quasigroup with identity)
    with pytest.raises(NotAssociativeError) as exc:
        table_group(["e", "a", "b", "c", "d"],
                    [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
    assert exc.value.witness


def test_multiplication_examples():
    Z3 = cyclic(3)
    assert Z3(2) * Z3(2) == Z3(1)
    Z = integers()
    assert Z(5).inverse() == Z(-5)
    P = direct_product(cyclic(2), cyclic(3))
    assert P((1, 2)) * P((1, 2)) == P((0, 1))


def test_mixed_and_foreign():
    with pytest.raises(MixedGroupsError):
        cyclic(2)(1) * cyclic(3)(1)
    with pytest.raises(ForeignElementError):
        cyclic(3).element(3)
    with pytest.raises(ForeignElementError):
        cyclic(3).check(cyclic(4)(1))


def test_describe_round_trip():
    for desc in (KLEIN, {"type": "integers"},
                 {"type": "product", "factors": [{"type": "cyclic", "order": 2}, KLEIN]}):
        assert make_group(desc).describe() == desc


GROUPS = [cyclic(1), cyclic(4), make_group(KLEIN), direct_product(cyclic(2), cyclic(3)),
          direct_product(cyclic(2), make_group(KLEIN))]


@pytest.mark.parametrize("G", GROUPS, ids=str)
def test_group_axioms_exhaustive(G):
    els = G.elements()
    e = G.identity
    for a in els:
        assert a * e == a == e * a
        assert a * a.inverse() == e
        for b in els:
            for c in els:
                assert (a * b) * c == a * (b * c)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_integers_are_a_group(x, y, z):
    Z = integers()
    a, b, c = Z(x), Z(y), Z(z)
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Z.identity


@given(st.tuples(st.integers(0, 1), st.integers(0, 2)), st.tuples(st.integers(0, 1), st.integers(0, 2)))
def test_product_is_componentwise(u, v):
    A, B = cyclic(2), cyclic(3)
    P = direct_product(A, B)
    w = P(u) * P(v)
    assert w.value == ((A(u[0]) * A(v[0])).value, (B(u[1]) * B(v[1])).value)
