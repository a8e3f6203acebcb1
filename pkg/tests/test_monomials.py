from itertools import product

import pytest

from gradedpi import (
    IRREDUCIBLE,
    classify_grading,
    compose_maps,
    cyclic,
    enumerate_monomial_identities,
    integers,
    is_monomial_identity,
    is_strong,
    minimal_monomial_basis,
    reduce_monomial,
    verify_certificate,
)
from gradedpi.errors import InfiniteGroupStrongnessCheckError, NotAnIdentityError
from gradedpi.monomials import Step, prefix_domains, zero_degrees

from helpers import algebra, monomial_vanishes


def w(G, *vals):
    return tuple(G(v) for v in vals)


def vals(words):
    return [tuple(g.value for g in word) for word in words]


def test_compose_examples(m2, ut3):
    Z2, Z3 = m2.group, ut3.group
    assert compose_maps(m2, w(Z2, 1, 1)).as_dict() == {1: 1, 2: 2}
    assert compose_maps(ut3, w(Z3, 2, 1)).is_empty()
    ut_z = algebra(None, (0, 1, 3), (1, 2), group=integers())
    assert compose_maps(ut_z, (integers()(7),)).is_empty()


def test_identity_examples(ut11, m2, ut3):
    Z2 = ut11.group
    assert is_monomial_identity(ut11, w(Z2, 1, 1))
    assert not is_monomial_identity(m2, w(Z2, 1, 1))
    with pytest.raises(ValueError):
        is_monomial_identity(m2, ())


def test_enumeration_examples(m3, ut3, ut11):
    assert enumerate_monomial_identities(m3, 5) == []
    got = vals(enumerate_monomial_identities(ut3, 3))
    for word in [(1, 2), (2, 1), (2, 2), (1, 1, 1)]:
        assert word in got
    # everything over the support up to length 3 is classified correctly
    support = [g.value for g in ut3.support]
    expected = [p for L in (1, 2, 3) for p in product(support, repeat=L)
                if monomial_vanishes(ut3, w(ut3.group, *p))]
    assert sorted(got) == sorted(expected)
    assert vals(enumerate_monomial_identities(ut11, 2)) == [(1, 1)]


def test_enumeration_order_and_threads(ut3):
    one = enumerate_monomial_identities(ut3, 5, threads=1)
    eight = enumerate_monomial_identities(ut3, 5, threads=8)
    assert one == eight
    keys = [(len(x), tuple(g.key for g in x)) for x in one]
    assert keys == sorted(keys)


def test_reduction_examples(ut3, ut11):
    Z3, Z2 = ut3.group, ut11.group
    cert = reduce_monomial(ut3, w(Z3, 1, 1, 1))
    assert cert.steps[0] == Step("R2", w(Z3, 2, 1), at=1, merged=Z3(2))
    assert cert.to_json() == [{"move": "R2", "at": 1, "merged": "2"}]
    cert = reduce_monomial(ut11, w(Z2, 1, 0, 1, 1))
    assert cert.steps[0].move == "R1" and cert.steps[0].span == (1, 3)
    assert verify_certificate(ut11, cert)
    assert reduce_monomial(ut11, w(Z2, 1, 1)) is IRREDUCIBLE
    with pytest.raises(NotAnIdentityError):
        reduce_monomial(ut11, w(Z2, 0, 1))


def test_minimal_basis_examples(ut3, m3, ut11):
    assert vals(minimal_monomial_basis(ut3)) == [(1, 2), (2, 1), (2, 2)]
    assert minimal_monomial_basis(m3) == []
    assert vals(minimal_monomial_basis(ut11)) == [(1, 1)]
    ut_z = algebra(None, (0, 1, 3), (1, 2), group=integers())
    Z = integers()
    extra = minimal_monomial_basis(ut_z, [Z(0), Z(1), Z(2), Z(3), Z(5)])
    assert (Z(5),) in extra and (Z(2),) not in extra
    assert [g.value for g in ut_z.support] == [-2, 0, 1, 2, 3]


def test_classification_examples(m3, ut11):
    c = classify_grading(m3)
    assert c.nondegenerate and is_strong(m3)
    c = classify_grading(ut11)
    assert not c.nondegenerate and vals([c.witness]) == [(1, 1)]
    assert not is_strong(ut11)
    ut_z = algebra(None, (0, 1, 3), (1, 2), group=integers())
    with pytest.raises(InfiniteGroupStrongnessCheckError):
        is_strong(ut_z)


@pytest.mark.parametrize("blocks", [(1, 1), (2, 1), (1, 2), (1, 1, 1), (2, 2), (1, 1, 1, 1)])
def test_block_triangular_always_degenerate(blocks):
    n = sum(blocks)
    B = algebra(n, tuple(range(n)), blocks)
    c = classify_grading(B)
    assert not c.nondegenerate
    assert len(c.witness) <= 2 * n - 1
    assert is_monomial_identity(B, c.witness)


def test_zero_degrees_for_integers():
    Z = integers()
    B = algebra(None, (0, 1, 3), (1, 2), group=Z)
    zs = [g.value for g in zero_degrees(B)]
    assert 0 not in zs and 2 not in zs and -1 in zs and 4 in zs


def test_engine_properties(desk):
    B = desk
    support = list(B.support)
    for L in range(1, 5):
        for word in product(support, repeat=L):
            doms = prefix_domains(B, word)
            assert all(a >= b for a, b in zip(doms, doms[1:]))
            ident = is_monomial_identity(B, word)
            assert ident == monomial_vanishes(B, word)
            # a total bijective first map can be dropped
            if L > 1 and len(doms[0]) == B.n:
                assert ident == is_monomial_identity(B, word[1:])
            # stabilised domains make the R2 merge harmless
            for r in range(L - 2):
                if doms[r] == doms[r + 1] == doms[r + 2]:
                    h = word[r + 1] * word[r + 2]
                    merged = word[: r + 1] + (h,) + word[r + 3 :]
                    assert compose_maps(B, merged) == compose_maps(B, word)
            if ident:
                cert = reduce_monomial(B, word)
                if cert is not IRREDUCIBLE:
                    assert verify_certificate(B, cert)
