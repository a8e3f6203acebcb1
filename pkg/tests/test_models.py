import random
from fractions import Fraction
from itertools import product

import pytest

from gradedpi import GradedPolynomial, GradedVariable, Notation, cyclic, direct_product, is_graded_identity, parse
from gradedpi.errors import NotMultilinearError, TruncationTooSmallError
from gradedpi.sampling import random_multilinear
from gradedpi.tensor import (
    ColorModel,
    GrassmannModel,
    find_tensor_counterexample,
    grassmann_bicharacter,
    model_for,
    phi_h,
    super_group,
    symplectic_bicharacter,
    tensor_evaluate,
    transform_basis,
)
from gradedpi.tensor.models import _check_associative

from helpers import algebra, units_of_degree

Z2 = cyclic(2)


def grassmann_mul(a, b):
    """Product of sorted generator tuples in the exterior algebra, as (sign, word)."""
    if set(a) & set(b):
        return 0, None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1) ** inversions, tuple(sorted(a + b))


def naive_vanishes(B, k, f):
    """f on B ⊗ E_k by direct substitution of e_ij ⊗ (product of generators)."""
    variables = sorted(f.variables(), key=lambda v: v.index)
    G = B.group
    choices = []
    for v in variables:
        g, parity = v.degree.value
        words = [w for L in range(k + 1) for w in _subsets(k, L) if L % 2 == parity]
        choices.append([(u, w) for u in units_of_degree(B, G(g)) for w in words])
    for pick in product(*choices):
        sub = dict(zip(variables, pick))
        total = {}
        for word, c in f.items():
            (i, j), w = sub[word[0]]
            s = 1
            for v in word[1:]:
                (a, b), w2 = sub[v]
                if a != j:
                    s = 0
                    break
                sign, w = grassmann_mul(w, w2)
                if not sign:
                    s = 0
                    break
                s, j = s * sign, b
            if s:
                total[(i, j, w)] = total.get((i, j, w), 0) + c * s
        if any(total.values()):
            return False
    return True


def _subsets(k, L):
    from itertools import combinations

    return list(combinations(range(1, k + 1), L))


def test_documented_examples(ut11, m2):
    S = Notation(super_group(Z2), parity=True)
    f8 = parse("y[0,1]y[0,2] + y[0,2]y[0,1]", S)
    assert tensor_evaluate(ut11, GrassmannModel(2), f8)
    K = direct_product(Z2, Z2)
    f = GradedPolynomial.monomial((GradedVariable(K((1, 0)), 1), GradedVariable(K((1, 0)), 2)))
    assert not tensor_evaluate(m2, GrassmannModel(2), f)
    witness = find_tensor_counterexample(m2, GrassmannModel(2), f)
    assert witness is not None and len(witness) == 2


def test_errors(m2):
    S = Notation(super_group(Z2), parity=True)
    with pytest.raises(TruncationTooSmallError):
        tensor_evaluate(m2, GrassmannModel(2), parse("x[1,1]x[1,2]x[1,3]", S))
    with pytest.raises(NotMultilinearError):
        tensor_evaluate(m2, GrassmannModel(2), parse("x[1,1]x[1,1]", S))


def test_models_are_associative():
    for k in range(5):
        _check_associative(GrassmannModel(k))
    for beta in (symplectic_bicharacter(2), symplectic_bicharacter(3), grassmann_bicharacter()):
        _check_associative(ColorModel.for_arity(beta, 3))


def test_grassmann_model_basics():
    E = GrassmannModel(3)
    assert len(E.basis) == 8
    assert E.multiply(0b001, 0b010) == (1, 0b011)
    assert E.multiply(0b010, 0b001) == (-1, 0b011)
    assert E.multiply(0b001, 0b001) is None
    assert E.word_str(0b101) == "e1e3" and repr(E) == "E_3"


@pytest.mark.parametrize("name", ["UT11/Z2", "M2/Z2"])
def test_transport_on_e4(name):
    from conftest import DESK

    B = DESK[name]
    out = transform_basis(B, grassmann_bicharacter())
    E4 = GrassmannModel(4)
    for tag, f in out:
        assert tensor_evaluate(B, E4, f), tag


def test_transport_on_color_model(ut11, m2):
    beta = symplectic_bicharacter(2)
    for B in (ut11, m2):
        out = transform_basis(B, beta)
        arity = max(len(f.variables()) for _, f in out)
        model = model_for(beta, arity, 4)
        for tag, f in out:
            assert tensor_evaluate(B, model, f), tag


@pytest.mark.parametrize("name", ["UT11/Z2", "M2/Z2"])
def test_library_model_matches_naive_tensor(name):
    from conftest import DESK

    B = DESK[name]
    rng = random.Random(11)
    beta = grassmann_bicharacter()
    for _ in range(25):
        f = random_multilinear(B, rng, 3)
        k = max(v.index for v in f.variables())
        h = tuple(Z2(rng.randint(0, 1)) for _ in range(k))
        image = phi_h(f, h, beta)
        ours = tensor_evaluate(B, GrassmannModel(3), image)
        assert ours == naive_vanishes(B, 3, image)
        # transport in both directions
        assert ours == is_graded_identity(B, f)


def test_threads_do_not_change_witness(m2):
    K = direct_product(Z2, Z2)
    f = GradedPolynomial({
        (GradedVariable(K((1, 0)), 1), GradedVariable(K((1, 1)), 2)): 1,
        (GradedVariable(K((1, 1)), 2), GradedVariable(K((1, 0)), 1)): 1,
    })
    E = GrassmannModel(3)
    assert find_tensor_counterexample(m2, E, f, 1) == find_tensor_counterexample(m2, E, f, 8)
