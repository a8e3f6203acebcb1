from fractions import Fraction

import pytest

from gradedpi import cyclic, direct_product
from gradedpi.errors import ComponentTooBigError, GradedPIError
from gradedpi.tensor import (
    ColorModel,
    GradedStructure,
    GrassmannModel,
    check_regular,
    symplectic_bicharacter,
    theta_as_bicharacter,
)

Z2 = cyclic(2)
K4 = direct_product(Z2, Z2)

I = [[1, 0], [0, 1]]
X = [[0, 1], [1, 0]]
Z = [[1, 0], [0, -1]]
XZ = [[0, -1], [1, 0]]


def test_pauli_grading_is_regular():
    S = GradedStructure.from_matrices(K4, {(0, 0): I, (1, 0): X, (0, 1): Z, (1, 1): XZ})
    r = check_regular(S, 4)
    assert r.is_regular
    assert r.theta[((1, 0), (0, 1))] == -1
    assert r.theta[((1, 0), (1, 0))] == 1
    assert set(r.theta.values()) == {1, -1}
    beta = theta_as_bicharacter(K4, r.theta)
    assert beta is not None and beta.table() == symplectic_bicharacter(2).table()


def test_grassmann_truncations_are_regular():
    for k in (2, 3, 4):
        r = check_regular(GradedStructure.from_model(GrassmannModel(k)), k)
        assert r.is_regular
        assert r.theta[(1, 1)] == -1 and r.theta[(0, 1)] == 1


def test_color_model_is_regular():
    model = ColorModel.for_arity(symplectic_bicharacter(3), 3)
    assert check_regular(GradedStructure.from_model(model), 3).is_regular


def test_component_too_big(ut11):
    with pytest.raises(ComponentTooBigError):
        check_regular(GradedStructure.from_subalgebra(ut11), 3)


def test_condition_1_failure():
    e12 = [[0, 1], [0, 0]]
    S = GradedStructure.from_matrices(Z2, {0: I, 1: e12})
    r = check_regular(S, 3)
    assert r.status == "fails condition 1"
    assert tuple(h.value for h in r.witness) == (1, 1)


def test_condition_2_failure():
    S = GradedStructure.from_matrices(Z2, {0: [[1, 0], [0, 0]], 1: [[0, 1], [0, 0]]})
    r = check_regular(S, 3)
    assert r.status == "fails condition 2"
    assert tuple(h.value for h in r.witness) == (0, 1)


def test_bad_inputs():
    with pytest.raises(GradedPIError):
        check_regular(GradedStructure.from_matrices(Z2, {0: I, 1: X}), 1)
    with pytest.raises(GradedPIError):
        GradedStructure.from_matrices(Z2, {0: [[1, 1], [0, 1]], 1: X})
