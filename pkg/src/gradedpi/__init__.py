"""Exact graded polynomial identities of matrix-unit subalgebras of M_n."""

from .errors import GradedPIError, InvariantViolation
from .freealg import (
    GradedPolynomial,
    GradedVariable,
    basis_generators,
    identity_3,
    identity_4,
    identity_5,
    monomial_word,
    multidegree,
    multihomogeneous_components,
)
from .generic import (
    canonical_form,
    congruent_mod_U,
    evaluate,
    evaluate_word,
    fingerprint,
    generic_element,
    is_graded_identity,
    brute_force_multilinear_check,
    find_multilinear_counterexample,
    project_to_subalgebra,
)
from .grading import (
    GradedSubalgebra,
    PartialMap,
    UnitSet,
    block_triangular_units,
    close_units,
    full_units,
    induce_grading,
)
from .groups import Group, GroupElement, cyclic, direct_product, integers, make_group, table_group
from .monomials import (
    IRREDUCIBLE,
    ReductionCertificate,
    classify_grading,
    compose_maps,
    enumerate_monomial_identities,
    is_monomial_identity,
    is_strong,
    minimal_monomial_basis,
    reduce_monomial,
    verify_certificate,
)
from .parsing import Notation, parse, pretty_print
from .scalars import QQ, Cyclotomic, PrimeField, coefficient_ring, root_of_unity

__version__ = "0.1.0"
