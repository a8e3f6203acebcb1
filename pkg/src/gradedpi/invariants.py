"""The self-check suite behind ``gradedpi verify``.

Each check returns ``(name, passed, detail)``. Everything is seeded, so a
run is reproducible and independent of the worker count.
"""
from __future__ import annotations

import random
from itertools import product as cartesian

from .freealg import GradedPolynomial, basis_generators, monomial_word
from .generic import (
    brute_force_multilinear_check,
    evaluate,
    evaluate_word,
    fingerprint,
    is_graded_identity,
    project_to_subalgebra,
)
from .grading import GradedSubalgebra
from .monomials import (
    compose_maps,
    enumerate_monomial_identities,
    is_monomial_identity,
    minimal_monomial_basis,
    reduce_monomial,
    verify_certificate,
    IRREDUCIBLE,
)
from .sampling import random_monomial, random_multilinear
from .scalars import QQ


def check_partial_maps(B: GradedSubalgebra):
    bad = []
    for (i, j), g in B.degree_of.items():
        if B.partial_map(g)(i) != j:
            bad.append((i, j))
    return "partial maps match unit degrees", not bad, f"{len(B.degree_of)} units"


def check_monomial_oracle(B: GradedSubalgebra, max_len: int):
    count = 0
    for length in range(1, max_len + 1):
        for word in cartesian(B.support, repeat=length):
            count += 1
            generic_zero = evaluate_word(B, monomial_word(word)).is_zero()
            if generic_zero != is_monomial_identity(B, word):
                return "monomial identities agree with the generic oracle", False, str(word)
    return "monomial identities agree with the generic oracle", True, f"{count} words"


def check_lines(B: GradedSubalgebra, rng: random.Random, samples: int):
    name = "generic monomials are lines"
    for _ in range(samples):
        word = random_monomial(B, rng, 6)
        M = evaluate_word(B, word)
        rows = [i for i, _ in M.entries]
        if len(rows) != len(set(rows)):
            return name, False, f"two entries in a row for {word}"
        if any(not p.is_monomial() for p in M.entries.values()):
            return name, False, f"non-monomial entry for {word}"
        nu = compose_maps(B, [v.degree for v in word])
        if set(rows) != set(nu.domain()) or any(nu(i) != j for i, j in M.entries):
            return name, False, f"support mismatch for {word}"
        fp = fingerprint(B, word)
        full = tuple(sorted((i, j, next(iter(p.terms))) for (i, j), p in M.entries.items()))
        if fp.entries != full:
            return name, False, f"fingerprint mismatch for {word}"
    return name, True, f"{samples} monomials"


def check_reduction(B: GradedSubalgebra, max_len: int, threads: int = 1):
    name = "identity words reduce to the minimal basis"
    minimal = set(minimal_monomial_basis(B))
    words = enumerate_monomial_identities(B, max_len, threads)
    for w in words:
        cert = reduce_monomial(B, w)
        final = w if cert is IRREDUCIBLE else cert.final
        if cert is not IRREDUCIBLE and not verify_certificate(B, cert):
            return name, False, f"bad certificate for {w}"
        if final not in minimal:
            return name, False, f"{w} ends at {final}, not in the minimal basis"
    return name, True, f"{len(words)} identity words up to length {max_len}"


def check_basis(B: GradedSubalgebra, universe=None):
    gens = basis_generators(B, universe)
    for tag, f in gens:
        if not is_graded_identity(B, f):
            return "basis generators are identities", False, tag
    return "basis generators are identities", True, f"{len(gens)} generators"


def check_oracles(B: GradedSubalgebra, rng: random.Random, samples: int, ring=QQ):
    hits = 0
    for _ in range(samples):
        f = random_multilinear(B, rng, 4)
        a = is_graded_identity(B, f, ring)
        if a != brute_force_multilinear_check(B, f, ring):
            return "generic oracle agrees with brute force", False, str(f)
        hits += a
    return "generic oracle agrees with brute force", True, f"{samples} polynomials, {hits} identities"


def check_projection(B: GradedSubalgebra, rng: random.Random, samples: int):
    A = B.full_algebra()
    for _ in range(samples):
        word = random_monomial(B, rng, 5)
        f = GradedPolynomial.monomial(word)
        if project_to_subalgebra(evaluate(A, f), B) != evaluate(B, f):
            return "projection from M_n is coherent", False, str(word)
    return "projection from M_n is coherent", True, f"{samples} monomials"


def check_tensor(B: GradedSubalgebra, beta, universe=None, truncation=None, threads: int = 1):
    from .tensor import model_for, tensor_evaluate, transform_basis

    name = "transported basis vanishes on the model"
    out = transform_basis(B, beta, universe)
    arity = max((len(f.variables()) for _, f in out), default=1)
    model = model_for(beta, arity, truncation)
    for tag, f in out:
        if not tensor_evaluate(B, model, f, threads):
            return name, False, tag
    return name, True, f"{len(out)} polynomials on {model!r}"


def run_suite(B: GradedSubalgebra, universe=None, tensor=None, threads: int = 1, seed: int = 0):
    rng = random.Random(seed)
    bound = 2 * B.n - 1
    results = [
        check_partial_maps(B),
        check_monomial_oracle(B, min(bound, 4)),
        check_lines(B, rng, 100),
        check_reduction(B, min(2 * B.n + 1, 7), threads),
        check_basis(B, universe),
        check_oracles(B, rng, 50),
        check_projection(B, rng, 30),
    ]
    if tensor is not None:
        results.append(check_tensor(B, tensor.beta, universe, tensor.truncation, threads))
    return results
