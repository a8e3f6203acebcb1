"""Seeded random graded words and multilinear polynomials for property checks."""
from __future__ import annotations

import random
from itertools import permutations

from .freealg import GradedPolynomial, GradedVariable, identity_3, identity_4, monomial_word
from .grading import GradedSubalgebra
from .monomials import default_universe


def random_degree_word(B: GradedSubalgebra, rng: random.Random, length: int, outside: float = 0.1):
    """Letters mostly from the support; with probability ``outside`` from the
    whole default universe."""
    universe = default_universe(B)
    return tuple(
        rng.choice(universe) if rng.random() < outside else rng.choice(B.support)
        for _ in range(length)
    )


def random_monomial(B: GradedSubalgebra, rng: random.Random, max_len: int, n_vars: int = 3):
    """A word whose letters reuse a few variables, so it need not be multilinear."""
    length = rng.randint(1, max_len)
    pool = [GradedVariable(g, i + 1) for i, g in enumerate(random_degree_word(B, rng, n_vars, 0.05))]
    return tuple(rng.choice(pool) for _ in range(length))


def _shift(f: GradedPolynomial, by: int) -> GradedPolynomial:
    return GradedPolynomial({tuple(GradedVariable(v.degree, v.index + by) for v in w): c for w, c in f.terms.items()})


def _wrapped_identity(B: GradedSubalgebra, rng: random.Random, max_arity: int):
    e = B.group.identity
    choices = []
    if e in B.maps:
        choices.append(identity_3(e))
    choices.extend(identity_4(g) for g in B.support if g != e)
    if not choices:
        return None
    core = rng.choice(choices)
    k = len(core.variables())
    spare = max_arity - k
    if spare < 0:
        return None
    left = rng.randint(0, spare)
    right = rng.randint(0, spare - left)
    f = _shift(core, left)
    if left:
        f = GradedPolynomial.monomial(monomial_word(random_degree_word(B, rng, left, 0))) * f
    if right:
        f = f * GradedPolynomial.monomial(monomial_word(random_degree_word(B, rng, right, 0), left + k + 1))
    return f


def random_multilinear(B: GradedSubalgebra, rng: random.Random, max_arity: int = 4) -> GradedPolynomial:
    """A nonzero multilinear polynomial of arity ≤ ``max_arity``.

    Mixes plain random combinations of permuted monomials with known
    identities wrapped in extra variables, plus perturbations of those, so
    both verdicts occur often.
    """
    kind = rng.random()
    if kind < 0.3:
        f = _wrapped_identity(B, rng, max_arity)
        if f is not None:
            if kind < 0.1:
                k = len(f.variables())
                degs = [v.degree for v in sorted(f.variables(), key=lambda v: v.index)]
                perm = rng.sample(range(k), k)
                f = f + GradedPolynomial.monomial(tuple(GradedVariable(degs[p], p + 1) for p in perm), rng.choice([1, -1, 2]))
            return f
    k = rng.randint(1, max_arity)
    degs = random_degree_word(B, rng, k, 0.05)
    variables = [GradedVariable(g, i + 1) for i, g in enumerate(degs)]
    perms = list(permutations(range(k)))
    chosen = rng.sample(perms, rng.randint(1, min(4, len(perms))))
    f = GradedPolynomial({tuple(variables[p] for p in perm): rng.choice([1, -1, 2, -3]) for perm in chosen})
    if not f:
        return GradedPolynomial.monomial(tuple(variables))
    return f
