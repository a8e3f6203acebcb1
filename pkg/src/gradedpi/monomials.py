"""Monomial identities via composition of the partial maps ĝ.

A degree word (h_1, ..., h_p) stands for the monomial x_{h_1}^{(1)} ... x_{h_p}^{(p)};
variable indices never affect whether a monomial is an identity, so words are
plain tuples of group elements here.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterable, Sequence

from .errors import InfiniteGroupStrongnessCheckError, NotAnIdentityError
from .grading import GradedSubalgebra, PartialMap
from .groups import GroupElement

DegreeSequence = tuple  # of GroupElement


def word_key(seq: Sequence[GroupElement]):
    """Canonical order on degree words: shorter first, then lexicographic."""
    return (len(seq), tuple(g.key for g in seq))


def compose_maps(B: GradedSubalgebra, seq: Sequence[GroupElement]) -> PartialMap:
    """ν = ĥ_p ⋯ ĥ_1 as a partial map (ĥ_1 applied first)."""
    nu = PartialMap.identity(B.n)
    for h in seq:
        nu = nu.then(B.partial_map(h))
    return nu


def prefix_domains(B: GradedSubalgebra, seq: Sequence[GroupElement]) -> list[frozenset]:
    """Domains D_1 ⊇ D_2 ⊇ ... of the successive prefix compositions."""
    out = []
    nu = PartialMap.identity(B.n)
    for h in seq:
        nu = nu.then(B.partial_map(h))
        out.append(frozenset(nu.domain()))
    return out


def is_monomial_identity(B: GradedSubalgebra, seq: Sequence[GroupElement]) -> bool:
    if not seq:
        raise ValueError("empty degree word")
    return compose_maps(B, seq).is_empty()


def _support_tables(B):
    return [B.maps[g].values for g in B.support]


def _is_identity_idx(tables, n, word) -> bool:
    for start in range(1, n + 1):
        c = start
        for letter in word:
            c = tables[letter][c - 1]
            if not c:
                break
        else:
            return False
    return True


def _enumerate_from(tables, n, max_deg, first):
    s = len(tables)
    found = []
    stack = [((first,), tables[first])]
    while stack:
        word, nu = stack.pop()
        if not any(nu):
            found.append(word)
            for extra in range(1, max_deg - len(word) + 1):
                for tail in cartesian(range(s), repeat=extra):
                    found.append(word + tail)
            continue
        if len(word) == max_deg:
            continue
        for letter in range(s):
            t = tables[letter]
            stack.append((word + (letter,), tuple(t[c - 1] if c else 0 for c in nu)))
    return found


def enumerate_monomial_identities(
    B: GradedSubalgebra, max_deg: int, threads: int = 1
) -> list[DegreeSequence]:
    """All identity words over the support of length ≤ ``max_deg``, canonically ordered.

    Letters outside the support are not enumerated: any word containing one is
    an identity already implied by x_g (B_g = 0); see :func:`zero_degrees`.
    """
    if max_deg < 1:
        raise ValueError("max_deg must be at least 1")
    tables = _support_tables(B)
    n = B.n
    firsts = range(len(tables))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda f: _enumerate_from(tables, n, max_deg, f), firsts))
    else:
        parts = [_enumerate_from(tables, n, max_deg, f) for f in firsts]
    idx_words = [w for part in parts for w in part]
    # support is already in canonical element order, so index order == element order
    idx_words.sort(key=lambda w: (len(w), w))
    return [tuple(B.support[i] for i in w) for w in idx_words]


def default_universe(B: GradedSubalgebra) -> list[GroupElement]:
    """Finite groups: every element. Otherwise the support, and products of at most
    two support elements or their inverses."""
    G = B.group
    if G.is_finite:
        return G.elements()
    gens = set(B.support) | {g.inverse() for g in B.support}
    universe = set(gens) | {a * b for a in gens for b in gens}
    return sorted(universe, key=lambda g: g.key)


def zero_degrees(B: GradedSubalgebra, universe: Iterable[GroupElement] | None = None) -> list[GroupElement]:
    """Degrees g in the universe with B_g = 0, i.e. the type-(5) identities x_g."""
    if universe is None:
        universe = default_universe(B)
    out = {B.group.check(g) for g in universe if g not in B.maps}
    return sorted(out, key=lambda g: g.key)


# -- reduction certificates ---------------------------------------------------------

@dataclass(frozen=True)
class Step:
    """One reduction move.

    ``R1``: ``span = (a, b)`` names the 1-based inclusive positions of a proper
    subword that is itself an identity. ``R2``: letters at positions ``at`` and
    ``at + 1`` merge into their product ``merged`` and the shorter word is an
    identity.
    """

    move: str
    result: DegreeSequence
    span: tuple[int, int] | None = None
    at: int | None = None
    merged: GroupElement | None = None

    def to_json(self) -> dict:
        if self.move == "R1":
            return {"move": "R1", "span": list(self.span)}
        return {"move": "R2", "at": self.at, "merged": str(self.merged)}


@dataclass(frozen=True)
class ReductionCertificate:
    start: DegreeSequence
    steps: tuple[Step, ...]

    @property
    def final(self) -> DegreeSequence:
        return self.steps[-1].result if self.steps else self.start

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


class _Irreducible:
    def __repr__(self):
        return "IRREDUCIBLE"

    def __bool__(self):
        return False


IRREDUCIBLE = _Irreducible()


def find_move(B: GradedSubalgebra, seq: Sequence[GroupElement]) -> Step | None:
    """First applicable move: R1 by (start, length) ascending, then R2 by position."""
    seq = tuple(seq)
    p = len(seq)
    for a in range(p):
        for length in range(1, p - a + 1):
            if length == p:
                continue
            sub = seq[a : a + length]
            if is_monomial_identity(B, sub):
                return Step("R1", sub, span=(a + 1, a + length))
    for r in range(p - 1):
        h = seq[r] * seq[r + 1]
        if h not in B.maps:
            # merges must stay inside the support
            continue
        merged = seq[:r] + (h,) + seq[r + 2 :]
        if is_monomial_identity(B, merged):
            return Step("R2", merged, at=r + 1, merged=h)
    return None


def is_irreducible(B: GradedSubalgebra, seq: Sequence[GroupElement]) -> bool:
    return find_move(B, seq) is None


def reduce_monomial(B: GradedSubalgebra, seq: Sequence[GroupElement]):
    """Reduce an identity word by R1/R2 moves until none applies.

    Returns :data:`IRREDUCIBLE` when no move applies to ``seq`` itself, and
    otherwise a :class:`ReductionCertificate` whose final word is irreducible.
    """
    seq = tuple(B.group.check(g) for g in seq)
    if not is_monomial_identity(B, seq):
        raise NotAnIdentityError(f"{_fmt(seq)} is not a monomial identity")
    steps = []
    current = seq
    while True:
        step = find_move(B, current)
        if step is None:
            break
        steps.append(step)
        current = step.result
    if not steps:
        return IRREDUCIBLE
    return ReductionCertificate(seq, tuple(steps))


def verify_certificate(B: GradedSubalgebra, cert: ReductionCertificate) -> bool:
    """Independently re-check every step of a certificate."""
    current = tuple(cert.start)
    if not is_monomial_identity(B, current):
        return False
    for step in cert.steps:
        if step.move == "R1":
            a, b = step.span
            if not (1 <= a <= b <= len(current)) or b - a + 1 >= len(current):
                return False
            expect = current[a - 1 : b]
        elif step.move == "R2":
            r = step.at
            if not 1 <= r < len(current):
                return False
            if current[r - 1] * current[r] != step.merged:
                return False
            expect = current[: r - 1] + (step.merged,) + current[r + 1 :]
        else:
            return False
        if expect != step.result or not is_monomial_identity(B, expect):
            return False
        current = expect
    return True


def minimal_monomial_basis(
    B: GradedSubalgebra, universe: Iterable[GroupElement] | None = None
) -> list[DegreeSequence]:
    """R1/R2-irreducible identity words of length ≤ 2n−1.

    With a ``universe``, the type-(5) generators (g) for each g in it with
    B_g = 0 are appended as length-one words.
    """
    words = [w for w in enumerate_monomial_identities(B, 2 * B.n - 1) if is_irreducible(B, w)]
    if universe is not None:
        words.extend((g,) for g in zero_degrees(B, universe))
    return words


# -- classification ----------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    nondegenerate: bool
    witness: DegreeSequence | None = None
    checked_up_to: int = 0
    zero_degrees: tuple = field(default=())

    def __str__(self):
        if self.nondegenerate:
            return "nondegenerate"
        return f"degenerate, witness {_fmt(self.witness)}"


def classify_grading(B: GradedSubalgebra, universe: Iterable[GroupElement] | None = None) -> Classification:
    """Decide nondegeneracy.

    Words over the support are searched up to length 2n−1, which is complete
    because every monomial identity follows from one of at most that length.
    Degrees with a zero component are reported as length-one witnesses only
    when no support word is an identity.
    """
    bound = 2 * B.n - 1
    tables = _support_tables(B)
    n = B.n
    level = [((i,), tables[i]) for i in range(len(tables))]
    for length in range(1, bound + 1):
        for word, nu in level:
            if not any(nu):
                return Classification(False, tuple(B.support[i] for i in word), bound)
        if length == bound:
            break
        seen = {}
        for word, nu in level:
            for l, t in enumerate(tables):
                nxt = tuple(t[c - 1] if c else 0 for c in nu)
                # equal composed maps extend identically; keep the first word
                seen.setdefault(nxt, word + (l,))
        level = [(w, nu) for nu, w in seen.items()]
    zeros = tuple(zero_degrees(B, universe))
    if zeros:
        return Classification(False, (zeros[0],), bound, zeros)
    return Classification(True, None, bound)


def is_strong(B: GradedSubalgebra) -> bool:
    """Whether B_g B_h = B_{gh} for all g, h in the (finite) group."""
    G = B.group
    if not G.is_finite:
        raise InfiniteGroupStrongnessCheckError(f"strongness quantifies over all of {G}")
    for g in G.elements():
        bg = B.component_basis(g)
        for h in G.elements():
            bh = B.component_basis(h)
            cols_by_row = {}
            for i, j in bh:
                cols_by_row.setdefault(i, []).append(j)
            spanned = {(i, k) for i, j in bg for k in cols_by_row.get(j, ())}
            if len(spanned) != B.dimension(g * h):
                return False
    return True


def _fmt(seq) -> str:
    return "(" + ",".join(str(g) for g in seq) + ")"


def format_word(seq) -> str:
    return _fmt(seq)
