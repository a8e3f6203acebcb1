"""Elementary gradings on subalgebras of M_n spanned by matrix units.

Matrix indices are 1-based throughout, so ``(1, 2)`` is the unit e_12.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptyShapeError,
    IndexOutOfRangeError,
    NonDistinctTupleError,
    SizeMismatchError,
)
from .groups import Group, GroupElement


@dataclass(frozen=True)
class UnitSet:
    """A multiplicatively closed set of matrix units e_ij of M_n."""

    n: int
    pairs: frozenset

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def is_closed(self) -> bool:
        by_row = {}
        for i, j in self.pairs:
            by_row.setdefault(i, []).append(j)
        return all(
            (i, k) in self.pairs for i, j in self.pairs for k in by_row.get(j, ())
        )


def close_units(pairs: Iterable[Sequence[int]], n: int) -> UnitSet:
    """Smallest multiplicatively closed set of units containing ``pairs``."""
    current = set()
    for p in pairs:
        i, j = p
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRangeError(f"unit ({i},{j}) outside 1..{n}")
        current.add((i, j))
    changed = True
    while changed:
        changed = False
        by_row = {}
        for i, j in current:
            by_row.setdefault(i, set()).add(j)
        for i, j in list(current):
            for k in by_row.get(j, ()):
                if (i, k) not in current:
                    current.add((i, k))
                    changed = True
    return UnitSet(n, frozenset(current))


def full_units(n: int) -> UnitSet:
    return UnitSet(n, frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1)))


def block_triangular_units(*sizes: int) -> UnitSet:
    """Units of the upper block-triangular algebra UT(d_1, ..., d_k)."""
    if len(sizes) == 1 and isinstance(sizes[0], (list, tuple)):
        sizes = tuple(sizes[0])
    if not sizes:
        raise EmptyShapeError("at least one block is required")
    if any(not isinstance(d, int) or d < 1 for d in sizes):
        raise EmptyShapeError(f"block sizes must be positive integers, got {sizes}")
    block_of = []
    for b, d in enumerate(sizes):
        block_of.extend([b] * d)
    n = len(block_of)
    pairs = frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(n) if block_of[i] <= block_of[j]
    )
    return UnitSet(n, pairs)


@dataclass(frozen=True)
class PartialMap:
    """A partial function on row indices 1..n.

    ``values[i - 1]`` is the image of ``i``, or 0 where undefined.
    """

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int | None:
        v = self.values[i - 1]
        return v or None

    def domain(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, v in enumerate(self.values) if v)

    def is_empty(self) -> bool:
        return not any(self.values)

    def then(self, other: "PartialMap") -> "PartialMap":
        """Apply ``self`` first, then ``other``."""
        ov = other.values
        return PartialMap(tuple(ov[c - 1] if c else 0 for c in self.values))

    @classmethod
    def identity(cls, n: int) -> "PartialMap":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def empty(cls, n: int) -> "PartialMap":
        return cls((0,) * n)

    def as_dict(self) -> dict[int, int]:
        return {i + 1: v for i, v in enumerate(self.values) if v}


@dataclass(frozen=True, eq=False)
class GradedSubalgebra:
    """A unit-spanned subalgebra of M_n with the grading deg e_ij = g_i^{-1} g_j.

    Built by :func:`induce_grading`; immutable afterwards.
    """

    group: Group
    tuple_: tuple[GroupElement, ...]
    units: UnitSet
    degree_of: dict
    support: tuple[GroupElement, ...]
    maps: dict

    @property
    def n(self) -> int:
        return self.units.n

    @property
    def is_full(self) -> bool:
        return len(self.units) == self.n * self.n

    def in_support(self, g: GroupElement) -> bool:
        return self.group.check(g) in self.maps

    def partial_map(self, g: GroupElement) -> PartialMap:
        """The map ĝ; empty when B_g = 0."""
        self.group.check(g)
        m = self.maps.get(g)
        return m if m is not None else PartialMap.empty(self.n)

    def component_basis(self, g: GroupElement) -> list[tuple[int, int]]:
        m = self.partial_map(g)
        return [(i + 1, j) for i, j in enumerate(m.values) if j]

    def dimension(self, g: GroupElement) -> int:
        return len(self.component_basis(g))

    def full_algebra(self) -> "GradedSubalgebra":
        """M_n with the grading induced by the same tuple."""
        if self.is_full:
            return self
        return induce_grading(self.group, self.tuple_, full_units(self.n))

    def describe(self) -> str:
        return f"B ⊆ M_{self.n} graded by {self.group} via ({', '.join(map(str, self.tuple_))})"


def induce_grading(group: Group, tuple_: Sequence, units: UnitSet) -> GradedSubalgebra:
    """The elementary grading on span(units) induced by a tuple of distinct elements."""
    if len(tuple_) != units.n:
        raise SizeMismatchError(f"tuple has length {len(tuple_)} but n = {units.n}")
    elems = tuple(
        group.check(g) if isinstance(g, GroupElement) else group.element(g) for g in tuple_
    )
    seen = {}
    for pos, g in enumerate(elems, start=1):
        if g in seen:
            raise NonDistinctTupleError(seen[g], pos)
        seen[g] = pos
    if not units.is_closed():
        raise IndexOutOfRangeError("unit set is not multiplicatively closed; use close_units")
    n = units.n
    degree_of = {}
    rows: dict[GroupElement, list[int]] = {}
    for i, j in sorted(units.pairs):
        d = elems[i - 1].inverse() * elems[j - 1]
        degree_of[(i, j)] = d
        vals = rows.setdefault(d, [0] * n)
        # distinct tuple entries make the column unique for each (row, degree)
        assert vals[i - 1] == 0
        vals[i - 1] = j
    support = tuple(sorted(rows, key=lambda g: g.key))
    maps = {g: PartialMap(tuple(rows[g])) for g in support}
    return GradedSubalgebra(group, elems, units, degree_of, support, maps)
