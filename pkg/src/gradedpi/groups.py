"""Grading groups: cyclic, infinite cyclic, Cayley-table and direct products.

Elements are :class:`GroupElement` handles carrying their group, so mixing
elements of different groups is caught at the point of multiplication.

    >>> Z3 = cyclic(3)
    >>> Z3(2) * Z3(2)
    1
    >>> integers()(5).inverse()
    -5
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian
from typing import Any, Iterator, Sequence

from .errors import (
    ForeignElementError,
    MalformedTableError,
    MixedGroupsError,
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
)


class GroupElement:
    __slots__ = ("group", "value")

    def __init__(self, group: "Group", value):
        self.group = group
        self.value = value

    def _check(self, other):
        if not isinstance(other, GroupElement):
            raise MixedGroupsError(f"{other!r} is not a group element")
        if other.group is not self.group and other.group != self.group:
            raise MixedGroupsError(f"{self} and {other} belong to different groups")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, self.group._mul(self.value, other.value))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, self.group._inv(self.value))

    def is_identity(self) -> bool:
        return self.value == self.group.identity.value

    @property
    def key(self):
        return self.group.sort_key(self.value)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.value == other.value and (
            other.group is self.group or other.group == self.group
        )

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        self._check(other)
        return self.key < other.key

    def __str__(self):
        return self.group.format(self.value)

    __repr__ = __str__


@dataclass(frozen=True)
class Group:
    """An immutable, validated group.

    ``kind`` is one of ``"cyclic"``, ``"integers"``, ``"table"`` or
    ``"product"``. Use the module-level constructors rather than building one
    directly; they run the axiom checks.
    """

    kind: str
    order_: int | None = None
    names: tuple[str, ...] = ()
    table: tuple[tuple[int, ...], ...] = ()
    factors: tuple["Group", ...] = ()
    _identity_index: int = field(default=0, compare=False, repr=False)
    _inverses: tuple[int, ...] = field(default=(), compare=False, repr=False)

    # -- raw arithmetic on values -------------------------------------------------
    def _mul(self, a, b):
        k = self.kind
        if k == "cyclic":
            return (a + b) % self.order_
        if k == "integers":
            return a + b
        if k == "table":
            return self.table[a][b]
        return tuple(f._mul(x, y) for f, x, y in zip(self.factors, a, b))

    def _inv(self, a):
        k = self.kind
        if k == "cyclic":
            return (-a) % self.order_
        if k == "integers":
            return -a
        if k == "table":
            return self._inverses[a]
        return tuple(f._inv(x) for f, x in zip(self.factors, a))

    def _identity_value(self):
        k = self.kind
        if k in ("cyclic", "integers"):
            return 0
        if k == "table":
            return self._identity_index
        return tuple(f._identity_value() for f in self.factors)

    def contains_value(self, v) -> bool:
        k = self.kind
        if k == "cyclic":
            return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < self.order_
        if k == "integers":
            return isinstance(v, int) and not isinstance(v, bool)
        if k == "table":
            return isinstance(v, int) and 0 <= v < len(self.names)
        return (
            isinstance(v, tuple)
            and len(v) == len(self.factors)
            and all(f.contains_value(x) for f, x in zip(self.factors, v))
        )

    # -- public API ---------------------------------------------------------------
    def __call__(self, value) -> GroupElement:
        return self.element(value)

    def element(self, value) -> GroupElement:
        if isinstance(value, list):
            value = tuple(value)
        if not self.contains_value(value):
            raise ForeignElementError(f"{value!r} is not an element of {self}")
        return GroupElement(self, value)

    def check(self, g: GroupElement) -> GroupElement:
        """Raise :class:`ForeignElementError` unless ``g`` belongs to this group."""
        if not isinstance(g, GroupElement) or (g.group is not self and g.group != self):
            raise ForeignElementError(f"{g!r} is not an element of {self}")
        return g

    @cached_property
    def identity(self) -> GroupElement:
        return GroupElement(self, self._identity_value())

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self.check(a)
        self.check(b)
        return a * b

    def inverse(self, a: GroupElement) -> GroupElement:
        return self.check(a).inverse()

    @property
    def is_finite(self) -> bool:
        if self.kind == "integers":
            return False
        if self.kind == "product":
            return all(f.is_finite for f in self.factors)
        return True

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        if self.kind == "cyclic":
            return self.order_
        if self.kind == "table":
            return len(self.names)
        n = 1
        for f in self.factors:
            n *= f.order
        return n

    def _values(self) -> Iterator[Any]:
        k = self.kind
        if k == "cyclic":
            yield from range(self.order_)
        elif k == "table":
            yield from range(len(self.names))
        elif k == "product":
            yield from cartesian(*(list(f._values()) for f in self.factors))
        else:
            raise ValueError("the integers cannot be enumerated")

    def elements(self) -> list[GroupElement]:
        """All elements in canonical order (finite groups only)."""
        return [GroupElement(self, v) for v in self._values()]

    @cached_property
    def is_abelian(self) -> bool:
        if self.kind in ("cyclic", "integers"):
            return True
        if self.kind == "product":
            return all(f.is_abelian for f in self.factors)
        n = len(self.names)
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def sort_key(self, v):
        if self.kind == "product":
            return tuple(f.sort_key(x) for f, x in zip(self.factors, v))
        return v

    def format(self, v) -> str:
        if self.kind == "table":
            return self.names[v]
        if self.kind == "product":
            return "(" + ",".join(f.format(x) for f, x in zip(self.factors, v)) + ")"
        return str(v)

    def describe(self) -> dict:
        """The JSON description this group was (or could have been) built from."""
        if self.kind == "cyclic":
            return {"type": "cyclic", "order": self.order_}
        if self.kind == "integers":
            return {"type": "integers"}
        if self.kind == "table":
            return {"type": "table", "elements": list(self.names), "table": [list(r) for r in self.table]}
        return {"type": "product", "factors": [f.describe() for f in self.factors]}

    def __str__(self):
        if self.kind == "cyclic":
            return f"Z_{self.order_}"
        if self.kind == "integers":
            return "Z"
        if self.kind == "table":
            return f"Group({', '.join(self.names)})"
        return " x ".join(str(f) for f in self.factors)


def cyclic(m: int) -> Group:
    if not isinstance(m, int) or m < 1:
        raise MalformedTableError(f"cyclic group order must be a positive integer, got {m!r}")
    return Group("cyclic", order_=m)


def integers() -> Group:
    return Group("integers")


def direct_product(*factors: Group) -> Group:
    if not factors:
        raise MalformedTableError("a direct product needs at least one factor")
    return Group("product", factors=tuple(factors))


def table_group(names: Sequence[str], table: Sequence[Sequence[int]]) -> Group:
    """Build a group from a Cayley table of element indices, checking every axiom."""
    n = len(names)
    if n == 0:
        raise MalformedTableError("empty element list")
    if len(set(names)) != n:
        raise MalformedTableError("duplicate element names")
    if len(table) != n or any(len(row) != n for row in table):
        raise MalformedTableError(f"Cayley table must be {n}x{n}")
    for row in table:
        for x in row:
            if not isinstance(x, int) or not 0 <= x < n:
                raise MalformedTableError(f"table entry {x!r} is not an element index")
    t = tuple(tuple(row) for row in table)
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab][c] != t[a][t[b][c]]:
                    raise NotAssociativeError(names[a], names[b], names[c])
    ident = next(
        (e for e in range(n) if all(t[e][a] == a and t[a][e] == a for a in range(n))), None
    )
    if ident is None:
        raise NoIdentityError("no two-sided identity element")
    inverses = []
    for a in range(n):
        inv = next((b for b in range(n) if t[a][b] == ident and t[b][a] == ident), None)
        if inv is None:
            raise NoInverseError(names[a])
        inverses.append(inv)
    return Group(
        "table",
        names=tuple(str(x) for x in names),
        table=t,
        _identity_index=ident,
        _inverses=tuple(inverses),
    )


def make_group(desc: dict) -> Group:
    """Build a group from its JSON description."""
    if not isinstance(desc, dict) or "type" not in desc:
        raise MalformedTableError(f"group description must be an object with a 'type': {desc!r}")
    kind = desc["type"]
    if kind == "cyclic":
        return cyclic(desc.get("order"))
    if kind == "integers":
        return integers()
    if kind == "table":
        return table_group(desc.get("elements", []), desc.get("table", []))
    if kind == "product":
        return direct_product(*(make_group(f) for f in desc.get("factors", [])))
    raise MalformedTableError(f"unknown group type {kind!r}")
