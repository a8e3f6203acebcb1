"""Text syntax for graded polynomials.

Grammar (whitespace is ignored between tokens)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := [coef] factor+
    coef   := integer ['/' integer]
    factor := var | '(' expr ')'
    var    := ('x'|'y') '[' degree ',' integer ']'
    degree := ['-'] integer | name | '(' degree (',' degree)* ')'

``y`` variables are odd: they are only allowed when the notation group is a
product G x Z_2 with the Z_2 factor marked as the parity slot, in which case
``x[g,i]`` has degree (g,0) and ``y[g,i]`` has degree (g,1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ExpressionSyntaxError,
    ParityVariableWithoutZ2Error,
    UnknownGroupElementError,
)
from .freealg import GradedPolynomial, GradedVariable
from .groups import Group, GroupElement
from .scalars import Cyclotomic, simplify


@dataclass(frozen=True)
class Notation:
    """How variable degrees are read and written.

    ``parity`` designates the last factor of a two-factor product group as the
    Z_2 parity slot. ``modular`` reduces out-of-range literals of cyclic
    groups instead of rejecting them.
    """

    group: Group
    parity: bool = False
    modular: bool = False

    @property
    def has_parity_slot(self) -> bool:
        g = self.group
        return (
            self.parity
            and g.kind == "product"
            and len(g.factors) == 2
            and g.factors[1].kind == "cyclic"
            and g.factors[1].order_ == 2
        )

    @property
    def base_group(self) -> Group:
        return self.group.factors[0] if self.has_parity_slot else self.group


def _resolve(group: Group, ast, modular: bool):
    kind = ast[0]
    if group.kind == "product":
        if kind != "tuple" or len(ast[1]) != len(group.factors):
            raise UnknownGroupElementError(
                f"{_ast_str(ast)} is not an element of {group} (expected a {len(group.factors)}-tuple)"
            )
        return tuple(_resolve(f, a, modular) for f, a in zip(group.factors, ast[1]))
    if group.kind == "table":
        text = _ast_str(ast)
        if text in group.names:
            return group.names.index(text)
        raise UnknownGroupElementError(f"{text} is not an element of {group}")
    if kind != "int":
        raise UnknownGroupElementError(f"{_ast_str(ast)} is not an element of {group}")
    v = ast[1]
    if group.kind == "cyclic":
        if 0 <= v < group.order_:
            return v
        if modular:
            return v % group.order_
        raise UnknownGroupElementError(f"{v} is not an element of {group} (no modular reduction)")
    return v


def _ast_str(ast) -> str:
    if ast[0] == "tuple":
        return "(" + ",".join(_ast_str(a) for a in ast[1]) + ")"
    return str(ast[1]) if ast[0] == "int" else ast[1]


class _Parser:
    def __init__(self, text: str, notation: Notation):
        self.s = text
        self.i = 0
        self.notation = notation

    def error(self, msg):
        raise ExpressionSyntaxError(msg, self.i)

    def peek(self) -> str:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def integer(self) -> int:
        self.peek()
        start = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected an integer")
        return int(self.s[start : self.i])

    def name(self) -> str:
        self.peek()
        start = self.i
        while self.i < len(self.s) and (self.s[self.i].isalnum() or self.s[self.i] in "_'"):
            self.i += 1
        if start == self.i:
            self.error("expected a group element")
        return self.s[start : self.i]

    def expr(self) -> GradedPolynomial:
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
        total = sign * self.term()
        while self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
            total = total + sign * self.term()
        return total

    def term(self) -> GradedPolynomial:
        coef = Fraction(1)
        if self.peek().isdigit():
            coef = Fraction(self.integer())
            if self.peek() == "/":
                self.i += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                coef /= den
        factors = []
        while self.peek() and self.peek() in "xy(":
            factors.append(self.factor())
        if not factors:
            self.error("expected a variable or '('")
        out = factors[0]
        for f in factors[1:]:
            out = out * f
        return coef * out

    def factor(self) -> GradedPolynomial:
        if self.peek() == "(":
            self.i += 1
            inner = self.expr()
            self.expect(")")
            return inner
        letter = self.peek()
        pos = self.i
        self.i += 1
        self.expect("[")
        ast = self.degree()
        self.expect(",")
        index = self.integer()
        if index < 1:
            self.error("variable index must be at least 1")
        self.expect("]")
        return GradedPolynomial.monomial((self.variable(letter, ast, index, pos),))

    def variable(self, letter, ast, index, pos) -> GradedVariable:
        nt = self.notation
        if nt.has_parity_slot:
            base = _resolve(nt.base_group, ast, nt.modular)
            return GradedVariable(nt.group.element((base, 1 if letter == "y" else 0)), index)
        if letter == "y":
            raise ParityVariableWithoutZ2Error(
                f"odd variable at position {pos} needs a G x Z_2 group with a parity slot"
            )
        return GradedVariable(nt.group.element(_resolve(nt.group, ast, nt.modular)), index)

    def degree(self):
        ch = self.peek()
        if ch == "(":
            self.i += 1
            parts = [self.degree()]
            while self.peek() == ",":
                self.i += 1
                parts.append(self.degree())
            self.expect(")")
            return ("tuple", parts)
        if ch == "-":
            self.i += 1
            return ("int", -self.integer())
        if ch.isdigit():
            return ("int", self.integer())
        return ("name", self.name())


def parse(text: str, notation: Notation | Group) -> GradedPolynomial:
    """Parse a polynomial; equal monomials are merged. A lone ``0`` is the
    zero polynomial, matching :func:`pretty_print`."""
    if isinstance(notation, Group):
        notation = Notation(notation)
    if text.strip() == "0":
        return GradedPolynomial.zero()
    p = _Parser(text, notation)
    if not p.peek():
        p.error("empty expression")
    f = p.expr()
    if p.peek():
        p.error(f"unexpected {p.peek()!r}")
    return f


def format_variable(v: GradedVariable, notation: Notation | None = None) -> str:
    if notation is not None and notation.has_parity_slot and v.degree.group == notation.group:
        base, parity = v.degree.value
        letter = "y" if parity else "x"
        return f"{letter}[{notation.base_group.format(base)},{v.index}]"
    return f"x[{v.degree},{v.index}]"


def format_word(word, notation: Notation | None = None) -> str:
    return "".join(format_variable(v, notation) for v in word)


def pretty_print(f: GradedPolynomial, notation: Notation | None = None) -> str:
    """Canonical text form; ``parse(pretty_print(f)) == f`` for rational coefficients."""
    if not f:
        return "0"
    parts = []
    for n, (word, c) in enumerate(f.items()):
        body = format_word(word, notation)
        c = simplify(c)
        if isinstance(c, Cyclotomic):
            parts.append((" + " if n else "") + f"{c}*{body}")
            continue
        negative = c < 0
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        if n == 0:
            parts.append(("-" if negative else "") + coef + body)
        else:
            parts.append((" - " if negative else " + ") + coef + body)
    return "".join(parts)
