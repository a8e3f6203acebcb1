"""Exact scalars: rationals, integers mod p, and elements of Q(ζ_m).

Cyclotomic numbers are stored as coefficient vectors modulo the m-th
cyclotomic polynomial, so a value is zero exactly when it is zero in the field
(1 + ζ_3 + ζ_3² really is 0 here).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


# -- integer polynomial helpers (coefficient lists, lowest degree first) ------------

def _poly_divmod(num, den):
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = Fraction(num[-1], 1) / lead
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        num.pop()
        while num and num[-1] == 0 and len(num) >= len(den):
            num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Φ_m as integer coefficients, lowest degree first."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(int(c) for c in poly)


def _reduce(coeffs, m):
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for top in range(len(c) - 1, deg - 1, -1):
        t = c[top]
        if t:
            # x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
            for i in range(deg):
                c[top - deg + i] -= t * phi[i]
            c[top] = 0
    c = c[:deg] + [Fraction(0)] * (deg - len(c))
    return tuple(c)


def _lcm(a, b):
    return a * b // gcd(a, b)


class Cyclotomic:
    """An element of Q(ζ_m), with ζ_m = exp(2πi/m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        self.coeffs = _reduce(coeffs, m)

    @classmethod
    def root(cls, m: int, e: int) -> "Cyclotomic":
        e %= m
        v = [0] * (e + 1)
        v[e] = 1
        return cls(m, v)

    @classmethod
    def lift(cls, x, m: int) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            if m % x.m:
                raise ValueError(f"cannot embed Q(ζ_{x.m}) in Q(ζ_{m})")
            step = m // x.m
            v = [Fraction(0)] * (step * (len(x.coeffs) - 1) + 1)
            for i, c in enumerate(x.coeffs):
                v[i * step] = c
            return cls(m, v)
        return cls(m, [Fraction(x)])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def simplify(self):
        return self.coeffs[0] if self.is_rational() else self

    def _pair(self, other):
        om = other.m if isinstance(other, Cyclotomic) else 1
        m = _lcm(self.m, om)
        return Cyclotomic.lift(self, m), Cyclotomic.lift(other, m), m

    def __add__(self, other):
        if not isinstance(other, (Cyclotomic, Fraction, int)):
            return NotImplemented
        a, b, m = self._pair(other)
        return Cyclotomic(m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (Cyclotomic, Fraction, int)):
            return NotImplemented
        a, b, m = self._pair(other)
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return Cyclotomic(m, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        deg = len(self.coeffs)
        # columns: self * x^j reduced; solve M v = e_0
        cols = []
        for j in range(deg):
            shifted = [Fraction(0)] * j + list(self.coeffs)
            cols.append(_reduce(shifted, self.m))
        rows = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        for c in range(deg):
            piv = next(r for r in range(c, deg) if rows[r][c])
            rows[c], rows[piv] = rows[piv], rows[c]
            pv = rows[c][c]
            rows[c] = [x / pv for x in rows[c]]
            for r in range(deg):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return Cyclotomic(self.m, [rows[i][deg] for i in range(deg)])

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return self * (Fraction(1) / Fraction(other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclotomic(self.m, [1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (Fraction, int)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            a, b, _ = self._pair(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def key(self):
        return (self.m, tuple((c.numerator, c.denominator) for c in self.coeffs))

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            z = "" if i == 0 else (f"ζ{self.m}" if i == 1 else f"ζ{self.m}^{i}")
            if not z:
                terms.append(str(c))
            elif c == 1:
                terms.append(z)
            elif c == -1:
                terms.append("-" + z)
            else:
                terms.append(f"{c}*{z}")
        return "(" + " + ".join(terms).replace("+ -", "- ") + ")"

    __repr__ = __str__


def root_of_unity(m: int, e: int):
    """ζ_m^e, as a Fraction when it is rational (m ≤ 2)."""
    if m <= 2:
        return Fraction(-1) if (m == 2 and e % 2) else Fraction(1)
    return Cyclotomic.root(m, e).simplify()


def simplify(x):
    return x.simplify() if isinstance(x, Cyclotomic) else x


def scalar_key(x):
    """A total-order key for exact scalars (used for canonical forms)."""
    x = simplify(x)
    if isinstance(x, Cyclotomic):
        return (1,) + x.key()
    x = Fraction(x)
    return (0, x.numerator, x.denominator)


def scalar_str(x) -> str:
    return str(simplify(x))


# -- coefficient rings for the polynomial ring Ω -------------------------------------

class Rationals:
    """Exact rational coefficients (characteristic 0)."""

    modulus = None

    def coerce(self, x):
        if isinstance(x, Cyclotomic):
            x = x.simplify()
            if isinstance(x, Cyclotomic):
                raise ValueError("irrational coefficient in a rational computation")
        return Fraction(x)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """Integers modulo a prime p (characteristic p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.modulus = p

    def coerce(self, x):
        x = Fraction(x)
        p = self.modulus
        if x.denominator % p == 0:
            raise ValueError(f"coefficient {x} is undefined modulo {p}")
        return x.numerator * pow(x.denominator, -1, p) % p

    def __repr__(self):
        return f"GF({self.modulus})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))


QQ = Rationals()


def coefficient_ring(modulus: int | None = None):
    return QQ if modulus is None else PrimeField(modulus)
