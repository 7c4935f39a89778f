"""Exact polynomials and rational functions over Q."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

__all__ = ["Poly", "RationalGF", "X"]

Scalar = Union[int, Fraction]


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    c = [Fraction(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Polynomial with ``Fraction`` coefficients, index = degree.

    Trailing zeros are stripped; the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    @staticmethod
    def _lift(v) -> "Poly":
        if isinstance(v, Poly):
            return v
        if isinstance(v, (list, tuple)):
            return Poly(v)
        return Poly.const(v)

    def __add__(self, other) -> "Poly":
        other = Poly._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-Poly._lift(other))

    def __rsub__(self, other) -> "Poly":
        return Poly._lift(other) - self

    def __mul__(self, other) -> "Poly":
        other = Poly._lift(other)
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            q = rem[k] / lead
            if q:
                quot[k - d] = q
                for j, b in enumerate(other.coeffs):
                    rem[k - d + j] -= q * b
        return Poly(quot), Poly(rem[:d] if d > 0 else [])

    def monic(self) -> "Poly":
        if not self:
            return self
        lead = self.coeffs[-1]
        return Poly(c / lead for c in self.coeffs)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # text forms

    def to_text(self) -> str:
        """Ascending space-separated ``coeff*x^k`` terms; ``0`` for the zero polynomial."""
        if not self:
            return "0"
        return " ".join(f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c)

    @classmethod
    def from_text(cls, text: str) -> "Poly":
        text = text.strip()
        if text in ("", "0"):
            return cls()
        coeffs: dict[int, Fraction] = {}
        for term in text.split():
            m = re.fullmatch(r"([+-]?\d+(?:/\d+)?)(?:\*x(?:\^(\d+))?)?", term)
            if not m:
                raise ValueError(f"bad polynomial term {term!r}")
            c = Fraction(m.group(1))
            k = 0 if "x" not in term else int(m.group(2) or 1)
            coeffs[k] = coeffs.get(k, Fraction(0)) + c
        top = max(coeffs)
        return cls(coeffs.get(k, 0) for k in range(top + 1))

    def pretty(self, descending: bool = True) -> str:
        """Conventional notation, e.g. ``-x^5+x^4+3x^3-4x^2+4x-1``."""
        if not self:
            return "0"
        terms = [(k, c) for k, c in enumerate(self.coeffs) if c]
        if descending:
            terms.reverse()
        out = ""
        for k, c in terms:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mon = "x" if k == 1 else f"x^{k}"
                body = mon if a == 1 else f"{a}{mon}"
            out += (sign if out or sign == "-" else "") + body
        return out


class RationalGF:
    """A ratio of polynomials kept in lowest terms with denominator(0) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = Poly._lift(num), Poly._lift(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den) if num else den.monic()
        if g.degree > 0:
            num, den = num.divmod(g)[0], den.divmod(g)[0]
        if den[0] == 0:
            raise ValueError("denominator vanishes at x = 0; not a power series")
        scale = den[0]
        self.num = Poly(c / scale for c in num.coeffs)
        self.den = Poly(c / scale for c in den.coeffs)

    @staticmethod
    def _lift(v) -> "RationalGF":
        return v if isinstance(v, RationalGF) else RationalGF(v)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalGF(other)
        return isinstance(other, RationalGF) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalGF({self.num.pretty()} / {self.den.pretty()})"

    def __str__(self) -> str:
        return f"({self.num.pretty()})/({self.den.pretty()})"

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other) -> "RationalGF":
        o = RationalGF._lift(other)
        return RationalGF(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.num, self.den)

    def __sub__(self, other) -> "RationalGF":
        return self + (-RationalGF._lift(other))

    def __rsub__(self, other) -> "RationalGF":
        return RationalGF._lift(other) - self

    def __mul__(self, other) -> "RationalGF":
        o = RationalGF._lift(other)
        return RationalGF(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalGF":
        o = RationalGF._lift(other)
        if not o:
            raise ZeroDivisionError("division by the zero generating function")
        return RationalGF(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RationalGF":
        return RationalGF._lift(other) / self

    def __pow__(self, e: int) -> "RationalGF":
        return RationalGF(self.num ** e, self.den ** e)

    def constant_term(self) -> Fraction:
        return self.num[0] / self.den[0]

    def series(self, order: int):
        from .series import series_of_ratfun
        return series_of_ratfun(self, order)

    def with_integer_coefficients(self, sign: int = 1) -> tuple[Poly, Poly]:
        """Numerator and denominator scaled to coprime integers, the
        denominator's constant term carrying ``sign``."""
        from math import lcm, gcd
        coeffs = self.num.coeffs + self.den.coeffs
        m = 1
        for c in coeffs:
            m = lcm(m, c.denominator)
        g = 0
        for c in coeffs:
            g = gcd(g, int(c * m))
        m = Fraction(m, g or 1) * sign
        return Poly(c * m for c in self.num.coeffs), Poly(c * m for c in self.den.coeffs)

    def to_text(self) -> str:
        return f"({self.num.to_text()})/({self.den.to_text()})"

    @classmethod
    def from_text(cls, text: str) -> "RationalGF":
        m = re.fullmatch(r"\s*\(([^()]*)\)\s*/\s*\(([^()]*)\)\s*", text)
        if not m:
            return cls(Poly.from_text(text.strip().strip("()")))
        return cls(Poly.from_text(m.group(1)), Poly.from_text(m.group(2)))


X = RationalGF(Poly.monomial(1))
