"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .poly import Poly, RationalGF

__all__ = ["Series", "series_of_ratfun", "DEFAULT_ORDER"]

DEFAULT_ORDER = 40


class Series:
    """Coefficients ``a_0 .. a_T`` of a power series known modulo ``x^(T+1)``.

    Binary operations truncate to the smaller order of their operands and
    never extend it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]], order: int | None = None):
        c = [Fraction(v) for v in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            c = (c + [Fraction(0)] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = tuple(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def const(cls, c, order: int = DEFAULT_ORDER) -> "Series":
        return cls([c], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Series([{self.to_text()}], order={self.order})"

    def integers(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(int(c))
        return out

    def to_text(self) -> str:
        return ", ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, text: str) -> "Series":
        return cls(Fraction(t.strip()) for t in text.split(",") if t.strip())

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def agrees_with(self, other: "Series") -> bool:
        n = min(len(self), len(other))
        return self.coeffs[:n] == other.coeffs[:n]

    # arithmetic

    def _lift(self, v) -> "Series":
        if isinstance(v, Series):
            return v
        if isinstance(v, RationalGF):
            return series_of_ratfun(v, self.order)
        if isinstance(v, Poly):
            return Series(v.coeffs[: self.order + 1], self.order)
        return Series([v], self.order)

    def __add__(self, other) -> "Series":
        o = self._lift(other)
        n = min(len(self), len(o))
        return Series(a + b for a, b in zip(self.coeffs[:n], o.coeffs[:n]))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(-c for c in self.coeffs)

    def __sub__(self, other) -> "Series":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Series":
        return self._lift(other) - self

    def __mul__(self, other) -> "Series":
        o = self._lift(other)
        n = min(len(self), len(o))
        a, b = self.coeffs, o.coeffs
        out = []
        for k in range(n):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0)))
        return Series(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        out = Series.const(1, self.order)
        for _ in range(e):
            out = out * self
        return out

    def reciprocal(self) -> "Series":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, len(a)):
            s = sum((a[i] * out[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
            out.append(-s * inv0)
        return Series(out)

    def __truediv__(self, other) -> "Series":
        o = self._lift(other)
        return self * o.reciprocal()

    def __rtruediv__(self, other) -> "Series":
        return self._lift(other) * self.reciprocal()

    def sqrt(self) -> "Series":
        """The square root with constant term 1, from ``2 s_0 s_n = a_n - sum_{0<i<n} s_i s_{n-i}``."""
        a = self.coeffs
        if a[0] != 1:
            raise ValueError(f"sqrt needs constant term 1, got {a[0]}")
        s = [Fraction(1)]
        for n in range(1, len(a)):
            acc = sum((s[i] * s[n - i] for i in range(1, n)), Fraction(0))
            s.append((a[n] - acc) / 2)
        return Series(s)

    def shift_divide(self, k: int) -> "Series":
        """Divide by ``x^k``; the first ``k`` coefficients must vanish.  The
        result is known to order ``T - k``."""
        if k > self.order:
            raise ValueError("shift exceeds the truncation order")
        low = self.coeffs[:k]
        if any(low):
            raise ValueError(f"cannot divide by x^{k}: low coefficients {[str(c) for c in low]} do not vanish")
        return Series(self.coeffs[k:])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all vanish."""
        return next((k for k, c in enumerate(self.coeffs) if c), None)

    def divide_shifted(self, other) -> "Series":
        """``self / other`` when ``other`` vanishes at 0: both are divided by
        ``x^v`` first, ``v`` the valuation of ``other``.  The low
        coefficients of ``self`` must vanish too."""
        o = self._lift(other)
        v = o.valuation()
        if v is None:
            raise ZeroDivisionError("division by a series that vanishes to its order")
        return self.shift_divide(v) / o.shift_divide(v)

    def mul_x(self, k: int = 1) -> "Series":
        """Multiply by ``x^k`` keeping the truncation order."""
        return Series([0] * k + list(self.coeffs[: len(self) - k]), self.order)

    def constant_term(self) -> Fraction:
        return self.coeffs[0]


def series_of_ratfun(r: RationalGF, order: int = DEFAULT_ORDER) -> Series:
    """Expand ``p/q`` via ``q_0 a_n = p_n - sum_{i>=1} q_i a_{n-i}``."""
    p, q = r.num, r.den
    q0 = q[0]
    if q0 == 0:
        raise ValueError("denominator vanishes at 0")
    qs = q.coeffs
    a: list[Fraction] = []
    for n in range(order + 1):
        acc = p[n]
        for i in range(1, min(n, len(qs) - 1) + 1):
            acc -= qs[i] * a[n - i]
        a.append(acc / q0)
    return Series(a)
