"""Linear constant-coefficient recurrences read off rational generating functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import RationalGF
from .series import series_of_ratfun

__all__ = ["Recurrence", "recurrence_from_ratfun"]


@dataclass(frozen=True)
class Recurrence:
    """``a_n = sum_i c_i a_{n-i}`` for every ``n >= valid_from``.

    Indices are by rank: ``a_n`` is the coefficient of ``x^n``, which counts
    permutations in ``S_{n+1}``.  Writing ``b_N = a_{N-1}`` for the count in
    ``S_N`` the same statement reads ``b_{n+1} = sum_i c_i b_{n+1-i}`` for
    ``n >= valid_from``.
    """

    coefficients: tuple[Fraction, ...]
    valid_from: int
    initial_terms: tuple[Fraction, ...]  # a_0 .. a_{valid_from - 1}

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def terms(self, upto: int) -> list[Fraction]:
        """``a_0 .. a_upto`` generated from the initial terms."""
        a = list(self.initial_terms[: upto + 1])
        for n in range(len(a), upto + 1):
            a.append(sum((c * a[n - i] for i, c in enumerate(self.coefficients, 1)), Fraction(0)))
        return a

    def size_indexed(self, upto: int) -> dict[int, Fraction]:
        """Counts keyed by permutation size ``N = n + 1``, for ``N <= upto``."""
        return {n + 1: v for n, v in enumerate(self.terms(upto - 1))}

    def describe(self, name: str = "a") -> str:
        """Human form in size indexing, e.g. ``c_{n+1} = 6c_{n} - 11c_{n-1} + ...``."""
        parts = []
        for i, c in enumerate(self.coefficients, 1):
            if c == 0:
                continue
            idx = "n" if i == 1 else f"n-{i - 1}"
            mag = abs(c)
            term = f"{name}_{{{idx}}}" if mag == 1 else f"{mag}{name}_{{{idx}}}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        body = ""
        for k, (sign, term) in enumerate(parts):
            body += (sign if sign == "-" else "") + term if k == 0 else f" {sign} {term}"
        return f"{name}_{{n+1}} = {body} for n >= {self.valid_from}"

    def as_dict(self) -> dict:
        return {
            "coefficients": [str(c) for c in self.coefficients],
            "valid_from": self.valid_from,
            "initial_terms": [str(c) for c in self.initial_terms],
        }


def recurrence_from_ratfun(r: RationalGF) -> Recurrence:
    p, q = r.num, r.den
    q0 = q[0]
    if q0 == 0:
        raise ValueError("denominator vanishes at 0")
    d = max(q.degree, 0)
    coeffs = tuple(-q[i] / q0 for i in range(1, d + 1))
    valid_from = max(p.degree + 1, d)
    initial = tuple(series_of_ratfun(r, max(valid_from - 1, 0)).coeffs[:valid_from])
    return Recurrence(coeffs, valid_from, initial)
