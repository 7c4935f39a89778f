"""Published enumeration data used as regression targets.

Generating functions are indexed by rank: the coefficient of ``x^n`` counts
elements of ``S_{n+1}``.  Figure rows are indexed by permutation size.
"""

from __future__ import annotations

from fractions import Fraction

from .genfun import Poly, RationalGF, Series


def _p(*coeffs_descending: int) -> Poly:
    return Poly(reversed(coeffs_descending))


# Initial series to x^7 of the ten table rows.
TABLE_SERIES: dict[str, tuple[int, ...]] = {
    "fc": (1, 2, 5, 14, 42, 132, 429, 1430),
    "L": (0, 1, 3, 9, 28, 90, 297, 1001),
    "M": (0, 0, 2, 6, 19, 62, 207, 704),
    "fb": (1, 2, 6, 20, 71, 260, 971, 3674),
    "mc": (1, 2, 6, 21, 78, 298, 1157, 4539),
    "fc-hexagon": (1, 2, 5, 14, 42, 132, 429, 1426),
    "L-hexagon": (0, 1, 3, 9, 28, 90, 297, 997),
    "M-hexagon": (0, 0, 2, 6, 19, 62, 207, 700),
    "fb-hexagon": (1, 2, 6, 20, 71, 260, 971, 3670),
    "mc-hexagon": (1, 2, 6, 21, 78, 298, 1157, 4535),
}

TABLE_ROWS = tuple(TABLE_SERIES)

# Rational rows, exactly as printed (numerator, denominator, descending powers).
_HEX_DEN = _p(1, -4, -4, 9, -11, 6, -1)
TABLE_RATIONAL: dict[str, tuple[Poly, Poly]] = {
    "fc-hexagon": (_p(-1, 1, 3, -4, 4, -1), _HEX_DEN),
    "L-hexagon": (_p(2, 2, -2, 3, -1, 0), _HEX_DEN),
    "M-hexagon": (_p(-1, 2, 4, -5, 6, -2, 0, 0), _HEX_DEN),
    "fb-hexagon": (_p(-1, -2, 2, 1, -3, 4, -1), _p(1, -1, -8, 1, 3, -9, 6, -1)),
    "mc-hexagon": (_p(3, 1, -5, 7, -5, 1), _p(-3, 4, 8, -14, 15, -7, 1)),
}


def table_rational(name: str) -> RationalGF:
    num, den = TABLE_RATIONAL[name]
    return RationalGF(num, den)


def table_algebraic(name: str, order: int, literal: bool = False) -> Series:
    """The printed closed forms involving ``sqrt(1 - 4x)``, expanded to ``order``.

    The L row is printed with ``-(x-1) sqrt(1-4x)`` in the numerator, which
    leaves a nonzero constant term and so a pole at 0.  By default the sign
    is flipped, which reproduces the printed series; ``literal=True`` keeps
    the printed sign and therefore raises.
    """
    work = order + 4
    x = Series.x(work)
    r = Series([1, -4], work).sqrt()
    half = Fraction(1, 2)
    if name == "fc":
        s = ((1 - 2 * x - r) * half).shift_divide(2)
    elif name == "L":
        sign = -1 if literal else 1
        s = ((1 - 3 * x + sign * (x - 1) * r) * half).shift_divide(2)
    elif name == "M":
        s = ((1 - 4 * x + 3 * x ** 2 - 2 * x ** 3 - (x - 1) ** 2 * r) * half).shift_divide(2)
    elif name == "fb":
        num = 2 * x - 2 * x ** 2 - 2 * x * r
        den = -1 + 4 * x - x ** 2 + 2 * x ** 3 + (x - 1) ** 2 * r
        s = num.divide_shifted(den)
    elif name == "mc":
        s = (2 * x).divide_shifted(-1 + 4 * x - 2 * x ** 2 + r)
    else:
        raise KeyError(name)
    return s.truncate(order)


# Hexagon-avoiding classes by size n = 3..15.
FIGURE_SIZES = tuple(range(3, 16))
FIGURE_ROWS: dict[str, tuple[int, ...]] = {
    "fc-hexagon": (5, 14, 42, 132, 429, 1426, 4806, 16329, 55740, 190787, 654044, 2244153, 7704047),
    "fb-hexagon": (6, 20, 71, 260, 971, 3670, 13968, 53369, 204352, 783408, 3005284, 11533014, 44267854),
    "mc-hexagon": (6, 21, 78, 298, 1157, 4535, 17872, 70644, 279704, 1108462, 4395045, 17431206, 69144643),
}


def figure_value(row: str, size: int) -> int:
    return FIGURE_ROWS[row][size - FIGURE_SIZES[0]]


# Published recurrences in size indexing, x_{n+1} = sum_i c_i x_{n+1-i}, and
# the smallest n for which they are stated.
RECURRENCES: dict[str, tuple[tuple[int, ...], int]] = {
    "fc-hexagon": ((6, -11, 9, -4, -4, 1), 8),
    "fb-hexagon": ((6, -9, 3, 1, -8, -1, 1), 9),
    "mc-hexagon": ((7, -15, 14, -8, -4, 3), 9),
}

# Two classes obtained from diamond reductions.
DIAMOND_AVOIDING_SERIES = (1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181, 10946)
PEAK_FREE_DIAMOND_GF = (_p(-1, 2, -3, 1), _p(1, -4, 7, -5, 1))  # (1-3x+2x^2-x^3)/(1-5x+7x^2-4x^3+x^4)

HEXAGON_TRANSLATION = ("[46718235]", "[46781235]", "[56718234]", "[56781234]")
