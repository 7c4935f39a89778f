"""Generating functions of the named classes, derived rather than transcribed.

The Catalan series is computed from ``sqrt(1 - 4x)``.  The hexagon-avoiding
fully commutative class comes from the diamond-reduction route: the 3-hexagon
avoiders are assembled from monotone lattice paths, then expanded back across
one diamond reduction.  Everything else follows by the clustered transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .genfun import (
    DEFAULT_ORDER, RationalGF, Recurrence, Series, diamond_avoiding_gf, diamond_closed_form,
    diamond_component_form, lattice_path_gf_avoiding, recurrence_from_ratfun,
    transform_clustered, transform_pieces,
)

__all__ = ["ClassGF", "CLASS_NAMES", "class_gf", "catalan_series", "hexagon_fc_gf", "three_hexagon_avoiding_gf"]

CLASS_NAMES = (
    "fc", "L", "M", "fb", "mc",
    "fc-hexagon", "L-hexagon", "M-hexagon", "fb-hexagon", "mc-hexagon",
    "diamond-avoiding", "3-hexagon-avoiding", "peak-free-diamond",
)

DESCRIPTIONS = {
    "fc": "[321]-avoiding",
    "L": "[321]-avoiding with s_n in the heap",
    "M": "[321]-avoiding with s_1 and s_n in the heap",
    "fb": "freely braided",
    "mc": "maximally clustered",
    "fc-hexagon": "[321]-hexagon avoiding",
    "L-hexagon": "[321]-hexagon avoiding with s_n in the heap",
    "M-hexagon": "[321]-hexagon avoiding with s_1 and s_n in the heap",
    "fb-hexagon": "freely braided hexagon-avoiding",
    "mc-hexagon": "maximally clustered hexagon-avoiding",
    "diamond-avoiding": "[321], [3412]-avoiding",
    "3-hexagon-avoiding": "[321]-avoiding, heap-avoiding the 3-hexagon",
    "peak-free-diamond": "[321], [356124], [456123]-avoiding",
}


# Sign of the denominator's constant term in the conventional display.
DISPLAY_SIGN = {"fc-hexagon": -1, "L-hexagon": -1, "M-hexagon": -1, "fb-hexagon": -1}


@dataclass(frozen=True)
class ClassGF:
    name: str
    description: str
    series: Series
    rational: RationalGF | None = None

    def display(self, sign: int | None = None) -> str | None:
        """``(numerator)/(denominator)`` with integer coefficients, descending."""
        if self.rational is None:
            return None
        num, den = self.rational.with_integer_coefficients(sign or DISPLAY_SIGN.get(self.name, 1))
        return f"({num.pretty()})/({den.pretty()})"

    @property
    def recurrence(self) -> Recurrence | None:
        return recurrence_from_ratfun(self.rational) if self.rational is not None else None


def catalan_series(order: int = DEFAULT_ORDER) -> Series:
    """``(1 - 2x - sqrt(1 - 4x)) / (2x^2)``."""
    x = Series.x(order + 2)
    root = Series([1, -4], order + 2).sqrt()
    return ((1 - 2 * x - root) * Fraction(1, 2)).shift_divide(2)


@lru_cache(maxsize=None)
def three_hexagon_avoiding_gf() -> RationalGF:
    """Connected diamond reductions of 3-hexagon avoiders are monotone paths;
    the adjusted component form forbids two diamond regions meeting along a
    one-column path, which is exactly a 3-hexagon."""
    monotone = lattice_path_gf_avoiding(["UD", "DU"])
    return diamond_component_form(monotone, adjust=True)


@lru_cache(maxsize=None)
def hexagon_fc_gf() -> RationalGF:
    """Hexagon avoiders are the diamond expansions of 3-hexagon avoiders."""
    return diamond_closed_form(G=three_hexagon_avoiding_gf())


def _rational(name: str) -> RationalGF:
    if name == "diamond-avoiding":
        return diamond_avoiding_gf()
    if name == "3-hexagon-avoiding":
        return three_hexagon_avoiding_gf()
    if name == "peak-free-diamond":
        return diamond_closed_form(Gc=lattice_path_gf_avoiding("UD"))
    F = hexagon_fc_gf()
    base = name.removesuffix("-hexagon")
    if base == "fc":
        return F
    if base in ("L", "M"):
        return transform_pieces(F)[0 if base == "L" else 1]
    mode = {"fb": "freely_braided", "mc": "maximally_clustered"}[base]
    return transform_clustered(F, mode)


def class_gf(name: str, order: int = DEFAULT_ORDER) -> ClassGF:
    """Series to ``x^order`` (and the rational form when there is one)."""
    if name not in CLASS_NAMES:
        raise KeyError(f"unknown class {name!r}; choose from {', '.join(CLASS_NAMES)}")
    if name in ("fc", "L", "M", "fb", "mc"):
        F = catalan_series(order)
        if name == "fc":
            s = F
        elif name in ("L", "M"):
            s = transform_pieces(F)[0 if name == "L" else 1]
        else:
            s = transform_clustered(F, "freely_braided" if name == "fb" else "maximally_clustered")
        return ClassGF(name, DESCRIPTIONS[name], s)
    r = _rational(name)
    return ClassGF(name, DESCRIPTIONS[name], r.series(order), r)
