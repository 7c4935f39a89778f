"""
Generating-function transforms between fully commutative classes and their
freely braided / maximally clustered extensions, between all and connected
elements, and across a diamond reduction.

Every function accepts either a ``RationalGF`` or a truncated ``Series`` and
returns the same kind, so rational inputs stay rational.
"""

from __future__ import annotations

from typing import Union

from .poly import RationalGF, X
from .series import Series

__all__ = [
    "GF", "x_like", "transform_pieces", "transform_clustered", "clustered_term",
    "to_connected", "to_full", "transform_connected",
    "diamond_avoiding_gf", "diamond_closed_form", "diamond_component_form",
    "transform_diamond", "DiamondComponents",
]

GF = Union[RationalGF, Series]


def x_like(f: GF) -> GF:
    return Series.x(f.order) if isinstance(f, Series) else X


def _require_constant(f: GF, value: int, what: str) -> None:
    if f.constant_term() != value:
        raise ValueError(f"{what} must have constant term {value}, got {f.constant_term()}")


def _same(a: GF, b: GF) -> bool:
    if isinstance(a, Series):
        return a.agrees_with(b)
    return a == b


def transform_pieces(F: GF) -> tuple[GF, GF]:
    """``L = F - xF - 1`` (an entry in the last column) and
    ``M = F - 2xF + x^2 F - 1`` (entries in both extremal columns)."""
    _require_constant(F, 1, "F")
    x = x_like(F)
    L = F - x * F - 1
    M = F - 2 * x * F + x * x * F - 1
    return L, M


def transform_clustered(F: GF, mode: str) -> GF:
    """``F + L^2/(1 - M)`` for freely braided, ``F + L^2/(1 - x - M)`` for
    maximally clustered."""
    L, M = transform_pieces(F)
    x = x_like(F)
    if mode == "freely_braided":
        return F + L * L / (1 - M)
    if mode == "maximally_clustered":
        return F + L * L / (1 - x - M)
    raise ValueError(f"unknown mode {mode!r}")


def clustered_term(F: GF, k: int, mode: str) -> GF:
    """The part of :func:`transform_clustered` counting elements with exactly
    ``k`` braid clusters: ``F`` for ``k = 0``, otherwise ``L^2 M^(k-1)`` for
    freely braided and ``L^2 M^(k-1) / (1-x)^k`` for maximally clustered,
    where ``1/(1-x)`` accounts for the internal columns of each cluster."""
    if k == 0:
        return F
    L, M = transform_pieces(F)
    x = x_like(F)
    term = L * L * M ** (k - 1)
    if mode == "freely_braided":
        return term
    if mode == "maximally_clustered":
        return term / (1 - x) ** k
    raise ValueError(f"unknown mode {mode!r}")


def to_connected(F: GF) -> GF:
    """``F_c = (F - xF - 1) / (1 + xF)``."""
    _require_constant(F, 1, "F")
    x = x_like(F)
    return (F - x * F - 1) / (1 + x * F)


def to_full(Fc: GF) -> GF:
    """``F = (1 + F_c) / (1 - x - x F_c)``."""
    _require_constant(Fc, 0, "F_c")
    x = x_like(Fc)
    return (1 + Fc) / (1 - x - x * Fc)


def transform_connected(direction: str, f: GF) -> GF:
    if direction == "to_connected":
        return to_connected(f)
    if direction == "to_full":
        return to_full(f)
    raise ValueError(f"unknown direction {direction!r}")


def diamond_avoiding_gf() -> RationalGF:
    """Fully commutative elements with at most one entry per column, by rank."""
    return RationalGF([1, -1], [1, -3, 1])


def diamond_closed_form(Gc: GF | None = None, G: GF | None = None) -> GF:
    """F from the connected (or full) generating function of the reduced class.

    Computes ``(1 - x - x Gc) / (1 - 3x + x^2 + (x^2 - x) Gc)`` and
    ``1 / (1 - 2x - x^2 G)`` and insists they agree.
    """
    if Gc is None and G is None:
        raise TypeError("give Gc or G")
    if Gc is None:
        _require_constant(G, 1, "G")
        Gc = to_connected(G)
    _require_constant(Gc, 0, "G_c")
    if G is None:
        G = to_full(Gc)
    x = x_like(Gc)
    first = (1 - x - x * Gc) / (1 - 3 * x + x * x + (x * x - x) * Gc)
    second = 1 / (1 - 2 * x - x * x * G)
    if not _same(first, second):
        raise AssertionError("the two closed forms disagree")
    return first


class DiamondComponents:
    """``E``, ``E_LR = E - xE - 1`` and ``E_M = E - 2xE + x^2E - 1 + x``, where E
    counts heaps with at most one entry per column.  ``adjust=True`` drops the
    trailing ``+ x`` from ``E_M``, forbidding two diamond regions glued along a
    one-column path."""

    def __init__(self, like: GF | None = None, adjust: bool = False):
        E: GF = diamond_avoiding_gf()
        if isinstance(like, Series):
            E = E.series(like.order)
        x = x_like(E)
        self.E = E
        self.E_LR = E - x * E - 1
        self.E_M = E - 2 * x * E + x * x * E - 1 + (0 if adjust else x)


def diamond_component_form(Gc: GF, adjust: bool = False) -> GF:
    """``E + E_LR (1 / (1 - Gc E_M)) Gc E_LR``."""
    _require_constant(Gc, 0, "G_c")
    c = DiamondComponents(Gc, adjust)
    return c.E + c.E_LR * Gc * c.E_LR / (1 - Gc * c.E_M)


def transform_diamond(*, Gc: GF | None = None, G: GF | None = None,
                      variant: str = "closed_form", adjust: bool = False) -> GF:
    if variant == "closed_form":
        return diamond_closed_form(Gc=Gc, G=G)
    if variant == "component_form":
        if Gc is None:
            Gc = to_connected(G)
        return diamond_component_form(Gc, adjust=adjust)
    raise ValueError(f"unknown variant {variant!r}")
