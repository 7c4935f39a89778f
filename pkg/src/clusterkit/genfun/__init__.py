"""Exact generating-function machinery."""

from .poly import Poly, RationalGF, X
from .recurrence import Recurrence, recurrence_from_ratfun
from .series import DEFAULT_ORDER, Series, series_of_ratfun
from .transfer import lattice_path_gf_avoiding, path_automaton
from .transforms import (
    DiamondComponents, diamond_avoiding_gf, diamond_closed_form, diamond_component_form,
    to_connected, to_full, transform_clustered, transform_connected, transform_diamond,
    transform_pieces, x_like, clustered_term,
)

__all__ = [
    "Poly", "RationalGF", "X", "Series", "series_of_ratfun", "DEFAULT_ORDER",
    "Recurrence", "recurrence_from_ratfun",
    "lattice_path_gf_avoiding", "path_automaton",
    "DiamondComponents", "diamond_avoiding_gf", "diamond_closed_form", "diamond_component_form",
    "to_connected", "to_full", "transform_clustered", "transform_connected", "transform_diamond",
    "transform_pieces", "x_like", "clustered_term",
]
