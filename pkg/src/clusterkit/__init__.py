"""Heaps, braid clusters and pattern-class enumeration for permutations."""

from .clusters import (
    ClusterDecomposition, NotMaximallyClusteredError, braid_cluster_decomposition,
    canonical_braid_cluster, check_decomposition, classes_of, heap_contains,
)
from .diamond import (
    DiamondPreconditionError, MinimalDiamond, diamond_reduction, inverse_diamond_reduction,
    minimal_diamonds,
)
from .enumerate import (
    ClassSpec, CountReport, compute_U, count_class, enumerate_class, is_ideal_pattern,
    verify_tables, verify_translation,
)
from .heap import (
    ClassSearchError, Heap, NotReducedError, commutativity_classes, connected_components,
    heap_from_word, heap_of, is_fully_commutative,
)
from .perm import (
    FB, FC, HEX1L, HEXAGON, HEXAGON_WORD, MC, PatternSet, Permutation, classify,
    contains_pattern, count_321_instances, reduced_word_of, word_to_permutation,
)

__version__ = "0.1.0"
