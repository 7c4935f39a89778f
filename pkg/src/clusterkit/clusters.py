"""
Braid clusters, the canonical column decomposition of a maximally clustered
permutation, and heap containment.

The canonical commutativity class of a maximally clustered ``w`` is the one
whose heap splits its columns into alternating runs ``C0, B1, C1, ..., Bk, Ck``
where each ``Bi`` carries a braid cluster ``s_p s_{p+1} ... s_q ... s_{p+1} s_p``
in exactly that form and every minimal pair in a ``Ci`` column has a distinct
resolution.  It is found by walking the (small) braid graph of ``w`` until a
heap with such a split turns up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .heap import (
    ClassSearchError, Heap, commutativity_classes, embeds, heap_from_word, heap_of,
)
from .perm import MC, Permutation, avoids_all

__all__ = [
    "ClusterDecomposition", "NotMaximallyClusteredError",
    "canonical_braid_cluster", "find_decomposition", "braid_cluster_decomposition",
    "check_decomposition", "classes_of", "heap_contains",
]

DEFAULT_BUDGET = 20_000


class NotMaximallyClusteredError(ValueError):
    pass


def canonical_braid_cluster(m: int, k: int) -> tuple[int, ...]:
    """``s_{m+1} ... s_{m+k} s_{m+k+1} s_{m+k} ... s_{m+1}``, the transposition
    ``(m+1, m+k+2)``."""
    if m < 0 or k < 0:
        raise ValueError("shift and half-length must be nonnegative")
    rising = tuple(range(m + 1, m + k + 2))
    return rising + rising[-2::-1]


@dataclass(frozen=True)
class ClusterDecomposition:
    intervals: tuple[tuple[int, int], ...]  # C0, B1, C1, ..., Bk, Ck as closed (lo, hi); lo > hi when empty
    cluster_half_lengths: tuple[int, ...]
    canonical_heap: Heap

    @property
    def clusters(self) -> tuple[tuple[int, int], ...]:
        return self.intervals[1::2]

    @property
    def free_intervals(self) -> tuple[tuple[int, int], ...]:
        return self.intervals[0::2]

    @property
    def n_clusters(self) -> int:
        return len(self.cluster_half_lengths)

    def contracted_word(self) -> tuple[int, ...]:
        out: list[int] = []
        for piece in self.pieces():
            if piece[0] == "a":
                out.extend(piece[1])
            else:
                out.extend(canonical_braid_cluster(piece[1] - 1, piece[2]))
        return tuple(out)

    def pieces(self) -> list[tuple]:
        """The contracted word as ``("a", letters)`` and ``("c", p, k)`` pieces,
        ``("c", p, k)`` standing for the cluster on columns ``p..p+k``."""
        heap = self.canonical_heap
        owner: dict[int, int] = {}
        for ci, (p, q) in enumerate(self.clusters):
            for x in range(p, q + 1):
                for idx in heap.columns.get(x, ()):
                    owner[idx] = ci
        n = len(heap.points)
        done = 0
        pieces: list[tuple] = []
        free: list[int] = []
        members = {ci: sum(1 << i for i, o in owner.items() if o == ci) for ci in range(len(self.clusters))}
        while done != (1 << n) - 1:
            for idx in range(n):
                if done >> idx & 1:
                    continue
                ci = owner.get(idx)
                if ci is None:
                    if heap.down[idx] & ~done == 0:
                        free.append(heap.points[idx][0])
                        done |= 1 << idx
                        break
                else:
                    group = members[ci]
                    preds = 0
                    g = group
                    while g:
                        low = g & -g
                        preds |= heap.down[low.bit_length() - 1]
                        g ^= low
                    if preds & ~group & ~done == 0:
                        if free:
                            pieces.append(("a", tuple(free)))
                            free = []
                        p, q = self.clusters[ci]
                        pieces.append(("c", p, q - p))
                        done |= group
                        break
            else:
                raise AssertionError("braid clusters cannot be read contiguously")
        if free:
            pieces.append(("a", tuple(free)))
        return pieces

    def summary(self) -> dict:
        return {
            "clusters": [list(iv) for iv in self.clusters],
            "half_lengths": list(self.cluster_half_lengths),
            "intervals": [list(iv) for iv in self.intervals],
            "contracted_word": list(self.contracted_word()),
        }


def _cluster_at(heap: Heap, p: int) -> int | None:
    """If a canonical, convex braid cluster starts at column p, its last column."""
    cols = heap.columns
    if len(cols.get(p, ())) != 2:
        return None
    q = p + 1
    while len(cols.get(q, ())) == 2:
        q += 1
    if len(cols.get(q, ())) != 1:
        return None
    expect = heap_from_word(canonical_braid_cluster(p - 1, q - p), heap.rank)
    got = heap.restrict(range(p, q + 1))
    if got != expect:
        return None
    subset = 0
    for x in range(p, q + 1):
        for idx in cols[x]:
            subset |= 1 << idx
    if not heap.is_convex(subset):
        return None
    return q


def find_decomposition(heap: Heap) -> ClusterDecomposition | None:
    """The braid cluster column decomposition of this heap, if it has one."""
    last = heap.rank - 1
    clusters: list[tuple[int, int]] = []
    x = 1
    while x <= last:
        idxs = heap.columns.get(x, ())
        unresolved = any(not heap.has_distinct_resolution(a, b) for a, b in zip(idxs, idxs[1:]))
        if not unresolved:
            x += 1
            continue
        q = _cluster_at(heap, x)
        if q is None:
            return None
        clusters.append((x, q))
        x = q + 1
    intervals: list[tuple[int, int]] = []
    lo = 1
    for p, q in clusters:
        intervals.append((lo, p - 1))
        intervals.append((p, q))
        lo = q + 1
    intervals.append((lo, last))
    decomp = ClusterDecomposition(tuple(intervals), tuple(q - p for p, q in clusters), heap)
    return decomp if check_decomposition(decomp) else None


def check_decomposition(decomp: ClusterDecomposition) -> bool:
    """Both defining properties: canonical clusters on each B, and distinct
    resolutions for every minimal pair in the C columns."""
    heap = decomp.canonical_heap
    for (p, q), k in zip(decomp.clusters, decomp.cluster_half_lengths):
        if k < 1 or q - p != k:
            return False
        if heap.restrict(range(p, q + 1)) != heap_from_word(canonical_braid_cluster(p - 1, k), heap.rank):
            return False
    for lo, hi in decomp.free_intervals:
        for x in range(lo, hi + 1):
            idxs = heap.columns.get(x, ())
            if not all(heap.has_distinct_resolution(a, b) for a, b in zip(idxs, idxs[1:])):
                return False
    return True


def braid_cluster_decomposition(w: Permutation, budget: int = DEFAULT_BUDGET) -> ClusterDecomposition:
    """Canonical decomposition of a maximally clustered permutation.

    Raises ``NotMaximallyClusteredError`` when ``w`` contains 3421, 4312 or
    4321, and ``ClassSearchError`` if the braid graph exceeds ``budget``.
    """
    if not avoids_all(w, MC):
        raise NotMaximallyClusteredError(f"{w} is not maximally clustered")
    root = heap_of(w)
    found = find_decomposition(root)
    if found is not None:
        return found
    for h in commutativity_classes(root, budget=budget):
        found = find_decomposition(h)
        if found is not None:
            return found
    raise AssertionError(f"no braid cluster column decomposition for {w}")


@lru_cache(maxsize=None)
def _cluster_class_words(k: int) -> tuple[tuple[int, ...], ...]:
    base = heap_from_word(canonical_braid_cluster(0, k), k + 2)
    return tuple(h.word for h in commutativity_classes(base))


def _mc_classes(w: Permutation, budget: int) -> list[Heap]:
    decomp = braid_cluster_decomposition(w, budget)
    pieces = decomp.pieces()
    options = []
    for piece in pieces:
        if piece[0] == "a":
            options.append((piece[1],))
        else:
            _, p, k = piece
            options.append(tuple(tuple(x + p - 1 for x in word) for word in _cluster_class_words(k)))
    out = {heap_from_word([x for part in choice for x in part], w.rank) for choice in product(*options)}
    return sorted(out, key=lambda h: h.points)


def classes_of(w: Permutation, exhaustive: bool = False, budget: int = DEFAULT_BUDGET) -> list[Heap]:
    """Every heap of ``w``.

    Fully commutative: the unique heap.  Maximally clustered: the canonical
    heap with each braid cluster swapped through its own classes.  Anything
    else needs ``exhaustive=True`` (a braid-graph search capped at ``budget``).
    """
    root = heap_of(w)
    if root.is_lateral_convex():
        return [root]
    if avoids_all(w, MC):
        return _mc_classes(w, budget)
    if exhaustive:
        return commutativity_classes(root, budget=budget)
    raise ClassSearchError(f"class-search unsupported for {w}: neither fully commutative nor maximally clustered")


def heap_contains(w: Permutation, h: Permutation, exhaustive: bool = False,
                  budget: int = DEFAULT_BUDGET) -> bool:
    """Some heap of ``w`` contains some heap of ``h``, shifted ``s_i -> s_{i+c}``,
    as a convex labeled subposet."""
    if h.rank > w.rank or h.length() > w.length():
        return False
    h_heaps = classes_of(h, exhaustive=exhaustive, budget=budget)
    w_heaps = classes_of(w, exhaustive=exhaustive, budget=budget)
    for c in range(w.rank - h.rank + 1):
        for hh in h_heaps:
            for wh in w_heaps:
                if embeds(hh, wh, c):
                    return True
    return False

