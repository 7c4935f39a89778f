"""
Minimal diamonds and diamond reduction of fully commutative heaps.

A minimal pair in column ``x`` together with its distinct resolution (one
entry in each of columns ``x - 1`` and ``x + 1``) is a minimal diamond.  The
reduction puts one entry at the centre of every minimal diamond, moved one
column to the left so a heap on columns ``[1, n]`` reduces to ``[1, n - 2]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .heap import Heap, heap_from_word

__all__ = [
    "MinimalDiamond", "DiamondPreconditionError",
    "minimal_diamonds", "diamond_reduction", "inverse_diamond_reduction",
    "has_two_per_internal_column",
]


class DiamondPreconditionError(ValueError):
    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column


@dataclass(frozen=True, order=True)
class MinimalDiamond:
    # all four corners as (column, level) points of the host heap
    bottom: tuple[int, int]
    left: tuple[int, int]
    right: tuple[int, int]
    top: tuple[int, int]

    @property
    def column(self) -> int:
        return self.bottom[0]

    @property
    def pair(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return self.bottom, self.top

    @property
    def resolution(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return self.left, self.right


def minimal_diamonds(heap: Heap) -> list[MinimalDiamond]:
    """One diamond per minimal pair, sorted by (top level, column)."""
    pts = heap.points
    out = []
    for a, b in heap.minimal_pairs():
        left, right = heap.resolution(a, b)
        if left is None or right is None:
            raise DiamondPreconditionError(
                f"heap is not fully commutative: pair in column {pts[a][0]} has no distinct resolution",
                pts[a][0])
        out.append(MinimalDiamond(pts[a], pts[left], pts[right], pts[b]))
    out.sort(key=lambda d: (d.top[1], d.column))
    return out


def has_two_per_internal_column(heap: Heap) -> int | None:
    """Return the first internal column holding fewer than two entries, or None."""
    cols = sorted(heap.columns)
    if not cols:
        return None
    for x in range(cols[0] + 1, cols[-1]):
        if heap.column_count(x) < 2:
            return x
    return None


def diamond_reduction(heap: Heap, strict: bool = True) -> Heap:
    """The heap whose entries are the minimal diamonds of ``heap``.

    ``strict`` enforces the bijective setting: connected, fully commutative,
    at least two entries in every internal column.  With ``strict=False`` any
    fully commutative heap is accepted and its minimal diamonds are reduced
    as they stand, which may give a disconnected result.
    """
    if strict:
        if not heap.is_connected():
            raise DiamondPreconditionError("heap is not connected")
        if len(heap.support) < 3:
            # two columns would reduce to the empty heap, which is not connected
            raise DiamondPreconditionError("heap needs at least three columns")
        bad = has_two_per_internal_column(heap)
        if bad is not None:
            raise DiamondPreconditionError(f"internal column {bad} has fewer than two entries", bad)
    if heap.rank < 3:
        raise DiamondPreconditionError("rank too small to drop two columns")
    diamonds = minimal_diamonds(heap)
    # two diamonds sharing an edge differ in top level in the same direction as
    # the order they generate, so sorting by top level is a linear extension
    return heap_from_word([d.column - 1 for d in diamonds], heap.rank - 2)


def inverse_diamond_reduction(heap: Heap) -> Heap:
    """Replace every entry by a minimal diamond centred one column to the right.

    Neighbouring diamonds are glued along the edge they share: for a cover
    ``e < f`` with ``f`` one column right of ``e``, top(e) = left(f) and
    right(e) = bottom(f); mirrored when ``f`` is one column left.
    """
    if not heap.is_connected():
        raise DiamondPreconditionError("heap is not connected")
    if not heap.is_lateral_convex():
        raise DiamondPreconditionError("heap is not fully commutative")
    pts = heap.points
    n = len(pts)
    # vertex ids: 4*i + (0 bottom, 1 left, 2 right, 3 top)
    parent = list(range(4 * n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for e, f in heap.covers():
        if pts[f][0] == pts[e][0] + 1:
            union(4 * e + 3, 4 * f + 1)
            union(4 * e + 2, 4 * f + 0)
        else:
            union(4 * e + 1, 4 * f + 0)
            union(4 * e + 3, 4 * f + 2)

    column = {}
    for i, (x, _) in enumerate(pts):
        for corner, col in enumerate((x + 1, x, x + 2, x + 1)):
            r = find(4 * i + corner)
            if column.setdefault(r, col) != col:
                raise AssertionError("glued corners in different columns")
    succ: dict[int, set[int]] = {r: set() for r in column}
    for i in range(n):
        b, l, r, t = (find(4 * i + c) for c in range(4))
        succ[b].update((l, r))
        succ[l].add(t)
        succ[r].add(t)
    indeg = {v: 0 for v in succ}
    for v in succ:
        for u in succ[v]:
            indeg[u] += 1
    ready = sorted((v for v, d in indeg.items() if d == 0), key=lambda v: column[v])
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for u in sorted(succ[v], key=lambda u: column[u]):
            indeg[u] -= 1
            if indeg[u] == 0:
                ready.append(u)
    if len(order) != len(succ):
        raise AssertionError("diamond gluing produced a cycle")
    return heap_from_word([column[v] for v in order], heap.rank + 2)
