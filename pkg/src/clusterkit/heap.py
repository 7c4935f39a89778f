"""
Heaps of reduced words in type A.

A heap is stored as its lattice embedding: a set of ``(column, level)``
points, column = generator subscript.  Levels are normalized to the length of
the longest chain from a minimal entry, so two reduced words in the same
commutativity class give *equal* heaps and heap equality is plain structural
comparison.

Entries in adjacent columns are always comparable, and for them level order is
poset order.  The full order is the transitive closure of those relations; it
is materialized lazily as integer bitsets indexed by the canonical linear
extension (points sorted by level, then column).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .perm import Permutation, reduced_word_of, word_to_permutation

__all__ = [
    "Heap", "NotReducedError", "ClassSearchError",
    "heap_from_word", "heap_of", "is_fully_commutative",
    "commutativity_classes", "braid_moves", "connected_components",
    "empty_columns", "embeds",
]


class NotReducedError(ValueError):
    pass


class ClassSearchError(RuntimeError):
    """Raised when a commutativity-class search is unsupported or over budget."""


@dataclass(frozen=True)
class Heap:
    rank: int
    points: tuple[tuple[int, int], ...]  # (column, level), sorted by (level, column)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_points(cls, points: Iterable[tuple[int, int]], rank: int) -> "Heap":
        """Build a heap from any valid lattice embedding, renormalizing levels."""
        pts = sorted(set(points), key=lambda p: (p[1], p[0]))
        by_level: dict[int, set[int]] = {}
        for x, y in pts:
            row = by_level.setdefault(y, set())
            if x - 1 in row or x + 1 in row:
                raise ValueError(f"adjacent columns {x - 1 if x - 1 in row else x + 1},{x} share level {y}")
            row.add(x)
        return heap_from_word([x for x, _ in pts], rank)

    # -- basic views --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.points)

    @property
    def word(self) -> tuple[int, ...]:
        """The canonical linear extension read as a word."""
        return tuple(x for x, _ in self.points)

    def permutation(self) -> Permutation:
        return word_to_permutation(self.word, self.rank)

    @cached_property
    def columns(self) -> dict[int, tuple[int, ...]]:
        """column -> indices (into ``points``) of its entries, bottom to top."""
        cols: dict[int, list[int]] = {}
        for idx, (x, _) in enumerate(self.points):
            cols.setdefault(x, []).append(idx)
        return {x: tuple(v) for x, v in cols.items()}

    def column_count(self, x: int) -> int:
        return len(self.columns.get(x, ()))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.columns)

    def is_connected(self) -> bool:
        s = self.support
        return bool(s) and max(s) - min(s) + 1 == len(s)

    def level(self, idx: int) -> int:
        return self.points[idx][1]

    # -- order --------------------------------------------------------------

    @cached_property
    def down(self) -> tuple[int, ...]:
        """down[i]: bitset of entries strictly below entry i."""
        last: dict[int, int] = {}
        out = []
        for idx, (x, _) in enumerate(self.points):
            acc = 0
            for c in (x - 1, x, x + 1):
                j = last.get(c)
                if j is not None:
                    acc |= out[j] | (1 << j)
            out.append(acc)
            last[x] = idx
        return tuple(out)

    @cached_property
    def up(self) -> tuple[int, ...]:
        """up[i]: bitset of entries strictly above entry i."""
        n = len(self.points)
        out = [0] * n
        for j in range(n):
            d = self.down[j]
            while d:
                low = d & -d
                i = low.bit_length() - 1
                out[i] |= 1 << j
                d ^= low
        return tuple(out)

    def less(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def between(self, i: int, j: int) -> int:
        """Bitset of entries strictly between i and j in the heap order."""
        return self.up[i] & self.down[j]

    def is_convex(self, subset: int) -> bool:
        for y in range(len(self.points)):
            if subset >> y & 1:
                continue
            if self.down[y] & subset and self.up[y] & subset:
                return False
        return True

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (lower, upper) as entry indices."""
        edges = []
        for j, (x, _) in enumerate(self.points):
            for c in (x - 1, x + 1):
                below = [i for i in self.columns.get(c, ()) if i < j]
                if not below:
                    continue
                i = below[-1]
                # no entry of column x between i and j
                if not any(i < k < j for k in self.columns.get(x, ())):
                    edges.append((i, j))
        return sorted(edges)

    # -- pairs --------------------------------------------------------------

    def minimal_pairs(self) -> Iterator[tuple[int, int]]:
        for x in sorted(self.columns):
            idxs = self.columns[x]
            for a, b in zip(idxs, idxs[1:]):
                yield a, b

    def resolution(self, a: int, b: int) -> tuple[int | None, int | None]:
        """Entries of columns x-1 and x+1 strictly between the minimal pair (a, b),
        or None where a side has none (the lowest one is returned if several)."""
        x = self.points[a][0]
        lo, hi = self.points[a][1], self.points[b][1]
        out = []
        for c in (x - 1, x + 1):
            hit = None
            for k in self.columns.get(c, ()):
                if lo < self.points[k][1] < hi:
                    hit = k
                    break
            out.append(hit)
        return out[0], out[1]

    def has_distinct_resolution(self, a: int, b: int) -> bool:
        left, right = self.resolution(a, b)
        return left is not None and right is not None

    def is_lateral_convex(self) -> bool:
        return all(self.has_distinct_resolution(a, b) for a, b in self.minimal_pairs())

    # -- transforms ---------------------------------------------------------

    def shifted(self, c: int, rank: int | None = None) -> "Heap":
        rank = self.rank + c if rank is None else rank
        return Heap(rank, tuple((x + c, y) for x, y in self.points))

    def restrict(self, cols: Iterable[int]) -> "Heap":
        keep = set(cols)
        return heap_from_word([x for x in self.word if x in keep], self.rank)

    # -- formats ------------------------------------------------------------

    def to_machine(self) -> list[tuple[int, int]]:
        return sorted(self.points)

    def picture(self, width: int | None = None) -> str:
        """One line per level, top level first; ``*`` marks an entry."""
        ncols = max(self.rank - 1, max(self.columns, default=0)) if width is None else width
        if not self.points:
            return "." * 0 if ncols == 0 else " ".join("." * ncols)
        top = max(y for _, y in self.points)
        occupied = set(self.points)
        lines = []
        for y in range(top, 0, -1):
            lines.append(" ".join("*" if (x, y) in occupied else "." for x in range(1, ncols + 1)))
        return "\n".join(lines)

    def __str__(self) -> str:
        return " ".join(f"s_{x}" for x in self.word) or "(empty heap)"


def heap_from_word(word: Sequence[int], rank: int, check: bool = False) -> Heap:
    """The heap of a word with levels normalized by longest chain.

    With ``check=True`` the word must be reduced (``NotReducedError`` otherwise).
    """
    word = tuple(word)
    if check:
        w = word_to_permutation(word, rank)
        if w.length() != len(word):
            raise NotReducedError(f"word {list(word)} is not reduced (length {w.length()})")
    top: dict[int, int] = {}
    pts = []
    for x in word:
        if not 1 <= x < rank:
            raise ValueError(f"generator s_{x} out of range for rank {rank}")
        y = 1 + max(top.get(x - 1, 0), top.get(x, 0), top.get(x + 1, 0))
        top[x] = y
        pts.append((x, y))
    pts.sort(key=lambda p: (p[1], p[0]))
    return Heap(rank, tuple(pts))


def heap_of(w: Permutation) -> Heap:
    """The heap of the canonical reduced word of ``w``."""
    return heap_from_word(reduced_word_of(w), w.rank)


def is_fully_commutative(w: Permutation | Heap) -> bool:
    """Lateral Convexity: every minimal pair has a distinct resolution.

    A non fully commutative element has a minimal pair without a distinct
    resolution in every one of its heaps, so testing one heap suffices.
    """
    h = w if isinstance(w, Heap) else heap_of(w)
    return h.is_lateral_convex()


# -- braid moves and commutativity classes ------------------------------------

def braid_moves(heap: Heap) -> Iterator[Heap]:
    """Heaps reachable by one short-braid move ``s_i s_j s_i -> s_j s_i s_j``."""
    pts = heap.points
    n = len(pts)
    for a, c in heap.minimal_pairs():
        mid = heap.between(a, c)
        if mid & (mid - 1):
            continue  # more than one entry between
        b = mid.bit_length() - 1
        xa, xb = pts[a][0], pts[b][0]
        # linear extension with a, b, c consecutive: the down-set of entries
        # not above a, then a b c, then the rest
        not_above = [k for k in range(n) if k != a and not heap.up[a] >> k & 1]
        rest = [k for k in range(n) if heap.up[a] >> k & 1 and k not in (b, c)]
        word = [pts[k][0] for k in not_above] + [xb, xa, xb] + [pts[k][0] for k in rest]
        yield heap_from_word(word, heap.rank)


def commutativity_classes(start: Heap | Permutation, budget: int = 100_000) -> list[Heap]:
    """All heaps of the element, by breadth-first search over braid moves.

    Matsumoto-Tits makes the braid graph on commutativity classes connected.
    Raises ``ClassSearchError`` if more than ``budget`` classes are seen.
    """
    root = heap_of(start) if isinstance(start, Permutation) else start
    seen = {root}
    order = [root]
    queue = deque([root])
    while queue:
        h = queue.popleft()
        for g in braid_moves(h):
            if g not in seen:
                if len(seen) >= budget:
                    raise ClassSearchError(f"more than {budget} commutativity classes")
                seen.add(g)
                order.append(g)
                queue.append(g)
    return order


# -- components ---------------------------------------------------------------

def connected_components(heap: Heap) -> list[Heap]:
    """Components in left-to-right order, kept on their original columns."""
    cols = sorted(heap.columns)
    groups: list[list[int]] = []
    for x in cols:
        if groups and groups[-1][-1] == x - 1:
            groups[-1].append(x)
        else:
            groups.append([x])
    return [heap.restrict(g) for g in groups]


def empty_columns(heap: Heap) -> list[int]:
    return [x for x in range(1, heap.rank) if x not in heap.columns]


# -- containment --------------------------------------------------------------

def embeds(pattern: Heap, host: Heap, shift: int) -> bool:
    """Does ``pattern`` shifted by ``shift`` columns sit in ``host`` as a convex
    labeled subposet?

    Convexity forces each column of an instance to be a run of consecutive
    host entries, so candidates are one run start per column.  For such a
    choice the labeled posets agree iff every adjacent-column pair keeps its
    relative order and the image is convex.
    """
    pcols = pattern.columns
    if not pcols:
        return True
    hcols = host.columns
    plan = []
    for x, pidx in sorted(pcols.items()):
        hidx = hcols.get(x + shift, ())
        if len(hidx) < len(pidx):
            return False
        plan.append((x, pidx, hidx, range(len(hidx) - len(pidx) + 1)))
    plevel = [y for _, y in pattern.points]
    hlevel = [y for _, y in host.points]
    for starts in product(*(p[3] for p in plan)):
        image: dict[int, int] = {}
        subset = 0
        for (x, pidx, hidx, _), s in zip(plan, starts):
            for off, pi in enumerate(pidx):
                hi = hidx[s + off]
                image[pi] = hi
                subset |= 1 << hi
        ok = True
        for x, pidx, _, _ in plan:
            nxt = pcols.get(x + 1)
            if not nxt:
                continue
            for pi in pidx:
                for pj in nxt:
                    if (plevel[pi] < plevel[pj]) != (hlevel[image[pi]] < hlevel[image[pj]]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok and host.is_convex(subset):
            return True
    return False
