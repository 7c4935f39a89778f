"""
Permutations in 1-line notation, classical pattern containment and
conversions between words in the adjacent transpositions and permutations.

Everything is 1-based: positions, values and generator subscripts.  A word
``s_{i_1} ... s_{i_k}`` is applied to the identity from left to right, each
``s_i`` swapping the entries in positions ``i`` and ``i + 1``.

>>> w = Permutation.parse("[53241]")
>>> count_321_instances(w)
5
>>> word_to_permutation([1, 2, 1], 3)
Permutation([3, 2, 1])
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "PatternSet", "Classification",
    "FC", "FB", "MC", "HEX1L", "HEXAGON", "HEXAGON_WORD",
    "contains_pattern", "find_pattern", "avoids_all", "contains_using_position", "count_321_instances",
    "classify", "word_to_permutation", "reduced_word_of",
    "support_and_connectivity", "is_reduced_word",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``1..n`` in 1-line notation."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation of 1..{len(vals)}: {list(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"[46718235]"`` or ``"[4,6,7,1,8,2,3,5]"`` (brackets optional).

        Raises ``ValueError`` naming the offending character position.
        """
        s = text.strip()
        if s.startswith("["):
            s = s[1:]
            if not s.endswith("]"):
                raise ValueError(f"missing ']' at position {len(text.strip())}")
            s = s[:-1]
        offset = text.index(s) if s else 0
        bad = re.search(r"[^0-9,\s]", s)
        if bad:
            raise ValueError(f"unexpected character {bad.group()!r} at position {offset + bad.start()}")
        if "," in s or " " in s.strip():
            parts = [p for p in re.split(r"[,\s]+", s.strip()) if p]
            vals = [int(p) for p in parts]
        else:
            vals = [int(c) for c in s]
        return cls(vals)

    @property
    def rank(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        # 1-based access, w[i] = w_i
        return self.values[i - 1]

    def __str__(self) -> str:
        if self.rank <= 9:
            return "[" + "".join(map(str, self.values)) + "]"
        return "[" + ",".join(map(str, self.values)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({list(self.values)})"

    def length(self) -> int:
        """Number of inversions, which is the Coxeter length."""
        v = self.values
        return sum(1 for i, j in combinations(range(len(v)), 2) if v[i] > v[j])

    def inverse(self) -> "Permutation":
        inv = [0] * self.rank
        for pos, val in enumerate(self.values, 1):
            inv[val - 1] = pos
        return Permutation(inv)

    def reverse_complement(self) -> "Permutation":
        # the symmetry s_i -> s_{n-i}
        n = self.rank
        return Permutation(n + 1 - v for v in reversed(self.values))


@dataclass(frozen=True)
class PatternSet:
    patterns: frozenset[Permutation]
    name: str = ""

    @classmethod
    def of(cls, *patterns: str | Permutation | Sequence[int], name: str = "") -> "PatternSet":
        perms = []
        for p in patterns:
            if isinstance(p, Permutation):
                perms.append(p)
            elif isinstance(p, str):
                perms.append(Permutation.parse(p))
            else:
                perms.append(Permutation(p))
        return cls(frozenset(perms), name)

    def __iter__(self):
        return iter(sorted(self.patterns))

    def __len__(self) -> int:
        return len(self.patterns)

    def __or__(self, other: "PatternSet") -> "PatternSet":
        name = "+".join(n for n in (self.name, other.name) if n)
        return PatternSet(self.patterns | other.patterns, name)


FC = PatternSet.of("[321]", name="fc")
FB = PatternSet.of("[4231]", "[3421]", "[4312]", "[4321]", name="fb")
MC = PatternSet.of("[3421]", "[4312]", "[4321]", name="mc")
HEX1L = PatternSet.of("[46718235]", "[46781235]", "[56718234]", "[56781234]", name="hex1l")

# the hexagon element [46718235] and one of its reduced words
HEXAGON = Permutation.parse("[46718235]")
HEXAGON_WORD = (5, 6, 7, 3, 4, 5, 6, 2, 3, 4, 5, 1, 2, 3)


def _search(w: Sequence[int], p: Sequence[int], fixed: tuple[int, int] | None = None):
    """Backtracking search for an occurrence of ``p`` in ``w`` (both 0-based
    value sequences).  ``fixed=(t, j)`` forces pattern index t onto position j.
    Returns a tuple of 0-based positions or None."""
    n, k = len(w), len(p)
    if k > n:
        return None
    chosen: list[int] = []

    def rec(a: int, start: int):
        if a == k:
            return tuple(chosen)
        if fixed is not None and a == fixed[0]:
            candidates: Iterable[int] = (fixed[1],) if fixed[1] >= start else ()
        else:
            hi = n - (k - a) + 1
            if fixed is not None and a < fixed[0]:
                hi = min(hi, fixed[1])
            candidates = range(start, hi)
        pa = p[a]
        for pos in candidates:
            val = w[pos]
            for b, prev in enumerate(chosen):
                if (w[prev] < val) != (p[b] < pa):
                    break
            else:
                chosen.append(pos)
                found = rec(a + 1, pos + 1)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return rec(0, 0)


def find_pattern(w: Permutation, p: Permutation) -> tuple[int, ...] | None:
    """Return one pattern instance (1-based positions) of ``p`` in ``w``, or None."""
    hit = _search(w.values, p.values)
    return None if hit is None else tuple(i + 1 for i in hit)


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    return _search(w.values, p.values) is not None


def avoids_all(w: Permutation, patterns: Iterable[Permutation]) -> bool:
    return all(_search(w.values, p.values) is None for p in patterns)


def contains_using_position(values: Sequence[int], p: Sequence[int], pos: int) -> bool:
    """True if ``p`` occurs in ``values`` with its maximum entry at 0-based ``pos``.

    Used by the insertion tree: a child obtained by inserting a new maximum at
    ``pos`` into an avoiding parent can only create occurrences through it.
    """
    t = p.index(max(p))
    return _search(values, p, fixed=(t, pos)) is not None


def count_321_instances(w: Permutation) -> int:
    """N(w): the number of decreasing triples ``i < j < k`` with ``w_i > w_j > w_k``."""
    v = w.values
    n = len(v)
    total = 0
    for j in range(n):
        left = sum(1 for i in range(j) if v[i] > v[j])
        right = sum(1 for k in range(j + 1, n) if v[k] < v[j])
        total += left * right
    return total


@dataclass(frozen=True)
class Classification:
    fully_commutative: bool
    freely_braided: bool
    maximally_clustered: bool
    hexagon_avoiding_1line: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "fully_commutative": self.fully_commutative,
            "freely_braided": self.freely_braided,
            "maximally_clustered": self.maximally_clustered,
            "hexagon_avoiding_1line": self.hexagon_avoiding_1line,
        }


def classify(w: Permutation) -> Classification:
    fc = avoids_all(w, FC)
    fb = avoids_all(w, FB)
    mc = avoids_all(w, MC)
    hx = avoids_all(w, HEX1L)
    if (fc and not fb) or (fb and not mc):
        raise AssertionError(f"class chain FC <= FB <= MC broken at {w}")
    return Classification(fc, fb, mc, hx)


def word_to_permutation(word: Iterable[int], rank: int) -> Permutation:
    vals = list(range(1, rank + 1))
    for i in word:
        if not 1 <= i < rank:
            raise ValueError(f"generator s_{i} out of range for rank {rank}")
        vals[i - 1], vals[i] = vals[i], vals[i - 1]
    return Permutation(vals)


def is_reduced_word(word: Sequence[int], rank: int) -> bool:
    return word_to_permutation(word, rank).length() == len(word)


def reduced_word_of(w: Permutation) -> tuple[int, ...]:
    """Canonical reduced word: repeatedly move the largest entry to the end.

    If ``n`` sits at position ``p`` then ``w = w' s_{n-1} ... s_p`` where ``w'``
    has ``n`` fixed, so the word is built back to front.
    """
    vals = list(w.values)
    tail: list[int] = []
    for n in range(len(vals), 1, -1):
        p = vals.index(n) + 1
        if p < n:
            tail = list(range(n - 1, p - 1, -1)) + tail
            del vals[p - 1]
            vals.append(n)
        vals.pop()
    return tuple(tail)


def support_and_connectivity(w: Permutation) -> tuple[frozenset[int], bool]:
    """Subscripts of the generators in any reduced word, and whether they form
    a nonempty interval.  Generator ``s_i`` is in the support iff some value
    from ``1..i`` sits after position ``i``."""
    supp = set()
    running_max = 0
    for i, v in enumerate(w.values[:-1], 1):
        running_max = max(running_max, v)
        if running_max > i:
            supp.add(i)
    s = frozenset(supp)
    connected = bool(s) and max(s) - min(s) + 1 == len(s)
    return s, connected
