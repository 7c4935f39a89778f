"""Transfer-matrix count of up/down lattice paths avoiding consecutive step words."""

from __future__ import annotations

from typing import Iterable

from .poly import RationalGF, X

__all__ = ["lattice_path_gf_avoiding", "path_automaton"]

STEPS = "UD"


def path_automaton(forbidden: Iterable[str]) -> tuple[list[str], dict[tuple[str, str], str]]:
    """Live states and transitions of the pattern-matching automaton.

    A state is the longest suffix of the steps read so far that is a proper
    prefix of some forbidden word.  Reading a step that completes a forbidden
    word has no transition.
    """
    words = sorted(set(forbidden))
    if not words or any(not w for w in words):
        raise ValueError("forbidden words must be nonempty")
    if any(set(w) - set(STEPS) for w in words):
        raise ValueError("forbidden words use the steps U and D only")
    prefixes = {w[:i] for w in words for i in range(len(w))}

    def dead(s: str) -> bool:
        return any(s.endswith(w) for w in words)

    def state_of(s: str) -> str:
        for i in range(len(s) + 1):
            if s[i:] in prefixes:
                return s[i:]
        return ""

    live = sorted(p for p in prefixes if not any(w in p for w in words))
    delta: dict[tuple[str, str], str] = {}
    for s in live:
        for c in STEPS:
            t = s + c
            if not dead(t):
                delta[(s, c)] = state_of(t)
    return live, delta


def lattice_path_gf_avoiding(forbidden: str | Iterable[str]) -> RationalGF:
    """Generating function, by number of nodes, of paths whose step word has
    no consecutive occurrence of any forbidden word.

    With transfer matrix ``A`` on the automaton states the answer is
    ``x * e_start^T (I - xA)^{-1} 1``, solved exactly over rational functions.
    """
    words = [forbidden] if isinstance(forbidden, str) else list(forbidden)
    live, delta = path_automaton(words)
    idx = {s: i for i, s in enumerate(live)}
    n = len(live)
    # rows of (I - xA) | 1
    rows: list[list[RationalGF]] = []
    for s in live:
        row = [RationalGF(0) for _ in range(n)] + [RationalGF(1)]
        row[idx[s]] = row[idx[s]] + 1
        for c in STEPS:
            t = delta.get((s, c))
            if t is not None:
                row[idx[t]] = row[idx[t]] - X
        rows.append(row)
    # Gauss-Jordan over the field of rational functions
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return X * rows[idx[""]][n]

