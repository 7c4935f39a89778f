"""
Brute-force enumeration of pattern classes, heap-pattern translation and the
ideal-pattern test.

Classes are grown along the insertion tree: the children of ``w`` in ``S_n``
insert ``n + 1`` at each of the ``n + 1`` positions.  Deleting the maximum of
a child returns its parent, so 1-line avoidance is inherited and a subtree can
be cut as soon as a forbidden pattern appears; a child need only be checked
for occurrences that use the new maximum.  Heap avoidance has no such
monotonicity and is tested on each member of the target rank.
"""

from __future__ import annotations

import json
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .clusters import heap_contains
from .diamond import has_two_per_internal_column
from .heap import heap_of
from .perm import FB, MC, HEXAGON, PatternSet, Permutation, contains_pattern, contains_using_position

__all__ = [
    "ClassSpec", "LimitExceededError", "max_n", "insertion_tree", "enumerate_class",
    "count_class", "compute_U", "is_ideal_pattern", "verify_translation",
    "TranslationReport", "connected_fc_words", "EMPTY",
    "CountReport", "RowCheck", "TableReport", "tally_sizes", "verify_tables", "format_table",
    "ClusterCountReport", "verify_cluster_counts", "DiamondReport", "verify_diamond_bijection",
]

log = logging.getLogger(__name__)

HARD_LIMIT = 11
EMPTY = PatternSet(frozenset(), "all")


class LimitExceededError(ValueError):
    pass


def max_n() -> int:
    """The brute-force rank limit, overridable through ``CLUSTERKIT_MAX_N``."""
    raw = os.environ.get("CLUSTERKIT_MAX_N")
    return int(raw) if raw else HARD_LIMIT


def _check_limit(n: int) -> None:
    limit = max_n()
    if n > limit:
        raise LimitExceededError(f"rank {n} exceeds the brute-force limit {limit} (set CLUSTERKIT_MAX_N)")
    if n > HARD_LIMIT:
        log.warning("enumerating rank %d beyond the default limit %d; expect long runtimes", n, HARD_LIMIT)


@dataclass(frozen=True)
class ClassSpec:
    """Permutations avoiding ``one_line_patterns`` and heap-avoiding ``heap_patterns``."""

    one_line_patterns: PatternSet = EMPTY
    heap_patterns: tuple[Permutation, ...] = ()
    label: str = ""
    validate: bool = True

    def __post_init__(self):
        if not self.validate:
            return
        for h in self.heap_patterns:
            hp = heap_of(h)
            if not hp.is_connected():
                raise ValueError(f"heap pattern {h} is not connected")
            if not hp.is_lateral_convex():
                raise ValueError(f"heap pattern {h} is not fully commutative")
            bad = has_two_per_internal_column(hp)
            if bad is not None:
                raise ValueError(f"heap pattern {h} has fewer than two entries in internal column {bad}")

    def contains_heap_pattern(self, w: Permutation) -> bool:
        return any(heap_contains(w, h) for h in self.heap_patterns)

    def __contains__(self, w: Permutation) -> bool:
        pats = self.one_line_patterns.patterns
        return not any(contains_pattern(w, p) for p in pats) and not self.contains_heap_pattern(w)


def _extend(level: Iterable[tuple[int, ...]], patterns: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out = []
    for v in level:
        m = len(v) + 1
        for pos in range(m):
            child = v[:pos] + (m,) + v[pos:]
            if not any(len(p) <= m and contains_using_position(child, p, pos) for p in patterns):
                out.append(child)
    return out


def insertion_tree(patterns: PatternSet, n: int, roots: Iterable[tuple[int, ...]] | None = None) -> list[tuple[int, ...]]:
    """All members of ``S_n`` avoiding ``patterns``, as value tuples."""
    pats = [p.values for p in patterns.patterns]
    level = list(roots) if roots is not None else [(1,)]
    if n == 0:
        return [()]
    while level and len(level[0]) < n:
        level = _extend(level, pats)
    return level


def _subtree_job(args) -> list[tuple[int, ...]]:
    spec, n, roots = args
    members = insertion_tree(spec.one_line_patterns, n, roots)
    if spec.heap_patterns:
        members = [v for v in members if not spec.contains_heap_pattern(Permutation(v))]
    return members


def enumerate_class(spec: ClassSpec, n: int, jobs: int = 1) -> list[Permutation]:
    """Members of ``spec`` in ``S_n`` in lexicographic order.

    With ``jobs > 1`` the tree is split into subtrees a few levels down and
    farmed out to worker processes; the result does not depend on ``jobs``.
    """
    _check_limit(n)
    if n == 0:
        return [Permutation(())]
    if jobs <= 1:
        members = _subtree_job((spec, n, None))
    else:
        split = min(n, 5)
        seeds = insertion_tree(spec.one_line_patterns, split)
        chunks = [seeds[i::jobs * 4] for i in range(jobs * 4)]
        members = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_subtree_job, [(spec, n, c) for c in chunks if c]):
                members.extend(part)
    return [Permutation(v) for v in sorted(members)]


def count_class(spec: ClassSpec, n: int, jobs: int = 1) -> int:
    return len(enumerate_class(spec, n, jobs))


# -- translation of heap patterns into 1-line patterns ------------------------

def compute_U(P: PatternSet, h: Permutation, exhaustive: bool = False) -> list[Permutation]:
    """Members of ``S^P`` of the same rank as ``h`` that heap-contain ``h``."""
    members = enumerate_class(ClassSpec(P, (), validate=False), h.rank)
    return [w for w in members if heap_contains(w, h, exhaustive=exhaustive)]


def is_ideal_pattern(p: Permutation, P: PatternSet, exhaustive: bool = False) -> bool:
    """Every ``q`` in ``S^P`` one rank larger that contains ``p`` as a 1-line
    pattern also heap-contains ``p``."""
    for q in enumerate_class(ClassSpec(P, (), validate=False), p.rank + 1):
        if contains_pattern(q, p) and not heap_contains(q, p, exhaustive=exhaustive):
            return False
    return True


@dataclass
class TranslationReport:
    P: PatternSet
    H: tuple[Permutation, ...]
    translated: tuple[Permutation, ...]  # P' = union of U^P(h)
    ideal: dict[Permutation, bool]
    counts: dict[int, tuple[int, int]] = field(default_factory=dict)  # n -> (heap-avoiding, 1-line)
    mismatches: dict[int, list[Permutation]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.ideal.values()) and not any(self.mismatches.values()) and \
            all(a == b for a, b in self.counts.values())


def verify_translation(P: PatternSet, H: Sequence[Permutation], n_max: int,
                       jobs: int = 1, exhaustive: bool = False) -> TranslationReport:
    """Compare ``S^P(H)`` with ``S^(P + P')`` rank by rank up to ``n_max``."""
    H = tuple(H)
    translated: set[Permutation] = set()
    for h in H:
        translated.update(compute_U(P, h, exhaustive=exhaustive))
    ideal = {p: is_ideal_pattern(p, P, exhaustive=exhaustive) for p in sorted(translated)}
    both = PatternSet(P.patterns | frozenset(translated), P.name + "+translated")
    report = TranslationReport(P, H, tuple(sorted(translated)), ideal)
    heap_spec = ClassSpec(P, H, validate=False)
    line_spec = ClassSpec(both, ())
    for n in range(1, n_max + 1):
        a = set(enumerate_class(heap_spec, n, jobs))
        b = set(enumerate_class(line_spec, n, jobs))
        report.counts[n] = (len(a), len(b))
        report.mismatches[n] = sorted(a ^ b)
        log.info("translation n=%d: %d vs %d", n, len(a), len(b))
    return report


# -- small heap families ------------------------------------------------------

def connected_fc_words(max_entries: int) -> Iterator[Permutation]:
    """Fully commutative permutations with full support ``{s_1..s_{n-1}}`` and
    length at most ``max_entries``: one per connected fully commutative heap
    up to a column shift."""
    level = [((1,), 0)]
    pat = (3, 2, 1)
    # full support in S_n needs at least n - 1 letters
    while level and len(level[0][0]) <= max_entries:
        nxt = []
        for v, length in level:
            m = len(v) + 1
            for pos in range(m):
                new_len = length + (m - 1 - pos)  # inserting the maximum adds one inversion per later entry
                if new_len > max_entries:
                    continue
                child = v[:pos] + (m,) + v[pos:]
                if contains_using_position(child, pat, pos):
                    continue
                nxt.append((child, new_len))
        level = nxt
        for v, _ in level:
            # full support: no proper prefix is a permutation of 1..i
            run = 0
            for i, val in enumerate(v[:-1], 1):
                run = max(run, val)
                if run == i:
                    break
            else:
                yield Permutation(v)


# -- count reports and the table reproduction ---------------------------------

@dataclass
class CountReport:
    """Counts of one class by permutation size, obtained by one method."""

    label: str
    method: str  # brute | gf | recurrence | published
    counts: dict[int, int]
    note: str = ""

    def to_jsonl(self) -> str:
        return "\n".join(
            json.dumps({"class": self.label, "n": n, "count": c, "method": self.method})
            for n, c in sorted(self.counts.items())
        )

    @classmethod
    def from_jsonl(cls, text: str) -> list["CountReport"]:
        groups: dict[tuple[str, str], dict[int, int]] = {}
        for line in text.splitlines():
            if line.strip():
                rec = json.loads(line)
                groups.setdefault((rec["class"], rec["method"]), {})[rec["n"]] = rec["count"]
        return [cls(label, method, counts) for (label, method), counts in groups.items()]


def format_table(reports: Sequence[CountReport]) -> str:
    """Aligned text table, one row per report and one column per size."""
    sizes = sorted({n for r in reports for n in r.counts})
    heads = [f"{r.label} ({r.method})" for r in reports]
    w0 = max([len("n")] + [len(h) for h in heads])
    widths = [max(len(str(n)), *(len(str(r.counts.get(n, ""))) for r in reports)) for n in sizes]
    lines = ["n".ljust(w0) + " | " + " ".join(str(n).rjust(w) for n, w in zip(sizes, widths))]
    lines.append("-" * len(lines[0]))
    for h, r in zip(heads, reports):
        cells = " ".join(str(r.counts.get(n, "")).rjust(w) for n, w in zip(sizes, widths))
        lines.append(h.ljust(w0) + " | " + cells)
    return "\n".join(lines)


# Each maximally clustered member is tagged once; every table row is a filter
# on the tags.
_ROW_FILTERS = {
    "fc": lambda t: t["fc"],
    "L": lambda t: t["fc"] and t["right"],
    "M": lambda t: t["fc"] and t["left"] and t["right"] and t["rank"] >= 2,
    "fb": lambda t: t["fb"],
    "mc": lambda t: True,
}


def _tags(v: tuple[int, ...]) -> dict:
    w = Permutation(v)
    n = len(v)
    fc = not contains_pattern(w, Permutation((3, 2, 1)))
    return {
        "rank": n - 1,
        "fc": fc,
        "fb": fc or not any(contains_pattern(w, p) for p in FB.patterns),
        "left": n >= 2 and v[0] != 1,        # s_1 in the heap
        "right": n >= 2 and v[-1] != n,      # s_{n-1} in the heap
        "hexagon": n >= HEXAGON.rank and heap_contains(w, HEXAGON),
    }


def _tally_job(args) -> Counter:
    n, roots = args
    tally: Counter = Counter()
    for v in insertion_tree(MC, n, roots):
        t = _tags(v)
        for row, keep in _ROW_FILTERS.items():
            if keep(t):
                tally[row] += 1
                if not t["hexagon"]:
                    tally[row + "-hexagon"] += 1
    return tally


def tally_sizes(n: int, jobs: int = 1) -> Counter:
    """Brute-force counts of all ten table classes in ``S_n``."""
    _check_limit(n)
    if n == 0:
        return Counter({"fc": 1, "fb": 1, "mc": 1, "fc-hexagon": 1, "fb-hexagon": 1, "mc-hexagon": 1})
    if jobs <= 1:
        return _tally_job((n, None))
    seeds = insertion_tree(MC, min(n, 5))
    chunks = [c for c in (seeds[i::jobs * 4] for i in range(jobs * 4)) if c]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_tally_job, [(n, c) for c in chunks]):
            total.update(part)
    return total


@dataclass
class RowCheck:
    name: str
    reports: list[CountReport]

    def by_method(self, method: str) -> CountReport | None:
        return next((r for r in self.reports if r.method == method), None)

    def disagreements(self) -> list[tuple[int, dict[str, int]]]:
        out = []
        for n in sorted({n for r in self.reports for n in r.counts}):
            vals = {r.method: r.counts[n] for r in self.reports if n in r.counts}
            if len(set(vals.values())) > 1:
                out.append((n, vals))
        return out

    @property
    def ok(self) -> bool:
        return not self.disagreements()


@dataclass
class TableReport:
    rows: list[RowCheck]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_jsonl(self) -> str:
        return "\n".join(rep.to_jsonl() for row in self.rows for rep in row.reports if rep.counts)

    def to_text(self) -> str:
        blocks = []
        for row in self.rows:
            status = "ok" if row.ok else f"MISMATCH at {row.disagreements()}"
            blocks.append(format_table(row.reports) + f"\n  -> {row.name}: {status}")
        return "\n\n".join(blocks)


def verify_tables(n_max: int, jobs: int = 1, gf_max: int = 15) -> TableReport:
    """Brute force (sizes 1..n_max) against the derived generating functions,
    their recurrences (rational rows) and the published values (table series
    to x^7, figure rows to size 15).  All columns are keyed by size."""
    from .catalog import class_gf
    from .reference import FIGURE_ROWS, FIGURE_SIZES, TABLE_ROWS, TABLE_SERIES

    brute: dict[str, dict[int, int]] = {row: {} for row in TABLE_ROWS}
    for n in range(1, n_max + 1):
        tally = tally_sizes(n, jobs)
        log.info("tallied size %d: %s", n, dict(tally))
        for row in TABLE_ROWS:
            brute[row][n] = tally.get(row, 0)

    top = max(gf_max, n_max)
    rows = []
    for row in TABLE_ROWS:
        gf = class_gf(row, top - 1)
        reports = [
            CountReport(row, "brute", brute[row]),
            CountReport(row, "gf", {n + 1: int(c) for n, c in enumerate(gf.series)}),
        ]
        rec = gf.recurrence
        if rec is not None:
            reports.append(CountReport(row, "recurrence", {k: int(v) for k, v in rec.size_indexed(top).items()}))
        published = {n + 1: c for n, c in enumerate(TABLE_SERIES[row])}
        if row in FIGURE_ROWS:
            published.update(zip(FIGURE_SIZES, FIGURE_ROWS[row]))
        reports.append(CountReport(row, "published", published))
        rows.append(RowCheck(row, reports))
    return TableReport(rows)


# -- decomposition and diamond suites ------------------------------------------

@dataclass
class ClusterCountReport:
    """MC elements by number of braid clusters against the generating function."""

    by_clusters: dict[tuple[int, int], int] = field(default_factory=dict)  # (size, k) -> brute
    fb_by_clusters: dict[tuple[int, int], int] = field(default_factory=dict)
    expected: dict[tuple[int, int], int] = field(default_factory=dict)
    fb_expected: dict[tuple[int, int], int] = field(default_factory=dict)
    unsound: list[Permutation] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        keys = set(self.by_clusters) | set(self.expected)
        fb_keys = set(self.fb_by_clusters) | set(self.fb_expected)
        return not self.unsound and \
            all(self.by_clusters.get(k, 0) == self.expected.get(k, 0) for k in keys) and \
            all(self.fb_by_clusters.get(k, 0) == self.fb_expected.get(k, 0) for k in fb_keys)


def verify_cluster_counts(n_max: int, jobs: int = 1) -> ClusterCountReport:
    """Decompose every maximally clustered element of ``S_n``, ``n <= n_max``.

    Each decomposition must satisfy both column properties, carry
    ``N(w)`` braid-cluster half-lengths in total and read back to ``w``.  The
    number of elements with ``k`` clusters is compared with the ``k``-th term
    of the clustered transform of the Catalan series.
    """
    from .catalog import catalan_series
    from .clusters import braid_cluster_decomposition, check_decomposition
    from .genfun import clustered_term
    from .perm import count_321_instances, word_to_permutation

    report = ClusterCountReport()
    F = catalan_series(max(n_max, 1))
    for n in range(1, n_max + 1):
        top_k = 0
        for w in enumerate_class(ClassSpec(MC), n, jobs):
            d = braid_cluster_decomposition(w)
            sound = check_decomposition(d) and sum(d.cluster_half_lengths) == count_321_instances(w) \
                and word_to_permutation(d.contracted_word(), n) == w
            if not sound:
                report.unsound.append(w)
            k = d.n_clusters
            top_k = max(top_k, k)
            report.by_clusters[(n, k)] = report.by_clusters.get((n, k), 0) + 1
            if all(h == 1 for h in d.cluster_half_lengths):
                report.fb_by_clusters[(n, k)] = report.fb_by_clusters.get((n, k), 0) + 1
            report.checked += 1
        for k in range(0, n // 2 + 2):
            report.expected[(n, k)] = int(clustered_term(F, k, "maximally_clustered")[n - 1])
            report.fb_expected[(n, k)] = int(clustered_term(F, k, "freely_braided")[n - 1])
        report.expected = {key: v for key, v in report.expected.items() if v}
        report.fb_expected = {key: v for key, v in report.fb_expected.items() if v}
        log.info("decomposed size %d (up to %d clusters)", n, top_k)
    return report


@dataclass
class DiamondReport:
    expanded: int = 0   # heaps g with reduce(expand(g)) checked
    reduced: int = 0    # heaps h with expand(reduce(h)) checked
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_diamond_bijection(max_entries: int, max_columns: int = 8) -> DiamondReport:
    """Round trips of diamond reduction.

    ``reduce(expand(g)) = g`` for every connected fully commutative heap ``g``
    with at most ``max_entries`` entries, and ``expand(reduce(h)) = h`` for
    every connected fully commutative ``h`` on at most ``max_columns``
    columns meeting the reduction's precondition.
    """
    from .diamond import diamond_reduction, inverse_diamond_reduction

    report = DiamondReport()
    for w in connected_fc_words(max_entries):
        g = heap_of(w)
        try:
            if diamond_reduction(inverse_diamond_reduction(g)) != g:
                report.failures.append(f"reduce(expand) differs for {w}")
        except ValueError as exc:
            report.failures.append(f"{w}: {exc}")
        report.expanded += 1
    for cols in range(3, max_columns + 1):
        for v in insertion_tree(PatternSet.of("[321]"), cols + 1):
            h = heap_of(Permutation(v))
            if len(h.support) != cols or has_two_per_internal_column(h) is not None:
                continue
            try:
                if inverse_diamond_reduction(diamond_reduction(h)) != h:
                    report.failures.append(f"expand(reduce) differs for {Permutation(v)}")
            except ValueError as exc:
                report.failures.append(f"{Permutation(v)}: {exc}")
            report.reduced += 1
    return report
