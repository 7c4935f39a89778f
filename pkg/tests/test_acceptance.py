"""End-to-end acceptance checks.  Each test prints one line,
``ACCEPTANCE <id>: PASS|FAIL <detail>``, before asserting."""

import random
from functools import lru_cache

import pytest

from clusterkit.catalog import catalan_series, class_gf, three_hexagon_avoiding_gf
from clusterkit.diamond import diamond_reduction
from clusterkit.enumerate import (
    compute_U, insertion_tree, is_ideal_pattern, tally_sizes, verify_cluster_counts,
    verify_diamond_bijection, verify_translation,
)
from clusterkit.genfun import (
    RationalGF, Series, X, diamond_avoiding_gf, lattice_path_gf_avoiding, recurrence_from_ratfun,
    series_of_ratfun, to_connected, to_full, transform_clustered, transform_diamond,
)
from clusterkit.heap import heap_from_word, heap_of
from clusterkit.perm import FC, HEXAGON, PatternSet, Permutation
from clusterkit.reference import (
    DIAMOND_AVOIDING_SERIES, FIGURE_ROWS, FIGURE_SIZES, PEAK_FREE_DIAMOND_GF, RECURRENCES,
    TABLE_RATIONAL, TABLE_ROWS, TABLE_SERIES, HEXAGON_TRANSLATION, table_algebraic, table_rational,
)

THREE_HEXAGON_WORD = (4, 5, 2, 3, 4, 1, 2)


@pytest.fixture
def record(capsys):
    def emit(cid, ok, detail=""):
        with capsys.disabled():
            print(f"\nACCEPTANCE {cid}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        return ok
    return emit


@lru_cache(maxsize=None)
def tallies(n_max=10):
    return {n: tally_sizes(n) for n in range(1, n_max + 1)}


def _mismatches(got: dict, want: dict) -> list:
    return [(k, got.get(k), want[k]) for k in sorted(want) if got.get(k) != want[k]]


def test_1_hexagon_figure_brute_force(record):
    bad = []
    for row in FIGURE_ROWS:
        got = {n: tallies()[n][row] for n in range(3, 11)}
        want = {n: FIGURE_ROWS[row][n - FIGURE_SIZES[0]] for n in range(3, 11)}
        bad += [(row, *m) for m in _mismatches(got, want)]
    ok = record(1, not bad, f"three hexagon rows, n = 3..10; mismatches {bad}" if bad else "three hexagon rows, n = 3..10")
    assert ok


def test_2_table_series(record):
    bad = []
    for row in TABLE_ROWS:
        want = list(TABLE_SERIES[row])
        if class_gf(row, 7).series.integers() != want:
            bad.append((row, "derived"))
        if row in TABLE_RATIONAL and table_rational(row).series(7).integers() != want:
            bad.append((row, "printed rational form"))
        if row in ("fc", "L", "M", "fb", "mc") and table_algebraic(row, 7).integers() != want:
            bad.append((row, "printed algebraic form"))
    ok = record(2, not bad, f"ten rows to x^7; failures {bad}" if bad else "ten rows to x^7")
    assert ok


def test_3_recurrences(record):
    bad = []
    for row, (coeffs, _) in RECURRENCES.items():
        rec = recurrence_from_ratfun(class_gf(row).rational)
        if tuple(rec.coefficients) != coeffs:
            bad.append((row, "coefficients", rec.coefficients))
        terms = rec.size_indexed(15)
        for n in range(9, 16):
            if terms[n] != FIGURE_ROWS[row][n - FIGURE_SIZES[0]]:
                bad.append((row, n, terms[n]))
    ok = record(3, not bad, f"failures {bad}" if bad else "three recurrences, n = 9..15")
    assert ok


def test_4_transform_consistency(record):
    sizes = range(1, 11)
    bad = []
    for suffix in ("", "-hexagon"):
        F = Series([tallies()[n]["fc" + suffix] for n in sizes])  # x^(n-1) counts S_n
        for mode, row in (("freely_braided", "fb"), ("maximally_clustered", "mc")):
            got = transform_clustered(F, mode).integers()
            want = [tallies()[n][row + suffix] for n in sizes]
            if got != want:
                bad.append((row + suffix, got, want))
    ok = record(4, not bad, f"failures {bad}" if bad else "H = {} and {hexagon}, n <= 10")
    assert ok


def test_5_diamond_machinery(record):
    failures = []
    # (a)
    g = diamond_reduction(heap_of(HEXAGON))
    if g != heap_from_word(THREE_HEXAGON_WORD, 6):
        failures.append("a")
    # (b)
    rep = verify_diamond_bijection(12)
    if not rep.ok or rep.expanded == 0:
        failures.append(f"b {rep.failures[:3]}")
    # (c)
    Gc = lattice_path_gf_avoiding("UD")
    c_ok = Gc == X / (1 - X) ** 2
    peak_free = transform_diamond(Gc=Gc)
    c_ok &= peak_free == RationalGF(*PEAK_FREE_DIAMOND_GF)
    cls = PatternSet.of("[321]", "[356124]", "[456123]")
    brute = [len(insertion_tree(cls, n + 1)) for n in range(10)]
    c_ok &= series_of_ratfun(peak_free, 9).integers() == brute
    if not c_ok:
        failures.append("c")
    # (d)
    monotone = lattice_path_gf_avoiding(["UD", "DU"])
    G = transform_diamond(Gc=monotone, variant="component_form", adjust=True)
    d_ok = G == three_hexagon_avoiding_gf()
    d_ok &= transform_diamond(G=G) == table_rational("fc-hexagon")
    if not d_ok:
        failures.append("d")
    ok = record(5, not failures, f"failed parts {failures}" if failures else
                f"(a)-(d); {rep.expanded} round trips, brute sizes 1..10")
    assert ok


def test_6_diamond_avoiding(record):
    cls = PatternSet.of("[321]", "[3412]")
    brute = [len(insertion_tree(cls, n + 1)) for n in range(11)]
    gf = series_of_ratfun(diamond_avoiding_gf(), 10).integers()
    ok = brute == gf == list(DIAMOND_AVOIDING_SERIES)
    ok = record(6, ok, f"brute {brute}")
    assert ok


def test_7_translation(record):
    U = compute_U(FC, HEXAGON)
    expected = {Permutation.parse(t) for t in HEXAGON_TRANSLATION}
    ideal = {str(p): is_ideal_pattern(p, FC) for p in U}
    rep = verify_translation(FC, [HEXAGON], 9)
    ok = set(U) == expected and all(ideal.values()) and rep.ok and len(rep.counts) == 9
    ok = record(7, ok, f"U = {sorted(map(str, U))}, ideal {ideal}, counts n<=9 {rep.counts}")
    assert ok


def test_8_decomposition_soundness(record):
    rep = verify_cluster_counts(8)
    sizes = {n: sum(v for (m, _), v in rep.by_clusters.items() if m == n) for n in range(4, 9)}
    ok = not rep.unsound and sizes == {4: 21, 5: 78, 6: 298, 7: 1157, 8: 4539} and rep.ok
    ok = record(8, ok, f"{rep.checked} elements, sizes {sizes}, unsound {len(rep.unsound)}")
    assert ok


def test_9_connected_round_trip(record):
    rnd = random.Random(20240917)
    bad = []
    for _ in range(20):
        num = [rnd.randint(-6, 6) for _ in range(rnd.randint(1, 5))]
        den = [1] + [rnd.randint(-6, 6) for _ in range(rnd.randint(0, 4))]
        F = 1 + X * RationalGF(num, den)
        if to_full(to_connected(F)) != F:
            bad.append(F)
    C = catalan_series(20)
    cat_ok = to_full(to_connected(C)) == C and C.order == 20
    ok = record(9, not bad and cat_ok, f"20 rational inputs ({len(bad)} failed), Catalan to x^20 {'ok' if cat_ok else 'FAILED'}")
    assert ok
