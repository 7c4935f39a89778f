from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from clusterkit.clusters import classes_of, heap_contains
from clusterkit.heap import (
    ClassSearchError, Heap, NotReducedError, commutativity_classes, connected_components,
    empty_columns, heap_from_word, heap_of, is_fully_commutative,
)
from clusterkit.perm import FC, HEXAGON, HEXAGON_WORD, MC, Permutation, avoids_all, reduced_word_of

import oracles

EX_WORD = (2, 3, 1, 2, 4)


def P(text):
    return Permutation.parse(text)


def test_example_heap_structure():
    h = heap_from_word(EX_WORD, 5, check=True)
    assert len(h) == 5
    assert sorted(h.to_machine()) == [(1, 2), (2, 1), (2, 3), (3, 2), (4, 3)]
    labels = {i: p for i, p in enumerate(h.points)}
    covers = {(labels[a], labels[b]) for a, b in h.covers()}
    assert covers == {
        ((2, 1), (1, 2)), ((2, 1), (3, 2)),   # bottom s_2 covered by s_1 and s_3
        ((3, 2), (2, 3)), ((3, 2), (4, 3)),   # s_3 covered by the top s_2 and s_4
        ((1, 2), (2, 3)),
    }
    assert h.permutation() == P("[34152]")


def test_empty_word():
    h = heap_from_word((), 4)
    assert len(h) == 0 and h.permutation() == Permutation.identity(4)
    assert str(h) == "(empty heap)"


def test_braid_words_give_different_heaps():
    a, b = heap_from_word((1, 2, 1), 3), heap_from_word((2, 1, 2), 3)
    assert a != b
    assert a.permutation() == b.permutation() == P("[321]")
    assert sorted(x for x, _ in a.points) == [1, 1, 2]
    assert sorted(x for x, _ in b.points) == [1, 2, 2]


def test_non_reduced_word_rejected():
    with pytest.raises(NotReducedError):
        heap_from_word((1, 1), 3, check=True)
    with pytest.raises(NotReducedError):
        heap_from_word((1, 2, 1, 2), 3, check=True)


def test_levels_are_normalized():
    # both orders of commuting letters give the same heap
    assert heap_from_word((1, 3), 4) == heap_from_word((3, 1), 4)
    assert heap_from_word((1, 3, 2), 4).to_machine() == [(1, 1), (2, 2), (3, 1)]


def test_from_points_renormalizes():
    h = Heap.from_points([(2, 5), (1, 9), (3, 9)], 4)
    assert h == heap_from_word((2, 1, 3), 4)
    with pytest.raises(ValueError):
        Heap.from_points([(1, 1), (2, 1)], 3)


@pytest.mark.parametrize("n,max_len", [(3, 99), (4, 99), (5, 99), (6, 9)])
def test_heaps_are_class_invariants(n, max_len):
    """Same commutativity class <=> same heap, against the word-graph oracle."""
    for w in permutations(range(1, n + 1)):
        if oracles.inversions(w) > max_len:
            continue
        classes = oracles.commutation_classes(w)
        heaps = []
        for cls in classes:
            hs = {heap_from_word(word, n) for word in cls}
            assert len(hs) == 1
            heaps.append(hs.pop())
        assert len(set(heaps)) == len(classes)
        assert set(commutativity_classes(Permutation(w))) == set(heaps)


def test_string_overlay_s6():
    for w in permutations(range(1, 7)):
        w = Permutation(w)
        h = heap_of(w)
        assert h.permutation() == w
        assert len(h) == w.length()


@given(st.integers(2, 8).flatmap(lambda n: st.permutations(range(1, n + 1))), st.randoms())
def test_commuting_swaps_keep_the_heap(vals, rnd):
    w = Permutation(vals)
    word = list(reduced_word_of(w))
    h = heap_from_word(word, w.rank)
    for _ in range(20):
        if len(word) < 2:
            break
        i = rnd.randrange(len(word) - 1)
        if abs(word[i] - word[i + 1]) >= 2:
            word[i], word[i + 1] = word[i + 1], word[i]
    assert heap_from_word(word, w.rank) == h


@pytest.mark.parametrize("n", range(1, 9))
def test_lateral_convexity_is_321_avoidance(n):
    count = 0
    for vals in permutations(range(1, n + 1)):
        w = Permutation(vals)
        fc = is_fully_commutative(w)
        assert fc == avoids_all(w, FC)
        count += fc
    assert count == [1, 2, 5, 14, 42, 132, 429, 1430][n - 1]


def test_fully_commutative_examples():
    assert not is_fully_commutative(P("[321]"))
    assert is_fully_commutative(heap_from_word(EX_WORD, 5))
    assert sum(is_fully_commutative(Permutation(v)) for v in permutations(range(1, 8))) == 429


def test_heap_contains_examples():
    w = heap_from_word(EX_WORD, 5).permutation()
    assert heap_contains(w, heap_from_word((1, 2, 3), 4).permutation())
    assert not heap_contains(w, heap_from_word((1, 2, 1), 3).permutation())
    assert heap_contains(HEXAGON, HEXAGON)
    assert heap_from_word(HEXAGON_WORD, 8).permutation() == HEXAGON


SMALL_PATTERNS = ["[2341]", "[3412]", "[321]", "[2143]", "[231]", "[2413]", "[4321]"]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_heap_contains_matches_poset_oracle(n):
    pats = [P(t) for t in SMALL_PATTERNS]
    for vals in permutations(range(1, n + 1)):
        w = Permutation(vals)
        if not avoids_all(w, MC):
            continue
        for h in pats:
            if not avoids_all(h, MC):
                continue
            assert heap_contains(w, h) == oracles.heap_contains(w.values, h.values), (w, h)


def test_heap_contains_exhaustive_on_general_hosts():
    w = P("[4321]")
    with pytest.raises(ClassSearchError):
        heap_contains(w, P("[321]"))
    for h in ("[321]", "[231]", "[2143]", "[4321]", "[3412]"):
        assert heap_contains(w, P(h), exhaustive=True) == oracles.heap_contains(w.values, P(h).values)


def test_classes_of_mc_matches_braid_graph():
    for n in range(3, 7):
        for vals in permutations(range(1, n + 1)):
            w = Permutation(vals)
            if avoids_all(w, MC):
                assert set(classes_of(w)) == set(commutativity_classes(w))


def test_connected_components():
    h = heap_from_word((1, 3), 4)
    comps = connected_components(h)
    assert [c.word for c in comps] == [(1,), (3,)]
    h = heap_from_word((1, 2, 5), 7)
    comps = connected_components(h)
    assert [sorted(c.support) for c in comps] == [[1, 2], [5]]
    assert empty_columns(h) == [3, 4, 6]
    conn = heap_of(HEXAGON)
    assert connected_components(conn) == [conn]
    # reassembly
    pts = sorted(p for c in comps for p in c.points)
    assert Heap.from_points(pts, 7) == h


def test_picture_and_machine_format():
    h = heap_from_word(EX_WORD, 5)
    assert h.picture() == ". * . *\n* . * .\n. * . ."
    assert h.to_machine() == sorted(h.points)
    assert str(h) == "s_2 s_1 s_3 s_2 s_4"


def test_poset_queries():
    h = heap_from_word(EX_WORD, 5)
    idx = {p: i for i, p in enumerate(h.points)}
    bottom, top = idx[(2, 1)], idx[(2, 3)]
    assert h.less(bottom, top) and not h.less(top, bottom)
    assert h.between(bottom, top) == (1 << idx[(1, 2)]) | (1 << idx[(3, 2)])
    assert list(h.minimal_pairs()) == [(bottom, top)]
    assert h.has_distinct_resolution(bottom, top)
    assert h.is_convex((1 << bottom) | (1 << idx[(1, 2)]))
    assert not h.is_convex((1 << bottom) | (1 << top))


def test_oracle_comparison_sees_both_outcomes():
    seen = {True: 0, False: 0}
    for vals in permutations(range(1, 6)):
        w = Permutation(vals)
        if avoids_all(w, MC):
            seen[heap_contains(w, P("[3412]"))] += 1
    assert seen == {True: 10, False: 68}
