from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from clusterkit.perm import (
    FB, FC, HEX1L, HEXAGON, HEXAGON_WORD, MC, PatternSet, Permutation, classify,
    contains_pattern, contains_using_position, count_321_instances, find_pattern,
    is_reduced_word, reduced_word_of, support_and_connectivity, word_to_permutation,
)

import oracles

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_parse_compact_and_comma_forms():
    assert Permutation.parse("[46718235]").values == (4, 6, 7, 1, 8, 2, 3, 5)
    assert Permutation.parse("[4,6,7,1,8,2,3,5]") == HEXAGON
    assert str(Permutation.parse("[6,2,3,4,7,10,1,8,5,9]")) == "[6,2,3,4,7,10,1,8,5,9]"
    assert str(HEXAGON) == "[46718235]"


@pytest.mark.parametrize("text", ["[12a]", "[1223]", "[124", "[0]"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Permutation.parse(text)


def test_parse_error_names_position():
    with pytest.raises(ValueError, match="position 3"):
        Permutation.parse("[12a]")


@given(perms)
def test_print_parse_round_trip(w):
    assert Permutation.parse(str(w)) == w


@given(perms)
def test_inverse_and_reverse_complement_are_involutions(w):
    assert w.inverse().inverse() == w
    assert w.reverse_complement().reverse_complement() == w
    assert w.inverse().length() == w.length()


def test_word_convention():
    assert word_to_permutation(HEXAGON_WORD, 8) == HEXAGON
    assert word_to_permutation((2, 3, 1, 2, 4), 5) == Permutation.parse("[34152]")
    assert word_to_permutation((), 3) == Permutation.identity(3)
    with pytest.raises(ValueError):
        word_to_permutation((3,), 3)


@given(perms)
def test_reduced_word_is_reduced_and_evaluates_back(w):
    word = reduced_word_of(w)
    assert word_to_permutation(word, w.rank) == w
    assert len(word) == w.length() == oracles.inversions(w.values)
    if w.rank <= 5:
        assert word in oracles.reduced_words(w.values)


def test_is_reduced_word():
    assert is_reduced_word((1, 2, 1), 3)
    assert not is_reduced_word((1, 1), 3)


@settings(max_examples=200)
@given(perms, st.sampled_from(["[321]", "[3412]", "[2143]", "[4231]", "[132]", "[21]"]))
def test_containment_matches_brute_force(w, p):
    p = Permutation.parse(p)
    assert contains_pattern(w, p) == oracles.contains(w.values, p.values)
    hit = find_pattern(w, p)
    if hit is not None:
        sub = [w[i] for i in hit]  # 1-based positions
        assert sorted(range(len(sub)), key=sub.__getitem__) == sorted(range(len(p)), key=p.values.__getitem__)


def test_contains_using_position_is_exactly_the_new_occurrences():
    # children of avoiding parents: new occurrences must use the inserted maximum
    p = (3, 2, 1)
    for parent in oracles.members(5, [p]):
        m = 6
        for pos in range(m):
            child = parent[:pos] + (m,) + parent[pos:]
            assert contains_using_position(child, p, pos) == oracles.contains(child, p)


def test_count_321_instances():
    assert count_321_instances(Permutation.parse("[321]")) == 1
    assert count_321_instances(Permutation.parse("[4321]")) == 4
    assert count_321_instances(HEXAGON) == 0
    for w in permutations(range(1, 6)):
        assert count_321_instances(Permutation(w)) == oracles.triples_321(w)


def test_classify_examples():
    c = classify(HEXAGON)
    assert c.fully_commutative and c.freely_braided and c.maximally_clustered
    assert not c.hexagon_avoiding_1line
    c = classify(Permutation.parse("[4321]"))
    assert not c.maximally_clustered and not c.fully_commutative
    c = classify(Permutation.parse("[321]"))
    assert (c.fully_commutative, c.freely_braided, c.maximally_clustered) == (False, True, True)


@pytest.mark.parametrize("n,fc,fb,mc", [(4, 14, 20, 21), (5, 42, 71, 78), (6, 132, 260, 298)])
def test_class_sizes_by_brute_force(n, fc, fb, mc):
    pats = lambda P: [p.values for p in P]
    assert len(oracles.members(n, pats(FC))) == fc
    assert len(oracles.members(n, pats(FB))) == fb
    assert len(oracles.members(n, pats(MC))) == mc
    sizes = [0, 0, 0]
    for w in permutations(range(1, n + 1)):
        c = classify(Permutation(w))
        sizes[0] += c.fully_commutative
        sizes[1] += c.freely_braided
        sizes[2] += c.maximally_clustered
    assert sizes == [fc, fb, mc]


def test_pattern_sets():
    assert len(HEX1L) == 4 and HEXAGON in HEX1L
    both = FC | HEX1L
    assert len(both) == 5
    assert PatternSet.of("[321]", "[3412]").patterns == frozenset(
        {Permutation.parse("[321]"), Permutation.parse("[3412]")})


def test_support_and_connectivity():
    supp, conn = support_and_connectivity(word_to_permutation((1, 2, 5), 7))
    assert supp == {1, 2, 5} and not conn
    supp, conn = support_and_connectivity(HEXAGON)
    assert supp == set(range(1, 8)) and conn
    assert support_and_connectivity(Permutation.identity(4)) == (frozenset(), False)


@given(perms)
def test_support_matches_reduced_word(w):
    assert support_and_connectivity(w)[0] == set(reduced_word_of(w))
