"""Weyl group engine: braid relations, lengths, reduced words, Bruhat order,
the rank function (against a brute-force reflection oracle), enumeration."""

import itertools

import pytest

from qstrata import weyl
from qstrata.errors import CapExceededError, NonReducedWordError
from qstrata.rootsys import cartan_data, parse_cartan_type

RANK_LE_4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]
RANK_LE_3 = ["A1", "A2", "A3", "B2", "B3", "C3"]

GROUP_ORDER = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120,
    "B2": 8, "B3": 48, "B4": 384,
    "C3": 48, "C4": 384, "D4": 192, "F4": 1152, "G2": 12,
}


def cd_of(name):
    return cartan_data(parse_cartan_type(name))


def braid_exponent(a, i, j):
    prod = a[i][j] * a[j][i]
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod]


@pytest.mark.parametrize("name", RANK_LE_4)
def test_involutions_and_braid_relations(name):
    cd = cd_of(name)
    e = weyl.identity_element(cd)
    for i in range(1, cd.r + 1):
        si = weyl.simple_reflection(cd, i)
        assert si * si == e
        for j in range(i + 1, cd.r + 1):
            sj = weyl.simple_reflection(cd, j)
            m = braid_exponent(cd.a, i - 1, j - 1)
            prod = e
            for _ in range(m):
                prod = prod * (si * sj)
            assert prod == e


def test_from_word_examples():
    a2 = cd_of("A2")
    assert weyl.from_word(a2, ()) == weyl.identity_element(a2)
    assert weyl.from_word(a2, (1, 2, 1)) == weyl.from_word(a2, (2, 1, 2))
    a1 = cd_of("A1")
    assert weyl.from_word(a1, (1, 1)) == weyl.identity_element(a1)
    with pytest.raises(IndexError):
        weyl.from_word(a2, (3,))


def test_length_examples():
    a3 = cd_of("A3")
    assert weyl.length(weyl.identity_element(a3)) == 0
    assert weyl.length(weyl.longest_element(a3)) == 6
    a2 = cd_of("A2")
    assert weyl.length(weyl.from_word(a2, (1, 2, 1))) == 3


def test_reduced_word_examples():
    a2 = cd_of("A2")
    assert weyl.reduced_word(weyl.identity_element(a2)) == ()
    assert weyl.reduced_word(weyl.longest_element(a2)) == (1, 2, 1)


def test_longest_element_matrices():
    a2 = cd_of("A2")
    w0 = weyl.longest_element(a2)
    # w0 sends varpi_1 -> -varpi_2 and varpi_2 -> -varpi_1
    assert w0.apply_weight((1, 0)) == (0, -1)
    assert w0.apply_weight((0, 1)) == (-1, 0)
    b2 = cd_of("B2")
    from qstrata.intlin import identity

    assert weyl.longest_element(b2).wmat == tuple(
        tuple(-x for x in row) for row in identity(2)
    )
    a1 = cd_of("A1")
    assert weyl.longest_element(a1) == weyl.simple_reflection(a1, 1)


def reflection_length_bruteforce(w):
    """Independent oracle: BFS over products of arbitrary reflections."""
    cd = w.cd
    refl = weyl.reflections(cd)
    e = weyl.identity_element(cd)
    if w == e:
        return 0
    frontier = {e}
    for k in range(1, cd.r + 1):
        frontier = {u * t for u in frontier for t in refl}
        if w in frontier:
            return k
    raise AssertionError("reflection length exceeds rank")


@pytest.mark.parametrize("name", ["A2", "A3", "B2"])
def test_rank_s_equals_bruteforce_reflection_length(name):
    cd = cd_of(name)
    for w in weyl.enumerate_group(cd):
        assert weyl.rank_s(w) == reflection_length_bruteforce(w)


def test_rank_s_examples():
    a2 = cd_of("A2")
    assert weyl.rank_s(weyl.identity_element(a2)) == 0
    assert weyl.rank_s(weyl.longest_element(a2)) == 1
    b2 = cd_of("B2")
    assert weyl.rank_s(weyl.longest_element(b2)) == 2


def test_order_examples():
    a2 = cd_of("A2")
    assert weyl.order(weyl.identity_element(a2)) == 1
    assert weyl.order(weyl.simple_reflection(a2, 1)) == 2
    assert weyl.order(weyl.from_word(a2, (1, 2))) == 3  # Coxeter element, = h


def test_stabilizes_weight_examples():
    a3 = cd_of("A3")
    for i in range(1, 4):
        assert weyl.stabilizes_weight(weyl.identity_element(a3), i)
    assert weyl.stabilizes_weight(weyl.from_word(a3, (1, 2, 1)), 3)
    a2 = cd_of("A2")
    assert not weyl.stabilizes_weight(weyl.simple_reflection(a2, 1), 1)
    with pytest.raises(IndexError):
        weyl.stabilizes_weight(weyl.identity_element(a2), 3)


def test_bruhat_examples():
    a2 = cd_of("A2")
    e = weyl.identity_element(a2)
    w0 = weyl.longest_element(a2)
    s1 = weyl.from_word(a2, (1,))
    s2 = weyl.from_word(a2, (2,))
    s12 = weyl.from_word(a2, (1, 2))
    for w in weyl.enumerate_group(a2):
        assert weyl.bruhat_leq(e, w)
        if w != w0:
            assert not weyl.bruhat_leq(w0, w)
    assert weyl.bruhat_leq(s1, s12)
    assert not weyl.bruhat_leq(s1, s2)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_bruhat_is_a_graded_partial_order(name):
    cd = cd_of(name)
    elems = list(weyl.enumerate_group(cd))
    leq = {(u, w): weyl.bruhat_leq(u, w) for u in elems for w in elems}
    for u in elems:
        assert leq[(u, u)]
        for w in elems:
            if leq[(u, w)]:
                assert weyl.length(u) <= weyl.length(w)
                if leq[(w, u)]:
                    assert u == w
            for v in elems:
                if leq[(u, w)] and leq[(w, v)]:
                    assert leq[(u, v)]


def test_bruhat_subword_oracle_A2():
    """Independent subword-property oracle on all of A2 x A2."""
    cd = cd_of("A2")
    elems = list(weyl.enumerate_group(cd))
    for w in elems:
        word = weyl.reduced_word(w)
        below = set()
        for k in range(len(word) + 1):
            for subset in itertools.combinations(range(len(word)), k):
                sub = tuple(word[i] for i in subset)
                below.add(weyl.from_word(cd, sub))
        for u in elems:
            assert weyl.bruhat_leq(u, w) == (u in below)


def test_root_sequence_examples():
    a2 = cd_of("A2")
    assert weyl.root_sequence(a2, ()) == ()
    assert weyl.root_sequence(a2, (1, 2)) == ((1, 0), (1, 1))
    assert weyl.root_sequence(a2, (1, 2, 1)) == ((1, 0), (1, 1), (0, 1))
    with pytest.raises(NonReducedWordError):
        weyl.root_sequence(a2, (1, 1))


@pytest.mark.parametrize("name,expected", [("A1", 2), ("A3", 24), ("B3", 48)])
def test_enumerate_group_count(name, expected):
    cd = cd_of(name)
    elems = list(weyl.enumerate_group(cd))
    assert len(elems) == expected
    assert len({w.wmat for w in elems}) == expected


def test_enumerate_group_cap():
    with pytest.raises(CapExceededError):
        list(weyl.enumerate_group(cd_of("A3"), cap=10))


@pytest.mark.parametrize("name", RANK_LE_3)
def test_exhaustive_length_and_rank_identities(name):
    cd = cd_of(name)
    assert GROUP_ORDER[name] == sum(1 for _ in weyl.enumerate_group(cd))
    for w in weyl.enumerate_group(cd):
        word = weyl.reduced_word(w)
        assert weyl.from_word(cd, word) == w
        assert len(word) == weyl.length(w)
        winv = w.inverse()
        assert weyl.length(winv) == weyl.length(w)
        assert weyl.rank_s(winv) == weyl.rank_s(w)
        assert weyl.rank_s(w) <= weyl.length(w)
        assert (weyl.rank_s(w) - weyl.length(w)) % 2 == 0


@pytest.mark.parametrize("name", RANK_LE_3)
def test_rank_equals_length_iff_distinct_letters(name):
    cd = cd_of(name)
    for w in weyl.enumerate_group(cd):
        words = weyl.all_reduced_words(w)
        assert weyl.reduced_word(w) in words
        distinct = any(len(set(word)) == len(word) for word in words)
        assert (weyl.rank_s(w) == weyl.length(w)) == distinct
        # the letter set does not depend on the reduced word
        assert len({frozenset(word) for word in words}) == 1


def test_minus_w0_fixed_points():
    assert weyl.minus_w0_fixed_simples(cd_of("A2")) == []
    assert weyl.minus_w0_fixed_simples(cd_of("A3")) == [2]
    assert weyl.minus_w0_fixed_simples(cd_of("B2")) == [1, 2]


def test_word_parsing_and_roundtrip():
    a3 = cd_of("A3")
    w0 = weyl.longest_element(a3)
    assert weyl.parse_word(a3, "w0") == w0
    assert weyl.parse_word(a3, "") == weyl.identity_element(a3)
    assert weyl.parse_word(a3, "e") == weyl.identity_element(a3)
    assert weyl.parse_word(a3, "w0*1,2") == w0 * weyl.from_word(a3, (1, 2))
    assert weyl.parse_word(a3, "1,2,1") == weyl.from_word(a3, (1, 2, 1))
    for w in weyl.enumerate_group(a3):
        assert weyl.parse_word(a3, weyl.format_element(w)) == w
    with pytest.raises(IndexError):
        weyl.parse_word(a3, "1,9")


def test_reflection_count_equals_positive_roots():
    for name in ["A2", "A3", "B2", "B3", "G2"]:
        cd = cd_of(name)
        assert len(weyl.reflections(cd)) == cd.N
