import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from test_utils import element, root_system

from eqschubert.roots import IndexOutOfRange, RootSystemMismatch, Weight, simple_root
from eqschubert.weyl import (
    EnumerationLimitExceeded,
    GroupTooLarge,
    Word,
    act,
    all_elements,
    bruhat_leq,
    descents,
    elements_of_length,
    enumerate_up_to_length,
    from_one_line,
    from_word,
    identity,
    inverse,
    is_reduced,
    longest_element,
    one_line,
    one_line_text,
    parse_element,
    reduced_word,
    reflection,
    simple_reflection,
)


def test_word_parsing():
    assert Word.parse("4,2") == Word((4, 2))
    assert Word.parse("s4s2") == Word((4, 2))
    assert Word.parse("") == Word()
    assert Word.parse("e") == Word()
    assert str(Word((1, 2))) == "1,2"
    assert Word((1, 2)).to_text() == "s1s2"
    assert Word().to_text() == "e"
    with pytest.raises(ValueError):
        Word.parse("1,x")


def test_parse_element_forms():
    rs = root_system("A2")
    s1s2 = from_word(rs, (1, 2))
    assert parse_element(rs, "s1s2") == s1s2
    assert parse_element(rs, "1,2") == s1s2
    assert parse_element(rs, "(231)") == s1s2
    assert parse_element(rs, "e") == identity(rs)
    with pytest.raises(IndexOutOfRange):
        parse_element(rs, "3")


@pytest.mark.parametrize("type_text, order, top", [("A2", 6, 3), ("A3", 24, 6), ("C2", 8, 4), ("G2", 12, 6)])
def test_whole_group(type_text, order, top):
    rs = root_system(type_text)
    elements = all_elements(rs)
    assert len(elements) == order
    assert len(set(elements)) == order
    assert longest_element(rs).length == top
    assert max(w.length for w in elements) == top


def test_length_strata_of_a3():
    rs = root_system("A3")
    assert [len(elements_of_length(rs, k)) for k in range(7)] == [1, 3, 5, 6, 5, 3, 1]
    assert elements_of_length(rs, 7) == []


def test_a2_basics():
    rs = root_system("A2")
    s1, s2 = simple_reflection(rs, 1), simple_reflection(rs, 2)
    w0 = longest_element(rs)
    assert s1 * s1 == identity(rs)
    assert s1 * s2 * s1 == s2 * s1 * s2 == w0
    assert str(w0) == "s1s2s1"
    assert str(identity(rs)) == "e"
    assert reduced_word(s1 * s2) == Word((1, 2))
    assert inverse(s1 * s2) == s2 * s1
    assert descents(w0) == [1, 2]
    assert descents(s1 * s2) == [2]
    assert descents(s1 * s2, "left") == [1]
    assert not is_reduced(rs, (1, 1))
    assert is_reduced(rs, (2, 1, 2))
    assert reflection(rs, Weight.of(1, 1)) == w0
    assert act(s1, simple_root(rs, 1)) == -simple_root(rs, 1)


def test_one_line_notation():
    rs = root_system("A2")
    s1s2 = element("A2", "1,2")
    assert one_line(s1s2) == (2, 3, 1)
    assert one_line_text(s1s2) == "(231)"
    for w in all_elements(rs):
        assert from_one_line(rs, one_line(w)) == w
    with pytest.raises(ValueError):
        from_one_line(rs, (1, 1, 2))
    with pytest.raises(ValueError):
        one_line(element("C2", "1"))


def _subword_products(w):
    rs = w.rs
    word = reduced_word(w)
    out = set()
    for mask in itertools.product([False, True], repeat=len(word)):
        out.add(from_word(rs, [i for i, keep in zip(word, mask) if keep]))
    return out


@pytest.mark.parametrize("type_text", ["A3", "C2", "G2"])
def test_bruhat_order_matches_subwords(type_text):
    rs = root_system(type_text)
    elements = all_elements(rs)
    for w in elements:
        below = _subword_products(w)
        for u in elements:
            assert bruhat_leq(u, w) == (u in below), (u, w)


def test_bruhat_incomparable_pair():
    a, b = element("A2", "1,2"), element("A2", "2,1")
    assert not bruhat_leq(a, b)
    assert not bruhat_leq(b, a)
    assert bruhat_leq(element("A2", "1"), a)


def test_enumeration_is_ordered_and_bounded():
    rs = root_system("E8")
    elements = enumerate_up_to_length(rs, 2)
    assert len(elements) == 1 + 8 + len(elements_of_length(rs, 2))
    assert [w.length for w in elements] == sorted(w.length for w in elements)
    with pytest.raises(EnumerationLimitExceeded):
        enumerate_up_to_length(rs, 3, max_elements=10)
    with pytest.raises(GroupTooLarge):
        all_elements(rs)


def test_mixing_types_fails():
    with pytest.raises(RootSystemMismatch):
        element("A2", "1") * element("C2", "1")


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=10))
def test_random_words_in_a3(word):
    rs = root_system("A3")
    w = from_word(rs, word)
    assert w.length <= len(word)
    assert w.length % 2 == len(word) % 2
    assert from_word(rs, reduced_word(w)) == w
    assert len(reduced_word(w)) == w.length
    assert inverse(w) * w == identity(rs)
