import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings as hypothesis_settings, strategies as st

from penney_perms.errors import ComparablePatternsError, InvalidPatternError
from penney_perms.words import (
    MarkovChainOracle,
    Word,
    bifix_values,
    conway_prob,
    markov_ET,
    markov_race,
    nielsen_ET,
)


def W(text, m=2):
    return Word.parse(text, m)


def binary_words(max_length):
    return [
        Word(letters, 2)
        for length in range(1, max_length + 1)
        for letters in itertools.product(range(2), repeat=length)
    ]


def test_parse_and_str():
    assert str(W("100")) == "100"
    assert W("0123", 4).letters == (0, 1, 2, 3)
    with pytest.raises(InvalidPatternError):
        W("102")
    with pytest.raises(InvalidPatternError):
        W("ab")
    with pytest.raises(InvalidPatternError):
        Word((), 2)
    with pytest.raises(InvalidPatternError):
        Word((0,), 11)


def test_bifix_values():
    assert bifix_values(W("000"), W("000")) == (frozenset({1, 2, 3}), 7)
    assert bifix_values(W("000"), W("100")) == (frozenset(), 0)
    assert bifix_values(W("100"), W("100")) == (frozenset({3}), 4)


def test_bifix_values_need_one_alphabet():
    with pytest.raises(InvalidPatternError):
        bifix_values(W("10"), W("10", 3))


def test_conway_examples():
    assert conway_prob(W("100"), W("000")) == Fraction(7, 8)
    assert conway_prob(W("10"), W("00")) == Fraction(3, 4)
    # 01 and 00 both need a 0 first; then 01 and 00 are equally likely
    assert conway_prob(W("01"), W("00")) == Fraction(1, 2)


def test_conway_rejects_factors():
    with pytest.raises(ComparablePatternsError):
        conway_prob(W("10"), W("100"))


def test_nielsen_examples():
    assert nielsen_ET(W("11")) == 6
    assert nielsen_ET(W("10")) == 4
    assert nielsen_ET(W("000")) == 14


def test_markov_chain_states():
    oracle = MarkovChainOracle([W("100"), W("000")])
    assert oracle.states[0] == ()
    assert oracle.step((1, 0), 0) == (1, 0, 0)
    assert oracle.step((0, 0), 1) == (1,)
    assert oracle.step((1,), 1) == (1,)
    assert oracle.step((), 1) == (1,)


def test_markov_agrees_with_conway_on_short_binary_words():
    words = binary_words(4)
    for w, v in itertools.combinations(words, 2):
        if w.is_factor_of(v) or v.is_factor_of(w):
            continue
        assert markov_race(w, v) == conway_prob(w, v)


def test_markov_agrees_with_nielsen():
    for w in binary_words(5):
        assert markov_ET(w) == nielsen_ET(w)


def test_ternary_words():
    w, v = W("012", 3), W("120", 3)
    assert markov_race(w, v) == conway_prob(w, v)
    assert markov_ET(W("000", 3)) == 3 + 9 + 27


@hypothesis_settings(max_examples=50, deadline=None)
@given(
    st.integers(min_value=2, max_value=4).flatmap(
        lambda m: st.tuples(
            st.lists(st.integers(0, m - 1), min_size=1, max_size=5),
            st.lists(st.integers(0, m - 1), min_size=1, max_size=5),
            st.just(m),
        )
    )
)
def test_complementary_odds(case):
    first, second, m = case
    w, v = Word(tuple(first), m), Word(tuple(second), m)
    assume(not w.is_factor_of(v) and not v.is_factor_of(w))
    assert conway_prob(w, v) + conway_prob(v, w) == 1
