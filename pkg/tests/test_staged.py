from itertools import product

import pytest

from eraserlang import (
    Eraser,
    MalformedInput,
    min_stages,
    parse_staged,
    vanishes,
    vanishes_by_grammar,
    vanishing_words,
    words_over,
)

from oracles import min_stages_brute, pipeline, vanishes_brute

E1, E2, E3 = Eraser(1), Eraser(2), Eraser(3)


# ----------------------------------------------------------- the grammar

def test_grammar_examples():
    assert vanishes_by_grammar(parse_staged("0 E1"))
    assert vanishes_by_grammar(())
    assert not vanishes_by_grammar(parse_staged("E1 0"))
    assert not vanishes_by_grammar(parse_staged("0 1 E1"))
    assert vanishes_by_grammar(parse_staged("0 1 E1 E1"))


def test_grammar_rejects_foreign_indices():
    with pytest.raises(MalformedInput):
        vanishes_by_grammar((0, E2))


def test_grammar_agrees_with_pipeline():
    for length in range(9):
        for word in product([0, 1, E1], repeat=length):
            assert vanishes_by_grammar(word) == (pipeline(word, 1) == ())


# ------------------------------------------------------------ membership

def test_vanishes_examples():
    assert vanishes(parse_staged("0 E1"), 1)
    assert vanishes(parse_staged("E2 E1"), 2)
    assert not vanishes(parse_staged("0 E1 E2"), 2)


def test_out_of_alphabet_indices_are_nonmembers_not_errors():
    assert not vanishes((0, E2), 1)
    assert not vanishes((E3, E1), 2)


def test_vanishes_validates_stage_count():
    with pytest.raises(ValueError):
        vanishes((), 0)


def test_empty_word_is_in_every_language():
    assert all(vanishes((), k) for k in range(1, 6))


def test_vanishes_agrees_with_brute_pipeline():
    for word in words_over(3, 5):
        for k in range(1, 4):
            assert vanishes(word, k) == vanishes_brute(word, k)


# ----------------------------------------------------------- enumeration

def test_vanishing_words_pinned_lists():
    assert vanishing_words(1, 2) == [(), (0, E1), (1, E1)]
    assert vanishing_words(2, 2) == [
        (), (0, E1), (0, E2), (1, E1), (1, E2), (E2, E1)]
    assert vanishing_words(1, 0) == [()]


def test_vanishing_words_order_and_completeness():
    alphabet = [0, 1, E1, E2]
    expected = [w for length in (0, 1, 2, 3, 4)
                for w in product(alphabet, repeat=length)
                if vanishes_brute(w, 2)]
    assert vanishing_words(2, 4) == expected


def test_vanishing_words_validates_stage_count():
    with pytest.raises(ValueError):
        vanishing_words(0, 4)


# ----------------------------------------------------------- chain shape

def test_languages_grow_with_the_stage_count():
    for k in (1, 2):
        members = vanishing_words(k, 6)
        assert all(vanishes(w, k + 1) for w in members)
        witness = (0, Eraser(k + 1))
        assert vanishes(witness, k + 1) and not vanishes(witness, k)


def test_members_have_even_length():
    assert all(len(w) % 2 == 0 for w in vanishing_words(2, 6))


def test_one_stage_members_pair_erasers_with_letters():
    for w in vanishing_words(1, 8):
        erasers = sum(1 for s in w if isinstance(s, Eraser))
        assert len(w) == 2 * erasers


def test_higher_stages_allow_eraser_heavy_members():
    # four erasers in six symbols: an eraser can erase a higher one
    w = (0, 0, E2, E2, E1, E2)
    assert vanishes(w, 2)
    erasers = sum(1 for s in w if isinstance(s, Eraser))
    assert len(w) != 2 * erasers


# ---------------------------------------------------------- least stages

def test_min_stages_examples():
    assert min_stages(parse_staged("0 E1")) == 1
    assert min_stages(parse_staged("E2 E1")) == 2
    assert min_stages(parse_staged("0 E1 E2")) is None
    assert min_stages(()) == 1


def test_min_stages_agrees_with_brute_search():
    for word in words_over(3, 5):
        assert min_stages(word) == min_stages_brute(word, kmax=5)
