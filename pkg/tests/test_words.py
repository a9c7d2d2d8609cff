import math

import pytest
from hypothesis import given, strategies as st

from eraserlang import (
    Eraser,
    MalformedInput,
    UPWord,
    format_staged,
    format_up,
    parse_coded,
    parse_staged,
    parse_up,
    up_equal,
    up_normalize,
    up_prefix,
)

from oracles import primitive_root, take

coded_words = st.text(alphabet="01ab", max_size=8)
coded_periods = st.text(alphabet="01ab", min_size=1, max_size=6)


def up(prefix, period):
    return UPWord(prefix, period)


# ------------------------------------------------------------- parsing

def test_parse_coded_accepts_the_four_letters():
    assert parse_coded("0abba1") == "0abba1"
    assert parse_coded("") == ""


def test_parse_coded_rejects_with_position():
    with pytest.raises(MalformedInput) as err:
        parse_coded("0x1")
    assert "unexpected character 'x' at position 2" in str(err.value)
    assert err.value.position == 2


def test_parse_staged_tokens():
    assert parse_staged("0 E2 1") == (0, Eraser(2), 1)
    assert parse_staged("") == ()
    assert parse_staged("  E12  ") == (Eraser(12),)


def test_parse_staged_rejects_bad_tokens():
    for text, pos in [("E0", 1), ("2", 1), ("0 e1", 3), ("0 E01", 3)]:
        with pytest.raises(MalformedInput) as err:
            parse_staged(text)
        assert err.value.position == pos


def test_eraser_index_must_be_positive():
    with pytest.raises(MalformedInput):
        Eraser(0)


def test_format_staged_round_trip():
    for text in ["", "0", "0 E2 1", "E1 E1 0 1"]:
        assert format_staged(parse_staged(text)) == " ".join(text.split())


# ------------------------------------------------------------ UP words

def test_upword_validation():
    with pytest.raises(MalformedInput):
        UPWord("0", "")
    with pytest.raises(MalformedInput):
        UPWord("0", (0,))


def test_parse_up_and_format_up():
    x = parse_up("1 1|E1 0", kind="staged")
    assert x == UPWord((1, 1), (Eraser(1), 0))
    assert format_up(x) == "1 1|E1 0"
    assert parse_up("|01") == UPWord("", "01")
    with pytest.raises(MalformedInput):
        parse_up("01")
    with pytest.raises(MalformedInput):
        parse_up("0|1|0")
    with pytest.raises(MalformedInput):
        parse_up("0|")
    with pytest.raises(ValueError):
        parse_up("|01", kind="decimal")


def test_up_prefix_examples():
    assert up_prefix(up("", "01"), 5) == "01010"
    assert up_prefix(up("1", "0"), 3) == "100"
    assert up_prefix(up("", "1"), 0) == ""


def test_up_normalize_examples():
    assert up_normalize(up("0", "10")) == up("", "01")
    assert up_normalize(up("", "0101")) == up("", "01")
    assert up_normalize(up("", "1")) == up("", "1")


def test_up_normalize_staged_words():
    x = up((0,), (Eraser(1), 0))
    assert up_normalize(x) == up((), (0, Eraser(1)))


def test_up_equal_examples():
    assert up_equal(up("", "01"), up("0", "10"))
    assert not up_equal(up("", "0"), up("", "1"))
    assert up_equal(up("", "01"), up("", "0101"))


# ---------------------------------------------------------- properties

@given(coded_words, coded_periods, st.integers(0, 40))
def test_up_prefix_matches_unrolling(prefix, period, n):
    x = up(prefix, period)
    assert up_prefix(x, n) == take(x, n)


@given(coded_words, coded_periods, st.integers(0, 30), st.integers(0, 30))
def test_up_prefix_monotone(prefix, period, n, m):
    if n > m:
        n, m = m, n
    x = up(prefix, period)
    assert up_prefix(x, m).startswith(up_prefix(x, n))


@given(coded_words, coded_periods)
def test_normalize_idempotent_and_equal(prefix, period):
    x = up(prefix, period)
    y = up_normalize(x)
    assert up_normalize(y) == y
    assert up_equal(x, y)
    assert y.period == primitive_root(y.period)


@given(coded_words, coded_periods, coded_words, coded_periods)
def test_up_equal_matches_bounded_comparison(u1, v1, u2, v2):
    # |u1| + |u2| + 2 lcm(|v1|, |v2|) symbols decide equality of two
    # ultimately periodic words
    x, y = up(u1, v1), up(u2, v2)
    bound = len(u1) + len(u2) + 2 * math.lcm(len(v1), len(v2))
    assert up_equal(x, y) == (take(x, bound) == take(y, bound))
