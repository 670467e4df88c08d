"""Core word and stream types."""

from __future__ import annotations

import random

import pytest

from normalwords.words import (
    Alphabet,
    FiniteWord,
    IterStream,
    LimitedStream,
    WordStream,
    lex_rank,
    lex_unrank,
)


def fw(text: str, base: int) -> FiniteWord:
    return FiniteWord.from_text(text, base)


def test_alphabet_bounds():
    assert Alphabet(2).base == 2
    assert Alphabet(2).expanded() == Alphabet(3)
    with pytest.raises(ValueError):
        Alphabet(1)
    with pytest.raises(ValueError):
        Alphabet(257)


def test_word_rejects_foreign_symbols():
    with pytest.raises(ValueError):
        FiniteWord(Alphabet(2), b"\x00\x02")


def test_substring_examples():
    assert fw("012102", 3).substring(1, 3) == fw("012", 3)
    assert fw("012102", 3).substring(4, 6) == fw("102", 3)
    assert fw("0110", 2).substring(2, 2) == fw("1", 2)


def test_substring_length_identity():
    w = fw("0110100", 2)
    for i in range(1, len(w) + 1):
        for j in range(i, len(w) + 1):
            assert len(w.substring(i, j)) == j - i + 1


def test_substring_out_of_range():
    w = fw("0110", 2)
    for i, j in ((0, 2), (1, 5), (3, 2), (5, 5)):
        with pytest.raises(IndexError):
            w.substring(i, j)


def test_prefix_examples():
    assert fw("0001", 2).prefix(2) == fw("00", 2)
    assert fw("0001", 2).prefix(0) == FiniteWord(Alphabet(2))
    assert fw("012", 3).prefix(3) == fw("012", 3)
    with pytest.raises(IndexError):
        fw("0001", 2).prefix(5)


def test_drop_suffix_examples():
    assert fw("0001", 2).drop_suffix(1) == fw("000", 2)
    assert fw("0001", 2).drop_suffix(4) == FiniteWord(Alphabet(2))
    assert fw("0001", 2).drop_suffix(0) == fw("0001", 2)
    with pytest.raises(IndexError):
        fw("0001", 2).drop_suffix(5)


def test_prefix_plus_tail_reconstructs():
    rng = random.Random(7)
    for _ in range(50):
        base = rng.choice((2, 3, 5))
        data = bytes(rng.randrange(base) for _ in range(rng.randint(0, 20)))
        w = FiniteWord(Alphabet(base), data)
        for n in range(len(w) + 1):
            assert w.prefix(n).data + w.data[n:] == w.data
            assert w.drop_suffix(len(w) - n) == w.prefix(n)


def test_lex_unrank_examples():
    assert lex_unrank(Alphabet(3), 2, 0) == fw("00", 3)
    assert lex_unrank(Alphabet(2), 3, 7) == fw("111", 2)
    # rank 5 against the enumeration oracle
    all_words = sorted(
        (FiniteWord(Alphabet(3), bytes((a, b))) for a in range(3) for b in range(3)),
        key=lambda w: w.data,
    )
    assert lex_unrank(Alphabet(3), 2, 5) == all_words[5] == fw("12", 3)


def test_lex_unrank_bijection_and_order():
    for base in (2, 3):
        for n in range(0, 4):
            words = [lex_unrank(Alphabet(base), n, r) for r in range(base**n)]
            datas = [w.data for w in words]
            assert datas == sorted(datas)
            assert len(set(datas)) == len(datas)
            for r, w in enumerate(words):
                assert lex_rank(w) == r
    with pytest.raises(IndexError):
        lex_unrank(Alphabet(3), 2, 9)
    with pytest.raises(IndexError):
        lex_unrank(Alphabet(2), 2, -1)


def test_symbol_at_is_one_based():
    w = fw("012", 3)
    assert w.symbol_at(1) == 0
    assert w.symbol_at(3) == 2
    with pytest.raises(IndexError):
        w.symbol_at(0)
    with pytest.raises(IndexError):
        w.symbol_at(4)


def test_concat_and_equality():
    assert fw("01", 2) + fw("10", 2) == fw("0110", 2)
    assert fw("01", 2) != fw("01", 3)
    with pytest.raises(ValueError):
        fw("01", 2) + fw("01", 3)
    assert hash(fw("01", 2)) == hash(fw("01", 2))


def test_word_text_round_trip():
    w = fw("0110", 2)
    assert str(w) == "0110"
    assert FiniteWord.from_text(str(w), 2) == w
    with pytest.raises(ValueError):
        FiniteWord.from_text("0a1", 2)


def test_word_stream_take_and_position():
    s = WordStream(fw("01101", 2))
    assert s.position == 0
    assert s.take(2) == b"\x00\x01"
    assert s.position == 2
    assert s.take(10) == b"\x01\x00\x01"
    assert s.position == 5
    assert s.take(3) == b""
    assert s.position == 5


def test_stream_iteration_counts_positions():
    s = WordStream(fw("0110", 2))
    assert list(s) == [0, 1, 1, 0]
    assert s.position == 4


def test_iter_stream_validates_symbols():
    s = IterStream(Alphabet(2), iter([0, 1, 5]))
    with pytest.raises(ValueError):
        s.take(3)


def test_limited_stream_caps_source():
    inner = WordStream(fw("010101", 2))
    s = LimitedStream(inner, 4)
    assert s.take(10) == b"\x00\x01\x00\x01"
    assert s.take(1) == b""
    assert s.position == 4
    assert inner.position == 4
