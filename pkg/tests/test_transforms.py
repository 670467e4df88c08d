"""Reduction and expansion transforms, including the retraction law."""

from __future__ import annotations

import itertools
import random

import pytest

from normalwords.counting import aligned_occurrences
from normalwords.pattern import champernowne_like, wildcard
from normalwords.transforms import (
    ExpansionContext,
    expand_block,
    expand_word,
    reduce_stream,
    reduce_word,
)
from normalwords.words import Alphabet, FiniteWord, IterStream, LimitedStream, WordStream


def fw(text: str, base: int) -> FiniteWord:
    return FiniteWord.from_text(text, base)


def ctx_for(order: int, base: int) -> ExpansionContext:
    return ExpansionContext(champernowne_like(order, base))


def test_reduce_examples():
    assert reduce_word(fw("012102", 3)) == fw("0110", 2)
    assert reduce_word(fw("222", 3)) == FiniteWord(Alphabet(2))
    assert reduce_word(fw("0101", 3)) == fw("0101", 2)


def test_reduce_needs_expanded_alphabet():
    with pytest.raises(ValueError):
        reduce_word(fw("01", 2))


def test_reduce_length_identity():
    rng = random.Random(1)
    for _ in range(50):
        data = bytes(rng.randrange(3) for _ in range(rng.randint(0, 30)))
        v = FiniteWord(Alphabet(3), data)
        assert len(reduce_word(v)) == len(v) - data.count(2)


def test_expand_block_examples():
    ctx = ctx_for(1, 2)
    assert expand_block(ctx, fw("01", 2)) == fw("012", 3)
    assert expand_block(ctx, fw("10", 2)) == fw("102", 3)
    assert expand_block(ctx, fw("00", 2)) == fw("002", 3)
    with pytest.raises(ValueError):
        expand_block(ctx, fw("011", 2))


def test_expand_word_examples():
    ctx = ctx_for(1, 2)
    assert expand_word(ctx, fw("0110", 2)) == fw("012102", 3)
    assert expand_word(ctx, FiniteWord(Alphabet(2))) == FiniteWord(Alphabet(3))
    with pytest.raises(ValueError):
        expand_word(ctx, fw("011", 2))


def test_expand_word_order2_properties():
    ctx = ctx_for(2, 2)
    rng = random.Random(9)
    v = FiniteWord(Alphabet(2), bytes(rng.randrange(2) for _ in range(24)))
    out = expand_word(ctx, v)
    assert len(out) == 36
    assert reduce_word(out) == v


def test_expansion_positions_follow_mask():
    ctx = ctx_for(2, 2)
    pw = ctx.pattern
    v = FiniteWord(Alphabet(2), bytes(range(2)) * 6)
    out = expand_block(ctx, v)
    for i in range(1, pw.length + 1):
        if pw.word.symbol_at(i) == 2:
            assert out.symbol_at(i) == 2
        else:
            assert out.symbol_at(i) == v.symbol_at(pw.position_map(i))


@pytest.mark.parametrize("base,order", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_retraction(base, order):
    ctx = ctx_for(order, base)
    rng = random.Random(100 * base + order)
    for _ in range(100):
        blocks = rng.randint(0, 4)
        data = bytes(rng.randrange(base) for _ in range(blocks * ctx.source_block_length))
        v = FiniteWord(Alphabet(base), data)
        assert reduce_word(expand_word(ctx, v)) == v


def test_expansion_length_ratio():
    for base, order in ((2, 1), (2, 2), (3, 1)):
        ctx = ctx_for(order, base)
        v = FiniteWord(Alphabet(base), bytes(ctx.source_block_length * 3))
        out = expand_word(ctx, v)
        assert len(out) * base == len(v) * (base + 1)


def test_equality_splits_into_mask_and_reduction():
    # over {0,1,2}: u == v iff same mask and same reduction
    words = []
    for length in range(0, 5):
        for tup in itertools.product(range(3), repeat=length):
            words.append(FiniteWord(Alphabet(3), bytes(tup)))
    for u in words:
        for v in words:
            lhs = u == v
            rhs = wildcard(u) == wildcard(v) and reduce_word(u) == reduce_word(v)
            assert lhs == rhs


@pytest.mark.parametrize("order", [1, 2])
def test_aligned_count_transport(order):
    ctx = ctx_for(order, 2)
    block = ctx.source_block_length
    rng = random.Random(order)
    for _ in range(200):
        w = FiniteWord(Alphabet(2), bytes(rng.randrange(2) for _ in range(block * rng.randint(1, 6))))
        v = FiniteWord(Alphabet(2), bytes(rng.randrange(2) for _ in range(block)))
        assert aligned_occurrences(w, v) == aligned_occurrences(expand_word(ctx, w), expand_word(ctx, v))


def test_reduce_stream_filters_lazily():
    src = WordStream(fw("021202", 3))
    out = reduce_stream(src)
    assert out.take(10) == b"\x00\x01\x00"
    assert out.position == 3
    assert out.input_position == 6


def test_reduce_stream_round_trip():
    ctx = ctx_for(1, 2)
    expanded = expand_word(ctx, fw("0110", 2))
    out = reduce_stream(WordStream(expanded))
    assert out.take(10) == fw("0110", 2).data


def test_reduce_stream_all_marker_source_bounded():
    src = LimitedStream(IterStream(Alphabet(3), itertools.repeat(2)), 50)
    out = reduce_stream(src)
    assert out.take(5) == b""
    assert out.input_position == 50
