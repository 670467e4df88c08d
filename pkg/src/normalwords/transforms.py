"""Symbol-removal reduction and pattern-guided expansion.

Expansion injects a source word into the wildcard slots of a pattern word,
blockwise; reduction deletes every copy of the inserted symbol and is a
retraction of every expansion. All transforms are pure given an immutable
ExpansionContext; stream variants are single-consumer.
"""

from __future__ import annotations

from normalwords import _kernels
from normalwords.pattern import PatternWord
from normalwords.words import Alphabet, DigitStream, FiniteWord


def reduce_word(v: FiniteWord) -> FiniteWord:
    """Delete every occurrence of the largest symbol, keeping order.

    Maps a word over b+1 symbols to one over b symbols; the result may be
    empty.
    """
    base = v.alphabet.base
    if base < 3:
        raise ValueError("reduction needs an expanded alphabet of at least 3 symbols")
    removed = bytes([base - 1])
    return FiniteWord(Alphabet(base - 1), v.data.translate(None, removed))


class ReducedStream(DigitStream):
    """Lazily filters the largest symbol out of a source stream.

    Exposes both counters: `position` counts emitted symbols,
    `input_position` counts source symbols consumed. On a source consisting
    only of the removed symbol a pull never completes; bound the source
    (e.g. with LimitedStream) when that is possible.
    """

    def __init__(self, source: DigitStream):
        base = source.alphabet.base
        if base < 3:
            raise ValueError("reduction needs an expanded alphabet of at least 3 symbols")
        super().__init__(Alphabet(base - 1))
        self._source = source
        self._removed = bytes([base - 1])

    @property
    def input_position(self) -> int:
        return self._source.position

    def _pull(self, limit: int) -> bytes:
        while True:
            chunk = self._source.take(limit)
            if not chunk:
                return b""
            filtered = chunk.translate(None, self._removed)
            if filtered:
                return filtered


def reduce_stream(source: DigitStream) -> ReducedStream:
    """Stream variant of reduce_word."""
    return ReducedStream(source)


class ExpansionContext:
    """Immutable expansion machinery derived from one pattern word."""

    def __init__(self, pattern: PatternWord):
        if pattern.source_base < 2:
            raise ValueError("expansion needs a source alphabet of at least 2 symbols")
        self.pattern = pattern
        self.source_alphabet = Alphabet(pattern.source_base)
        self.target_alphabet = pattern.word.alphabet
        self._template = pattern.word.data
        self._stars = pattern.star_offsets

    @property
    def source_block_length(self) -> int:
        return self.pattern.wildcard_count

    @property
    def expanded_block_length(self) -> int:
        return self.pattern.length


def expand_bytes(ctx: ExpansionContext, data: bytes) -> bytes:
    """Blockwise expansion on raw symbols; len(data) must be a multiple of
    the source block length."""
    ls = ctx.source_block_length
    if len(data) % ls:
        raise ValueError(f"input length {len(data)} not a multiple of {ls}")
    nblocks = len(data) // ls
    out = bytearray(nblocks * ctx.expanded_block_length)
    _kernels.fill_blocks(ctx._template, ctx._stars, data, out)
    return bytes(out)


def expand_block(ctx: ExpansionContext, v: FiniteWord) -> FiniteWord:
    """Expand exactly one source block into one pattern-length word."""
    if v.alphabet.base != ctx.source_alphabet.base:
        raise ValueError("word not over the source alphabet")
    if len(v) != ctx.source_block_length:
        raise ValueError(f"block must have length {ctx.source_block_length}, got {len(v)}")
    return FiniteWord(ctx.target_alphabet, expand_bytes(ctx, v.data))


def expand_word(ctx: ExpansionContext, v: FiniteWord) -> FiniteWord:
    """Expand a word whose length is a multiple of the source block length.

    reduce_word(expand_word(ctx, v)) == v for every valid v.
    """
    if v.alphabet.base != ctx.source_alphabet.base:
        raise ValueError("word not over the source alphabet")
    return FiniteWord(ctx.target_alphabet, expand_bytes(ctx, v.data))
