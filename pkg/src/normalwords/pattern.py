"""Champernowne-like pattern words and the Champernowne digit stream.

The order-n pattern over b+1 symbols is the concatenation of all length-n
words in lexicographic order. Its wildcard mask marks where the largest
symbol sits; the remaining (wildcard) positions are the slots a source word
fills during expansion.
"""

from __future__ import annotations

import functools
from array import array
from typing import NamedTuple

from normalwords.errors import ResourceLimitError
from normalwords.words import Alphabet, DigitStream, FiniteWord

STAR = 0  # mask symbol: expansion slot
MARKER = 1  # mask symbol: position holding the inserted digit
MASK_ALPHABET = Alphabet(2)

# Patterns are materialized eagerly; refuse anything longer than this.
DEFAULT_PATTERN_CAP = 1 << 26

_ASCII_DIGITS = bytes.maketrans(b"0123456789abcdef", bytes(range(16)))


class PatternLengths(NamedTuple):
    wildcards: int  # source symbols consumed per block
    total: int  # expanded symbols emitted per block


def pattern_lengths(order: int, base: int) -> PatternLengths:
    """Closed-form block lengths: (order*base*(base+1)**(order-1), order*(base+1)**order)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if base < 1:
        raise ValueError("base must be at least 1")
    return PatternLengths(order * base * (base + 1) ** (order - 1), order * (base + 1) ** order)


class PatternWord:
    """One materialized pattern: word, mask, and wildcard position map.

    Immutable after construction. `star_offsets` lists the 0-based offsets of
    the wildcard slots; position_map(i) gives the 1-based count of wildcards
    among positions 1..i.
    """

    __slots__ = ("order", "source_base", "word", "mask", "star_offsets", "_prefix_stars")

    def __init__(self, order: int, source_base: int, word: FiniteWord, mask: FiniteWord):
        self.order = order
        self.source_base = source_base
        self.word = word
        self.mask = mask
        stars = array("q")
        prefix = array("q", bytes(8 * (len(word) + 1)))
        running = 0
        mask_data = mask.data
        for i in range(len(mask_data)):
            if mask_data[i] == STAR:
                stars.append(i)
                running += 1
            prefix[i + 1] = running
        self.star_offsets = stars
        self._prefix_stars = prefix

    @property
    def expanded_base(self) -> int:
        return self.source_base + 1

    @property
    def wildcard_count(self) -> int:
        return len(self.star_offsets)

    @property
    def length(self) -> int:
        return len(self.word)

    def position_map(self, i: int) -> int:
        """Number of wildcard positions among 1..i (1-based, i in 1..length)."""
        if not 1 <= i <= len(self.word):
            raise IndexError(f"position {i} outside 1..{len(self.word)}")
        return self._prefix_stars[i]


def _mask_table(marker: int) -> bytes:
    table = bytearray(256)
    for s in range(256):
        table[s] = MARKER if s == marker else STAR
    return bytes(table)


def wildcard(v: FiniteWord) -> FiniteWord:
    """Mask of a word over the expanded alphabet: the largest symbol maps to
    MARKER, everything else to STAR. Homomorphic over concatenation."""
    marker = v.alphabet.base - 1
    return FiniteWord(MASK_ALPHABET, v.data.translate(_mask_table(marker)))


def mask_to_text(mask: FiniteWord) -> str:
    """Render a mask with '*' for wildcards and 'b' for marker positions."""
    return "".join("*b"[s] for s in mask.data)


@functools.lru_cache(maxsize=None)
def champernowne_like(order: int, base: int, *, size_cap: int = DEFAULT_PATTERN_CAP) -> PatternWord:
    """The order-n pattern word for source base b: all words of length n over
    b+1 symbols concatenated in lexicographic order.

    `base` may be 1 (a two-symbol pattern alphabet with no usable source
    alphabet); expansion contexts require base >= 2. Results are cached per
    (order, base, size_cap).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if base < 1:
        raise ValueError("base must be at least 1")
    expanded = base + 1
    total = order * expanded**order
    if total > size_cap:
        raise ResourceLimitError(f"pattern of {total} symbols exceeds cap {size_cap}")
    buf = bytearray(total)
    current = bytearray(order)
    pos = 0
    for _ in range(expanded**order):
        buf[pos : pos + order] = current
        pos += order
        i = order - 1
        while i >= 0:
            if current[i] == expanded - 1:
                current[i] = 0
                i -= 1
            else:
                current[i] += 1
                break
    word = FiniteWord(Alphabet(expanded), bytes(buf))
    mask = wildcard(word)
    return PatternWord(order, base, word, mask)


def _int_digits(n: int, base: int) -> bytes:
    if base == 2:
        return format(n, "b").encode().translate(_ASCII_DIGITS)
    if base == 8:
        return format(n, "o").encode().translate(_ASCII_DIGITS)
    if base == 10:
        return str(n).encode().translate(_ASCII_DIGITS)
    if base == 16:
        return format(n, "x").encode().translate(_ASCII_DIGITS)
    out = bytearray()
    while n:
        n, d = divmod(n, base)
        out.append(d)
    out.reverse()
    return bytes(out)


class ChampernowneStream(DigitStream):
    """Base-b digits of 1, 2, 3, ... concatenated; unbounded."""

    def __init__(self, base: int):
        super().__init__(Alphabet(base))
        self._next_int = 1
        self._buf = bytearray()

    def _pull(self, limit: int) -> bytes:
        buf = self._buf
        base = self.alphabet.base
        while len(buf) < limit:
            buf.extend(_int_digits(self._next_int, base))
            self._next_int += 1
        out = bytes(buf[:limit])
        del buf[:limit]
        return out


def champernowne_stream(base: int) -> ChampernowneStream:
    """Unbounded stream of the base-b Champernowne digits."""
    if base < 2:
        raise ValueError("base must be at least 2")
    return ChampernowneStream(base)
