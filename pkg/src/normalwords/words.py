"""Alphabets, finite words, and pull-based digit streams.

Symbols are small integers 0..base-1 stored as raw bytes; rendering to text
happens only at I/O boundaries. All public word positions are 1-based.
Alphabet and FiniteWord are immutable values and freely shareable; a
DigitStream is single-consumer.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

MAX_BASE = 256  # one byte per symbol


@dataclass(frozen=True)
class Alphabet:
    """Symbol universe: exactly the integers 0 .. base-1."""

    base: int

    def __post_init__(self):
        if not 2 <= self.base <= MAX_BASE:
            raise ValueError(f"alphabet base must be in 2..{MAX_BASE}, got {self.base}")

    def expanded(self) -> Alphabet:
        """The alphabet with one extra symbol (value `base`)."""
        return Alphabet(self.base + 1)

    def contains(self, symbol: int) -> bool:
        return 0 <= symbol < self.base

    def validate(self, data: bytes) -> None:
        if data and max(data) >= self.base:
            raise ValueError(f"symbol out of range for base {self.base}")


class FiniteWord:
    """Immutable finite sequence of symbols from one alphabet.

    Public indexing (symbol_at, substring) is 1-based and inclusive.
    """

    __slots__ = ("alphabet", "_data")

    def __init__(self, alphabet: Alphabet, symbols: bytes | Iterable[int] = b""):
        data = symbols if isinstance(symbols, bytes) else bytes(symbols)
        alphabet.validate(data)
        self.alphabet = alphabet
        self._data = data

    @classmethod
    def from_text(cls, text: str, base: int) -> FiniteWord:
        """Parse a digit string ('0'..'9') into a word; requires base <= 10."""
        if base > 10:
            raise ValueError("digit-text words require base <= 10")
        alphabet = Alphabet(base)
        values = bytearray()
        for ch in text:
            v = ord(ch) - 48
            if not 0 <= v <= 9:
                raise ValueError(f"not a digit character: {ch!r}")
            values.append(v)
        return cls(alphabet, bytes(values))

    @property
    def data(self) -> bytes:
        """Raw symbol values, one byte each."""
        return self._data

    @property
    def length(self) -> int:
        return len(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def symbol_at(self, i: int) -> int:
        """Symbol at 1-based position i."""
        if not 1 <= i <= len(self._data):
            raise IndexError(f"position {i} outside 1..{len(self._data)}")
        return self._data[i - 1]

    def substring(self, i: int, j: int) -> FiniteWord:
        """Symbols at positions i..j inclusive (1-based)."""
        if not 1 <= i <= j <= len(self._data):
            raise IndexError(f"substring bounds {i}..{j} outside 1..{len(self._data)}")
        return FiniteWord(self.alphabet, self._data[i - 1 : j])

    def prefix(self, n: int) -> FiniteWord:
        """First n symbols; n = 0 yields the empty word."""
        if not 0 <= n <= len(self._data):
            raise IndexError(f"prefix length {n} outside 0..{len(self._data)}")
        return FiniteWord(self.alphabet, self._data[:n])

    def drop_suffix(self, n: int) -> FiniteWord:
        """The word with its last n symbols removed."""
        if not 0 <= n <= len(self._data):
            raise IndexError(f"suffix length {n} outside 0..{len(self._data)}")
        return FiniteWord(self.alphabet, self._data[: len(self._data) - n])

    def count(self, symbol: int) -> int:
        """Occurrences of one symbol."""
        if not self.alphabet.contains(symbol):
            raise ValueError(f"symbol {symbol} not in alphabet")
        return self._data.count(symbol)

    def __add__(self, other: FiniteWord) -> FiniteWord:
        if self.alphabet != other.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return FiniteWord(self.alphabet, self._data + other._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteWord):
            return NotImplemented
        return self.alphabet == other.alphabet and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.alphabet, self._data))

    def __str__(self) -> str:
        if self.alphabet.base <= 10:
            return "".join(chr(48 + v) for v in self._data)
        return ".".join(str(v) for v in self._data)

    def __repr__(self) -> str:
        return f"FiniteWord(base={self.alphabet.base}, {str(self)!r})"


def unrank_bytes(base: int, n: int, rank: int) -> bytes:
    """Raw symbols of the rank-th length-n word in lexicographic order."""
    if rank < 0:
        raise IndexError("rank must be nonnegative")
    out = bytearray(n)
    for i in range(n - 1, -1, -1):
        rank, d = divmod(rank, base)
        out[i] = d
    if rank:
        raise IndexError(f"rank too large for base**{n} words")
    return bytes(out)


def lex_unrank(alphabet: Alphabet, n: int, rank: int) -> FiniteWord:
    """The rank-th word of length n in lexicographic order (rank 0 is 00..0)."""
    return FiniteWord(alphabet, unrank_bytes(alphabet.base, n, rank))


def lex_rank(word: FiniteWord) -> int:
    """Inverse of lex_unrank for words of the same length."""
    r = 0
    base = word.alphabet.base
    for v in word.data:
        r = r * base + v
    return r


class DigitStream:
    """Pull-based source of symbols from a fixed alphabet.

    Single-consumer: the position counter advances by one per symbol
    delivered, whether via take() or iteration. Subclasses implement
    _pull(limit), returning up to `limit` symbols and b"" at end of stream.
    """

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._position = 0

    @property
    def position(self) -> int:
        """Symbols delivered so far."""
        return self._position

    def _pull(self, limit: int) -> bytes:
        raise NotImplementedError

    def take(self, count: int) -> bytes:
        """Up to `count` symbols as raw bytes; shorter only at end of stream."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        parts = []
        need = count
        while need > 0:
            chunk = self._pull(need)
            if not chunk:
                break
            if max(chunk) >= self.alphabet.base:
                raise ValueError(f"stream produced symbol outside base {self.alphabet.base}")
            parts.append(chunk)
            need -= len(chunk)
        data = parts[0] if len(parts) == 1 else b"".join(parts)
        self._position += len(data)
        return data

    def __iter__(self) -> Iterator[int]:
        while True:
            chunk = self.take(1)
            if not chunk:
                return
            yield chunk[0]


class WordStream(DigitStream):
    """Finite stream over the symbols of one word."""

    def __init__(self, word: FiniteWord):
        super().__init__(word.alphabet)
        self._data = word.data
        self._offset = 0

    def _pull(self, limit: int) -> bytes:
        chunk = self._data[self._offset : self._offset + limit]
        self._offset += len(chunk)
        return chunk


class IterStream(DigitStream):
    """Stream adapter over any iterable of symbol values."""

    def __init__(self, alphabet: Alphabet, symbols: Iterable[int]):
        super().__init__(alphabet)
        self._it = iter(symbols)

    def _pull(self, limit: int) -> bytes:
        out = bytearray()
        for v in self._it:
            out.append(v)
            if len(out) >= limit:
                break
        return bytes(out)


class ChunkStream(DigitStream):
    """Stream over an iterator of byte chunks (e.g. a generator pipeline)."""

    def __init__(self, alphabet: Alphabet, chunks: Iterable[bytes]):
        super().__init__(alphabet)
        self._chunks = iter(chunks)
        self._buf = bytearray()

    def _pull(self, limit: int) -> bytes:
        while len(self._buf) < limit:
            try:
                piece = next(self._chunks)
            except StopIteration:
                break
            self._buf.extend(piece)
        out = bytes(self._buf[:limit])
        del self._buf[:limit]
        return out


class LimitedStream(DigitStream):
    """Caps another stream at a fixed number of symbols."""

    def __init__(self, source: DigitStream, limit: int):
        if limit < 0:
            raise ValueError("limit must be nonnegative")
        super().__init__(source.alphabet)
        self._source = source
        self._remaining = limit

    def _pull(self, limit: int) -> bytes:
        if self._remaining <= 0:
            return b""
        chunk = self._source.take(min(limit, self._remaining))
        self._remaining -= len(chunk)
        return chunk
