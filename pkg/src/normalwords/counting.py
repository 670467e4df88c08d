"""Exact occurrence counting and block discrepancy.

Aligned counts split a word into consecutive fixed-length blocks; sliding
counts consider every offset. Discrepancy is the maximum deviation of any
block's aligned frequency from the uniform value, kept as an exact rational
throughout. Counting over a FiniteWord is pure and reentrant; a single
OccurrenceTable is single-writer.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction

from normalwords import _kernels
from normalwords.errors import StreamTruncated
from normalwords.words import Alphabet, DigitStream, FiniteWord, lex_unrank, unrank_bytes

# Dense rank-indexed tables are used while base**block_length stays at or
# under this cap; longer blocks switch to sparse bytes-keyed storage.
DEFAULT_DENSE_CAP = 1 << 24


def aligned_occurrences(u: FiniteWord, v: FiniteWord) -> int:
    """Number of complete aligned length-|v| blocks of u equal to v."""
    if len(v) == 0:
        raise ValueError("pattern must be nonempty")
    if u.alphabet.base != v.alphabet.base:
        raise ValueError("words must share an alphabet")
    vd = v.data
    if len(vd) == 1:
        return u.data.count(vd)
    ud = u.data
    length = len(vd)
    return sum(1 for k in range(len(ud) // length) if ud[k * length : (k + 1) * length] == vd)


def occurrences(u: FiniteWord, v: FiniteWord) -> int:
    """Number of occurrences of v in u at every offset (overlaps included)."""
    if len(v) == 0:
        raise ValueError("pattern must be nonempty")
    if u.alphabet.base != v.alphabet.base:
        raise ValueError("words must share an alphabet")
    vd = v.data
    if len(vd) == 1:
        return u.data.count(vd)
    ud = u.data
    count = 0
    start = 0
    while True:
        idx = ud.find(vd, start)
        if idx < 0:
            return count
        count += 1
        start = idx + 1


@dataclass(frozen=True)
class DiscrepancyReport:
    """Maximum aligned-frequency deviation at one block length.

    delta = |count(witness)/blocks_seen - base**(-block_length)| and no block
    deviates further; witness ties break to the lexicographically least block.
    """

    block_length: int
    delta: Fraction
    witness: FiniteWord
    blocks_seen: int


class OccurrenceTable:
    """Streaming aligned-block counter at one fixed block length.

    Feed symbols with update(); trailing symbols short of a full block stay
    pending until completed by later input. Storage is a dense rank-indexed
    array when base**block_length <= dense_cap, otherwise a sparse map keyed
    by the block bytes.
    """

    def __init__(self, alphabet: Alphabet, block_length: int, *, dense_cap: int = DEFAULT_DENSE_CAP):
        if block_length < 1:
            raise ValueError("block length must be at least 1")
        self.alphabet = alphabet
        self.block_length = block_length
        self.table_size = alphabet.base**block_length
        self.blocks_seen = 0
        self._pending = bytearray()
        self._cmax = 0
        self._dense = self.table_size <= dense_cap
        if self._dense:
            self._counts: array | dict = array("q", bytes(8 * self.table_size))
            self._touched = 0
        else:
            self._counts = {}

    @property
    def consumed(self) -> int:
        """Total symbols fed, including the pending partial block."""
        return self.blocks_seen * self.block_length + len(self._pending)

    def update(self, symbols: FiniteWord | bytes) -> None:
        data = symbols.data if isinstance(symbols, FiniteWord) else bytes(symbols)
        self.alphabet.validate(data)
        if self._pending:
            data = bytes(self._pending) + data
            del self._pending[:]
        length = self.block_length
        usable = (len(data) // length) * length
        if usable:
            if self._dense:
                nb, self._cmax, self._touched = _kernels.count_blocks(
                    data, usable, self.alphabet.base, length, self._counts, self._cmax, self._touched
                )
                self.blocks_seen += nb
            else:
                counts = self._counts
                cmax = self._cmax
                for off in range(0, usable, length):
                    key = data[off : off + length]
                    c = counts.get(key, 0) + 1
                    counts[key] = c
                    if c > cmax:
                        cmax = c
                self._cmax = cmax
                self.blocks_seen += usable // length
        if usable < len(data):
            self._pending.extend(data[usable:])

    def count_of(self, block: FiniteWord) -> int:
        if len(block) != self.block_length or block.alphabet.base != self.alphabet.base:
            raise ValueError("block does not match this table")
        if self._dense:
            rank = 0
            for v in block.data:
                rank = rank * self.alphabet.base + v
            return self._counts[rank]
        return self._counts.get(block.data, 0)

    def _extremes(self) -> tuple[int, int]:
        """(cmax, cmin) over the whole table; absent blocks count as zero."""
        if self._dense:
            cmin = 0 if self._touched < self.table_size else min(self._counts)
        else:
            cmin = 0 if len(self._counts) < self.table_size else min(self._counts.values())
        return self._cmax, cmin

    def delta(self) -> Fraction:
        """Current discrepancy as an exact rational (witness not computed)."""
        n = self.blocks_seen
        if n == 0:
            raise ValueError("no complete block consumed yet")
        size = self.table_size
        cmax, cmin = self._extremes()
        return Fraction(max(cmax * size - n, n - cmin * size), n * size)

    def _first_absent(self) -> bytes:
        # The lexicographically least absent block sits within the first
        # len(map)+1 ranks.
        base = self.alphabet.base
        for rank in range(len(self._counts) + 1):
            key = unrank_bytes(base, self.block_length, rank)
            if key not in self._counts:
                return key
        raise AssertionError("sparse table unexpectedly complete")

    def report(self) -> DiscrepancyReport:
        """Discrepancy with its lexicographically least witness block."""
        n = self.blocks_seen
        if n == 0:
            raise ValueError("no complete block consumed yet")
        size = self.table_size
        cmax, cmin = self._extremes()
        d_above = cmax * size - n
        d_below = n - cmin * size
        dev = max(d_above, d_below)
        if self._dense:
            ranks = []
            if d_above == dev:
                ranks.append(self._counts.index(cmax))
            if d_below == dev:
                ranks.append(self._counts.index(cmin))
            witness = lex_unrank(self.alphabet, self.block_length, min(ranks))
        else:
            keys = []
            if d_above == dev:
                keys.append(min(k for k, c in self._counts.items() if c == cmax))
            if d_below == dev:
                if cmin == 0:
                    keys.append(self._first_absent())
                else:
                    keys.append(min(k for k, c in self._counts.items() if c == cmin))
            witness = FiniteWord(self.alphabet, min(keys))
        return DiscrepancyReport(
            block_length=self.block_length,
            delta=Fraction(dev, n * size),
            witness=witness,
            blocks_seen=n,
        )


def discrepancy(u: FiniteWord, block_length: int, *, dense_cap: int = DEFAULT_DENSE_CAP) -> DiscrepancyReport:
    """Discrepancy of a finite word at one block length.

    The denominator is floor(|u|/block_length); a trailing partial block is
    ignored. Requires at least one complete block.
    """
    if block_length < 1:
        raise ValueError("block length must be at least 1")
    if len(u) < block_length:
        raise ValueError("word shorter than one block")
    table = OccurrenceTable(u.alphabet, block_length, dense_cap=dense_cap)
    table.update(u)
    return table.report()


def discrepancy_series(
    stream: DigitStream,
    block_length: int,
    checkpoints: list[int],
    *,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> list[DiscrepancyReport]:
    """One report per checkpoint prefix length, in a single incremental pass.

    Checkpoints must be strictly increasing and at least block_length. If the
    stream ends early a StreamTruncated error carries the reports produced so
    far.
    """
    last = 0
    for cp in checkpoints:
        if cp < block_length:
            raise ValueError("checkpoints must be at least the block length")
        if cp <= last:
            raise ValueError("checkpoints must be strictly increasing")
        last = cp
    table = OccurrenceTable(stream.alphabet, block_length, dense_cap=dense_cap)
    reports: list[DiscrepancyReport] = []
    pos = 0
    for cp in checkpoints:
        need = cp - pos
        chunk = stream.take(need)
        table.update(chunk)
        pos += len(chunk)
        if len(chunk) < need:
            raise StreamTruncated(
                f"stream ended at {pos} symbols before checkpoint {cp}",
                reports=reports,
                delivered=pos,
            )
        reports.append(table.report())
    return reports


def hot_spot_statistic(u: FiniteWord, max_len: int, *, dense_cap: int = DEFAULT_DENSE_CAP) -> Fraction:
    """max over lengths l <= max_len and blocks v of occ(u, v) * base**l / |u|.

    The least constant for which the word meets the sliding-occurrence bound
    at these lengths.
    """
    if not 1 <= max_len <= len(u):
        raise ValueError("max_len must be in 1..|u|")
    base = u.alphabet.base
    data = u.data
    total = len(data)
    best = Fraction(0)
    for length in range(1, max_len + 1):
        size = base**length
        if size <= dense_cap:
            counts = array("q", bytes(8 * size))
            _kernels.sliding_counts(data, base, length, counts)
            cmax = max(counts)
        else:
            seen: dict[bytes, int] = {}
            for i in range(total - length + 1):
                key = data[i : i + length]
                seen[key] = seen.get(key, 0) + 1
            cmax = max(seen.values())
        stat = Fraction(cmax * size, total)
        if stat > best:
            best = stat
    return best
