"""Occurrence counting and discrepancy, checked against literal-definition oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from normalwords.counting import (
    OccurrenceTable,
    aligned_occurrences,
    discrepancy,
    discrepancy_series,
    hot_spot_statistic,
    occurrences,
)
from normalwords.errors import StreamTruncated
from normalwords.pattern import champernowne_like, champernowne_stream
from normalwords.words import Alphabet, FiniteWord, IterStream, WordStream, lex_unrank


def fw(text: str, base: int) -> FiniteWord:
    return FiniteWord.from_text(text, base)


def alocc_ref(u: FiniteWord, v: FiniteWord) -> int:
    # literal definition: starts i with i <= |u|-|v|+1 and i = 1 (mod |v|)
    length = len(v)
    count = 0
    for i in range(1, len(u) - length + 2):
        if (i - 1) % length == 0 and u.data[i - 1 : i - 1 + length] == v.data:
            count += 1
    return count


def occ_ref(u: FiniteWord, v: FiniteWord) -> int:
    length = len(v)
    return sum(1 for i in range(len(u) - length + 1) if u.data[i : i + length] == v.data)


def delta_ref(u: FiniteWord, length: int) -> Fraction:
    # max over all blocks of |alocc/floor(|u|/length) - base**-length|
    base = u.alphabet.base
    n = len(u) // length
    best = Fraction(0)
    for rank in range(base**length):
        v = lex_unrank(u.alphabet, length, rank)
        dev = abs(Fraction(alocc_ref(u, v), n) - Fraction(1, base**length))
        if dev > best:
            best = dev
    return best


def test_aligned_examples():
    assert aligned_occurrences(fw("010101", 2), fw("01", 2)) == 3
    assert aligned_occurrences(fw("0101", 2), fw("010", 2)) == 1
    assert aligned_occurrences(fw("012", 3), fw("2", 3)) == 1


def test_occurrence_examples():
    assert occurrences(fw("0000", 2), fw("00", 2)) == 3
    assert occurrences(fw("0110", 2), fw("11", 2)) == 1
    assert occurrences(fw("010", 2), fw("01", 2)) == 1


def test_empty_pattern_rejected():
    empty = FiniteWord(Alphabet(2))
    with pytest.raises(ValueError):
        aligned_occurrences(fw("01", 2), empty)
    with pytest.raises(ValueError):
        occurrences(fw("01", 2), empty)


def test_counts_match_literal_definitions():
    rng = random.Random(11)
    for _ in range(300):
        base = rng.choice((2, 3))
        alphabet = Alphabet(base)
        u = FiniteWord(alphabet, bytes(rng.randrange(base) for _ in range(rng.randint(1, 40))))
        v = FiniteWord(alphabet, bytes(rng.randrange(base) for _ in range(rng.randint(1, 5))))
        assert aligned_occurrences(u, v) == alocc_ref(u, v)
        assert occurrences(u, v) == occ_ref(u, v)
        assert occurrences(u, v) >= aligned_occurrences(u, v)
        if len(v) == 1:
            assert occurrences(u, v) == aligned_occurrences(u, v)


def test_concat_occurrence_boundary():
    u, v, w = fw("01", 2), fw("10", 2), fw("11", 2)
    assert occurrences(u + v, w) == 1
    assert occurrences(u, w) + occurrences(v, w) + len(w) - 1 == 1
    # single-symbol patterns see no boundary effects at all
    s = fw("1", 2)
    assert occurrences(u + v, s) == occurrences(u, s) + occurrences(v, s)


def test_discrepancy_examples():
    assert discrepancy(fw("0011", 2), 1).delta == 0
    rep = discrepancy(fw("0001", 2), 1)
    assert rep.delta == Fraction(1, 4)
    assert rep.witness == fw("0", 2)
    assert rep.blocks_seen == 4
    w2 = champernowne_like(2, 2).word
    assert discrepancy(w2, 2).delta == 0


def test_discrepancy_is_exact_rational():
    rep = discrepancy(fw("0001", 2), 2)
    assert isinstance(rep.delta, Fraction)
    assert rep.delta == Fraction(1, 4)
    assert rep.witness == fw("00", 2)


def test_discrepancy_matches_brute_force():
    rng = random.Random(23)
    for _ in range(100):
        base = rng.choice((2, 3))
        length = rng.randint(1, 3)
        data = bytes(rng.randrange(base) for _ in range(rng.randint(length, 30)))
        u = FiniteWord(Alphabet(base), data)
        assert discrepancy(u, length).delta == delta_ref(u, length)


def test_dense_and_sparse_storage_agree():
    rng = random.Random(5)
    for _ in range(60):
        base = rng.choice((2, 3))
        length = rng.randint(1, 4)
        data = bytes(rng.randrange(base) for _ in range(rng.randint(length, 50)))
        u = FiniteWord(Alphabet(base), data)
        dense = discrepancy(u, length)
        sparse = discrepancy(u, length, dense_cap=0)
        assert dense.delta == sparse.delta
        assert dense.witness == sparse.witness
        assert dense.blocks_seen == sparse.blocks_seen


def test_discrepancy_preconditions():
    with pytest.raises(ValueError):
        discrepancy(fw("01", 2), 0)
    with pytest.raises(ValueError):
        discrepancy(fw("01", 2), 3)


def test_incremental_updates_match_one_shot():
    rng = random.Random(3)
    data = bytes(rng.randrange(2) for _ in range(101))
    one = OccurrenceTable(Alphabet(2), 3)
    one.update(data)
    other = OccurrenceTable(Alphabet(2), 3)
    for b in data:
        other.update(bytes([b]))
    assert one.blocks_seen == other.blocks_seen == 33
    assert one.report() == other.report()
    assert other.consumed == 101


def test_count_of_lookup():
    t = OccurrenceTable(Alphabet(2), 2)
    t.update(fw("00011011", 2))
    for text in ("00", "01", "10", "11"):
        assert t.count_of(fw(text, 2)) == 1


def test_series_examples():
    s = IterStream(Alphabet(2), (i % 2 for i in range(100)))
    reports = discrepancy_series(s, 1, [2, 4, 6])
    assert [r.delta for r in reports] == [0, 0, 0]

    s = WordStream(fw("0001", 2))
    (rep,) = discrepancy_series(s, 2, [4])
    assert rep.delta == Fraction(1, 4)
    assert rep.witness == fw("00", 2)


def test_series_champernowne_trend():
    reports = discrepancy_series(champernowne_stream(2), 1, [10**3, 10**5])
    assert reports[1].delta < reports[0].delta


def test_series_matches_batch():
    rng = random.Random(17)
    data = bytes(rng.randrange(3) for _ in range(200))
    word = FiniteWord(Alphabet(3), data)
    checkpoints = [7, 30, 99, 200]
    reports = discrepancy_series(WordStream(word), 2, checkpoints)
    for cp, rep in zip(checkpoints, reports):
        assert rep == discrepancy(word.prefix(cp), 2)


def test_series_validation_and_truncation():
    with pytest.raises(ValueError):
        discrepancy_series(WordStream(fw("0101", 2)), 2, [4, 4])
    with pytest.raises(ValueError):
        discrepancy_series(WordStream(fw("0101", 2)), 2, [1])
    with pytest.raises(StreamTruncated) as exc:
        discrepancy_series(WordStream(fw("010101", 2)), 1, [2, 4, 100])
    err = exc.value
    assert len(err.reports) == 2
    assert err.delivered == 6


def test_hot_spot_examples():
    assert hot_spot_statistic(fw("01", 2), 1) == 1
    assert hot_spot_statistic(fw("00", 2), 1) == 2


def test_hot_spot_w3_brute_force():
    w3 = champernowne_like(3, 2).word  # 81 symbols over 3 symbols
    stat = hot_spot_statistic(w3, 2)
    # brute force over all 12 targets of lengths 1 and 2
    best = Fraction(0)
    for length in (1, 2):
        for rank in range(3**length):
            v = lex_unrank(Alphabet(3), length, rank)
            best = max(best, Fraction(occ_ref(w3, v) * 3**length, len(w3)))
    assert stat == best
    assert stat <= 2


def test_hot_spot_sparse_matches_dense():
    w = fw("0110100110010110", 2)
    assert hot_spot_statistic(w, 3) == hot_spot_statistic(w, 3, dense_cap=0)


def test_hot_spot_preconditions():
    with pytest.raises(ValueError):
        hot_spot_statistic(fw("01", 2), 0)
    with pytest.raises(ValueError):
        hot_spot_statistic(fw("01", 2), 3)
