"""Digit-stream toolkit for normality experiments.

Exact aligned-block discrepancy, Champernowne-like pattern words, the
symbol-insertion expansion that lifts a stream over b symbols to one over
b+1 symbols, and brute-force oracles for the counting and discrepancy
inequalities the construction relies on.
"""

from __future__ import annotations

__version__ = "0.1.0"

from normalwords._kernels import backend as kernel_backend
from normalwords.counting import (
    DEFAULT_DENSE_CAP,
    DiscrepancyReport,
    OccurrenceTable,
    aligned_occurrences,
    discrepancy,
    discrepancy_series,
    hot_spot_statistic,
    occurrences,
)
from normalwords.errors import ResourceLimitError, ScheduleError, StreamTruncated
from normalwords.expander import (
    ExpansionSchedule,
    ExpansionTelemetry,
    ScheduleMode,
    StageRecord,
    expand_stream,
    lemma_constant,
    select_segment,
    theorem_epsilon,
)
from normalwords.pattern import (
    MASK_ALPHABET,
    MARKER,
    STAR,
    ChampernowneStream,
    PatternWord,
    champernowne_like,
    champernowne_stream,
    mask_to_text,
    pattern_lengths,
    wildcard,
)
from normalwords.transforms import (
    ExpansionContext,
    expand_block,
    expand_word,
    reduce_stream,
    reduce_word,
)
from normalwords.words import (
    Alphabet,
    ChunkStream,
    DigitStream,
    FiniteWord,
    IterStream,
    LimitedStream,
    WordStream,
    lex_rank,
    lex_unrank,
)

__all__ = [
    "Alphabet",
    "ChampernowneStream",
    "ChunkStream",
    "DEFAULT_DENSE_CAP",
    "DigitStream",
    "DiscrepancyReport",
    "ExpansionContext",
    "ExpansionSchedule",
    "ExpansionTelemetry",
    "FiniteWord",
    "IterStream",
    "LimitedStream",
    "MARKER",
    "MASK_ALPHABET",
    "OccurrenceTable",
    "PatternWord",
    "ResourceLimitError",
    "STAR",
    "ScheduleError",
    "ScheduleMode",
    "StageRecord",
    "StreamTruncated",
    "WordStream",
    "aligned_occurrences",
    "champernowne_like",
    "champernowne_stream",
    "discrepancy",
    "discrepancy_series",
    "expand_block",
    "expand_stream",
    "expand_word",
    "hot_spot_statistic",
    "kernel_backend",
    "lemma_constant",
    "lex_rank",
    "lex_unrank",
    "mask_to_text",
    "occurrences",
    "pattern_lengths",
    "reduce_stream",
    "reduce_word",
    "select_segment",
    "theorem_epsilon",
    "wildcard",
]
