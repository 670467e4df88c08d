"""Staged stream expansion: rising pattern orders, shrinking thresholds.

Each stage scans the source for the shortest segment whose measured block
discrepancy (at the next stage's block length) drops below the stage
threshold, then expands that segment at the stage's order. Theorem mode uses
the exact construction constants (orders 2**i and thresholds far below
anything runnable); practical mode keeps the structure at runnable scale.
"""

from __future__ import annotations

import enum
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from normalwords.counting import DEFAULT_DENSE_CAP, OccurrenceTable
from normalwords.errors import ScheduleError, StreamTruncated
from normalwords.pattern import champernowne_like, pattern_lengths
from normalwords.transforms import ExpansionContext, expand_bytes
from normalwords.words import Alphabet, ChunkStream, DigitStream

DEFAULT_SCAN_BOUND = 100_000_000


def lemma_constant(order: int, base: int) -> Fraction:
    """Discrepancy amplification factor of one expansion order:
    base**wildcards / (base+1)**order, exact."""
    wild = pattern_lengths(order, base).wildcards
    return Fraction(base**wild, (base + 1) ** order)


def theorem_epsilon(stage: int, base: int, *, printed_form: bool = False) -> Fraction:
    """Exact stage threshold of the theorem construction.

    The default follows the inequality chain the construction actually uses,
    with factors base**wildcards(2**stage) * c(2**stage) and
    (base+1)**(2**stage) * c(2**(stage+1)). `printed_form=True` selects the
    weaker displayed variant (exponents `stage` instead); both are exposed
    for audit.
    """
    if stage < 1:
        raise ValueError("stage must be at least 1")
    order = 2**stage
    next_order = 2 ** (stage + 1)
    c_order = lemma_constant(order, base)
    c_next = lemma_constant(next_order, base)
    if printed_form:
        biggest = max(base**stage * c_order, (base + 1) ** stage * c_next)
    else:
        wild = pattern_lengths(order, base).wildcards
        biggest = max(base**wild * c_order, (base + 1) ** order * c_next)
    return Fraction(1, (base + 1) ** order * stage) / (3 * biggest)


class ScheduleMode(enum.Enum):
    THEOREM = "theorem"
    PRACTICAL = "practical"


@dataclass(frozen=True)
class ExpansionSchedule:
    """Per-stage policy: pattern order, acceptance threshold, scan bounds.

    Orders must be strictly increasing and thresholds positive and
    nonincreasing; both are checked as stages run.
    """

    mode: ScheduleMode
    base: int
    order_of: Callable[[int], int]
    epsilon_of: Callable[[int], Fraction]
    scan_bound: int | None = DEFAULT_SCAN_BOUND
    max_stages: int | None = None
    dense_cap: int = DEFAULT_DENSE_CAP

    @staticmethod
    def practical(
        base: int,
        *,
        orders: list[int] | None = None,
        epsilons: list[Fraction] | None = None,
        scan_bound: int | None = DEFAULT_SCAN_BOUND,
        max_stages: int | None = None,
        dense_cap: int = DEFAULT_DENSE_CAP,
    ) -> ExpansionSchedule:
        """Default runnable schedule: orders i, thresholds (base+1)**(-order)/i."""
        if orders is None:
            order_of = lambda i: i
        else:
            given = list(orders)
            if max_stages is None:
                max_stages = len(given)

            def order_of(i: int, _given=given) -> int:
                if i <= len(_given):
                    return _given[i - 1]
                return _given[-1] + (i - len(_given))

        if epsilons is None:
            epsilon_of = lambda i: Fraction(1, (base + 1) ** order_of(i) * i)
        else:
            fixed = [Fraction(e) for e in epsilons]
            if max_stages is None:
                max_stages = len(fixed)

            def epsilon_of(i: int, _fixed=fixed) -> Fraction:
                if i <= len(_fixed):
                    return _fixed[i - 1]
                raise ValueError(f"no threshold configured for stage {i}")

        return ExpansionSchedule(
            ScheduleMode.PRACTICAL, base, order_of, epsilon_of, scan_bound, max_stages, dense_cap
        )

    @staticmethod
    def theorem(
        base: int,
        *,
        scan_bound: int | None = None,
        max_stages: int | None = None,
        dense_cap: int = DEFAULT_DENSE_CAP,
        printed_form: bool = False,
    ) -> ExpansionSchedule:
        """The construction-exact schedule: orders 2**i, theorem thresholds.

        Infeasible beyond the smallest parameters (the stage-1 threshold for
        base 2 is below 10**-60); provided for exact arithmetic and audits.
        """
        return ExpansionSchedule(
            ScheduleMode.THEOREM,
            base,
            lambda i: 2**i,
            lambda i: theorem_epsilon(i, base, printed_form=printed_form),
            scan_bound,
            max_stages,
            dense_cap,
        )


@dataclass(frozen=True)
class StageRecord:
    """Telemetry for one accepted (or forced) stage segment."""

    index: int
    order: int
    epsilon: Fraction
    block_length: int  # segment granularity: wildcards per pattern block
    measure_block_length: int  # block length of the acceptance scan
    segment_length: int
    source_start: int  # 1-based inclusive span within the source
    source_end: int
    realized_delta: Fraction | None
    c_order: Fraction
    forced: bool = False  # accepted at end of input without meeting epsilon


def select_segment(
    source: DigitStream,
    start: int,
    order: int,
    next_order: int,
    epsilon: Fraction,
    *,
    scan_bound: int | None = DEFAULT_SCAN_BOUND,
    dense_cap: int = DEFAULT_DENSE_CAP,
    index: int = 1,
) -> tuple[StageRecord, bytes]:
    """Scan forward for the shortest admissible segment.

    Candidate lengths are the multiples of this order's block granularity
    strictly longer than the measurement block length; the first candidate
    whose measured discrepancy drops below `epsilon` is accepted and its
    realized discrepancy recorded. Raises ScheduleError when the scan bound
    is exhausted (carrying the best discrepancy found) and StreamTruncated
    when the source ends mid-scan (carrying the buffered symbols).
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if source.position + 1 != start:
        raise ValueError(f"stream at position {source.position}, expected start {start}")
    base = source.alphabet.base
    seg_unit = pattern_lengths(order, base).wildcards
    measure_len = pattern_lengths(next_order, base).wildcards
    table = OccurrenceTable(source.alphabet, measure_len, dense_cap=dense_cap)
    chunks: list[bytes] = []
    consumed = 0
    best: tuple[Fraction, int] | None = None
    k = (measure_len // seg_unit + 1) * seg_unit
    while True:
        if scan_bound is not None and k > scan_bound:
            raise ScheduleError(
                f"stage {index} scan bound {scan_bound} exhausted without discrepancy < {epsilon}",
                stage_index=index,
                stage_order=order,
                best_delta=None if best is None else best[0],
                best_length=None if best is None else best[1],
                scanned=consumed,
            )
        chunk = source.take(k - consumed)
        consumed += len(chunk)
        if chunk:
            chunks.append(chunk)
            table.update(chunk)
        if consumed < k:
            raise StreamTruncated(
                f"source ended after {consumed} symbols during stage {index} scan",
                data=b"".join(chunks),
                delivered=consumed,
            )
        delta = table.delta()
        if best is None or delta < best[0]:
            best = (delta, k)
        if delta < epsilon:
            record = StageRecord(
                index=index,
                order=order,
                epsilon=epsilon,
                block_length=seg_unit,
                measure_block_length=measure_len,
                segment_length=k,
                source_start=start,
                source_end=start + k - 1,
                realized_delta=delta,
                c_order=lemma_constant(order, base),
            )
            return record, b"".join(chunks)
        k += seg_unit


@dataclass
class ExpansionTelemetry:
    """Stage records and totals, filled in as the output stream is consumed."""

    schedule: ExpansionSchedule
    stages: list[StageRecord] = field(default_factory=list)
    source_consumed: int = 0  # symbols actually expanded
    emitted: int = 0
    leftover: int = 0  # trailing symbols consumed but short of one block
    finished: bool = False


_EXPAND_CHUNK_BLOCKS = 4096


def _expanded_pieces(ctx: ExpansionContext, segment: bytes) -> Iterator[bytes]:
    step = _EXPAND_CHUNK_BLOCKS * ctx.source_block_length
    for off in range(0, len(segment), step):
        yield expand_bytes(ctx, segment[off : off + step])


def expand_stream(
    source: DigitStream, schedule: ExpansionSchedule
) -> tuple[DigitStream, ExpansionTelemetry]:
    """Expand a source stream stage by stage; lazily.

    Returns the output stream over the expanded alphabet and its telemetry
    (populated as output is consumed). Reducing any emitted prefix
    reproduces a prefix of the source. In practical mode an end of input
    mid-scan forces the buffered tail through the current stage order
    (flagged in its StageRecord); theorem mode propagates the truncation.
    ScheduleErrors propagate after the output's valid prefix.
    """
    if source.alphabet.base != schedule.base:
        raise ValueError("source alphabet does not match the schedule base")
    telemetry = ExpansionTelemetry(schedule=schedule)
    target = Alphabet(schedule.base + 1)

    def run() -> Iterator[bytes]:
        stage = 1
        prev_order = 0
        prev_epsilon: Fraction | None = None
        while schedule.max_stages is None or stage <= schedule.max_stages:
            order = schedule.order_of(stage)
            next_order = schedule.order_of(stage + 1)
            epsilon = schedule.epsilon_of(stage)
            if order <= prev_order:
                raise ValueError(f"schedule orders must be strictly increasing at stage {stage}")
            if epsilon <= 0 or (prev_epsilon is not None and epsilon > prev_epsilon):
                raise ValueError(f"schedule thresholds must be positive and nonincreasing at stage {stage}")
            ctx = ExpansionContext(champernowne_like(order, schedule.base))
            start = source.position + 1
            try:
                record, segment = select_segment(
                    source,
                    start,
                    order,
                    next_order,
                    epsilon,
                    scan_bound=schedule.scan_bound,
                    dense_cap=schedule.dense_cap,
                    index=stage,
                )
            except StreamTruncated as trunc:
                if schedule.mode is ScheduleMode.THEOREM:
                    raise
                yield from _flush_tail(trunc.data, ctx, stage, order, epsilon, start)
                telemetry.finished = True
                return
            telemetry.stages.append(record)
            telemetry.source_consumed += record.segment_length
            for piece in _expanded_pieces(ctx, segment):
                telemetry.emitted += len(piece)
                yield piece
            prev_order = order
            prev_epsilon = epsilon
            stage += 1
        telemetry.finished = True

    def _flush_tail(
        data: bytes, ctx: ExpansionContext, stage: int, order: int, epsilon: Fraction, start: int
    ) -> Iterator[bytes]:
        seg_unit = ctx.source_block_length
        measure_len = pattern_lengths(schedule.order_of(stage + 1), schedule.base).wildcards
        usable = len(data) - len(data) % seg_unit
        telemetry.leftover = len(data) - usable
        if not usable:
            return
        tail = data[:usable]
        realized: Fraction | None = None
        if usable >= measure_len:
            t = OccurrenceTable(source.alphabet, measure_len, dense_cap=schedule.dense_cap)
            t.update(tail)
            realized = t.delta()
        record = StageRecord(
            index=stage,
            order=order,
            epsilon=epsilon,
            block_length=seg_unit,
            measure_block_length=measure_len,
            segment_length=usable,
            source_start=start,
            source_end=start + usable - 1,
            realized_delta=realized,
            c_order=lemma_constant(order, schedule.base),
            forced=True,
        )
        telemetry.stages.append(record)
        telemetry.source_consumed += usable
        for piece in _expanded_pieces(ctx, tail):
            telemetry.emitted += len(piece)
            yield piece

    return ChunkStream(target, run()), telemetry
