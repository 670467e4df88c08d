"""Command-line interface: generate, expand, discrepancy, verify.

Digit-stream files are ASCII by default (one character per symbol, '0'..'9',
legal while the alphabet has at most 10 symbols); --format binary selects one
raw byte per symbol value. All machine-readable CSV fields are exact
integers; decimal renderings appear only in the human-readable summary
column. Exit codes: 0 success, 1 verification failure, 2 usage error,
3 schedule error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from normalwords import __version__
from normalwords.counting import DEFAULT_DENSE_CAP, OccurrenceTable
from normalwords.errors import ResourceLimitError, ScheduleError, StreamTruncated
from normalwords.expander import ExpansionSchedule, StageRecord, expand_stream, lemma_constant
from normalwords.oracles import (
    OracleReport,
    check_concat_discrepancy,
    check_concat_occurrence_bound,
    check_counting_identity,
    check_length_halving,
    check_main_lemma,
    check_pattern_mask_counts,
    check_suffix_discrepancy,
    check_unaligned_bound,
    check_window_counts,
)
from normalwords.pattern import ChampernowneStream, champernowne_like
from normalwords.words import Alphabet, ChunkStream, DigitStream, FiniteWord, LimitedStream, WordStream

_VAL_TO_ASCII = bytes.maketrans(bytes(range(10)), b"0123456789")
_ASCII_TO_VAL = bytes.maketrans(b"0123456789", bytes(range(10)))
_FILE_CHUNK = 1 << 20


def _encode(data: bytes, base: int, fmt: str) -> bytes:
    if fmt == "binary":
        return data
    if base > 10:
        raise ValueError("ascii format requires base <= 10; use --format binary")
    return data.translate(_VAL_TO_ASCII)


def _decode(raw: bytes, alphabet: Alphabet, fmt: str) -> bytes:
    if fmt == "binary":
        data = raw
    else:
        data = raw.translate(_ASCII_TO_VAL, b"\n\r")
    alphabet.validate(data)
    return data


def _file_stream(path: str, alphabet: Alphabet, fmt: str) -> DigitStream:
    def chunks():
        with open(path, "rb") as fh:
            while True:
                raw = fh.read(_FILE_CHUNK)
                if not raw:
                    return
                yield _decode(raw, alphabet, fmt)

    return ChunkStream(alphabet, chunks())


def _write_bytes(data: bytes, path: str | None) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _open_csv(path: str | None):
    if path is None:
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _word_text(w: FiniteWord) -> str:
    return str(w)


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


# generate


def _cmd_generate(args) -> int:
    out_base = args.base if args.kind == "champernowne" else args.base + 1
    if args.format == "ascii" and out_base > 10:
        raise ValueError("ascii format requires base <= 10; use --format binary")
    if args.kind == "champernowne":
        if args.prefix is None or args.prefix < 1:
            raise ValueError("--prefix must be at least 1 for champernowne output")
        stream = ChampernowneStream(args.base)
        data = stream.take(args.prefix)
    else:
        if args.order is None:
            raise ValueError("--order is required for pattern output")
        pw = champernowne_like(args.order, args.base)
        data = pw.word.data
        if args.prefix is not None:
            if not 1 <= args.prefix <= len(data):
                raise ValueError(f"--prefix outside 1..{len(data)} for this pattern")
            data = data[: args.prefix]
    _write_bytes(_encode(data, out_base, args.format), args.output)
    return 0


# expand


def _schedule_from_args(args) -> ExpansionSchedule:
    if args.schedule == "theorem":
        return ExpansionSchedule.theorem(
            args.base,
            scan_bound=args.scan_bound,
            max_stages=args.max_stages,
            printed_form=args.epsilon_form == "printed",
        )
    orders = _int_list(args.orders) if args.orders else None
    schedule = ExpansionSchedule.practical(
        args.base,
        orders=orders,
        scan_bound=args.scan_bound,
        max_stages=args.max_stages,
    )
    return schedule


_TELEMETRY_HEADER = (
    "stage,order,block_length,measure_block_length,epsilon_num,epsilon_den,"
    "c_order_num,c_order_den,segment_length,source_start,source_end,"
    "delta_num,delta_den,forced"
)


def _telemetry_row(r: StageRecord) -> str:
    delta_num = "" if r.realized_delta is None else str(r.realized_delta.numerator)
    delta_den = "" if r.realized_delta is None else str(r.realized_delta.denominator)
    return ",".join(
        str(x)
        for x in (
            r.index, r.order, r.block_length, r.measure_block_length,
            r.epsilon.numerator, r.epsilon.denominator,
            r.c_order.numerator, r.c_order.denominator,
            r.segment_length, r.source_start, r.source_end,
            delta_num, delta_den, int(r.forced),
        )
    )


def _planned_row(schedule: ExpansionSchedule) -> str:
    order = schedule.order_of(1)
    epsilon = schedule.epsilon_of(1)
    c = lemma_constant(order, schedule.base)
    return ",".join(
        str(x)
        for x in (
            1, order, "", "",
            epsilon.numerator, epsilon.denominator,
            c.numerator, c.denominator,
            "", "", "", "", "", "",
        )
    )


def _write_telemetry(path: str | None, schedule: ExpansionSchedule, stages: list[StageRecord]) -> None:
    if path is None:
        return
    lines = ["# normalwords stage-telemetry v1", _TELEMETRY_HEADER]
    if stages:
        lines.extend(_telemetry_row(r) for r in stages)
    else:
        lines.append(_planned_row(schedule))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _cmd_expand(args) -> int:
    if args.format == "ascii" and args.base + 1 > 10:
        raise ValueError("ascii format requires base <= 10; use --format binary")
    schedule = _schedule_from_args(args)
    alphabet = Alphabet(args.base)
    if args.input is not None:
        source: DigitStream = _file_stream(args.input, alphabet, args.format)
    else:
        source = ChampernowneStream(args.base)
    if args.prefix is not None:
        source = LimitedStream(source, args.prefix)

    out_fh = open(args.output, "wb") if args.output else sys.stdout.buffer
    stream, telemetry = expand_stream(source, schedule)
    try:
        while True:
            chunk = stream.take(_FILE_CHUNK)
            if not chunk:
                break
            out_fh.write(_encode(chunk, args.base + 1, args.format))
    except ScheduleError:
        _write_telemetry(args.telemetry, schedule, telemetry.stages)
        raise
    finally:
        if args.output:
            out_fh.close()
        else:
            out_fh.flush()
    _write_telemetry(args.telemetry, schedule, telemetry.stages)
    print(
        f"expanded {telemetry.source_consumed} source symbols into {telemetry.emitted} "
        f"over {len(telemetry.stages)} stages (leftover {telemetry.leftover})",
        file=sys.stderr,
    )
    return 0


# discrepancy


def _cmd_discrepancy(args) -> int:
    alphabet = Alphabet(args.base)
    lengths = _int_list(args.lengths)
    if not lengths or any(l < 1 for l in lengths):
        raise ValueError("--lengths must list block lengths >= 1")
    for length in lengths:
        if alphabet.base**length > args.dense_cap:
            raise ResourceLimitError(
                f"block length {length} needs {alphabet.base**length} table entries, cap {args.dense_cap}"
            )
    with open(args.input, "rb") as fh:
        data = _decode(fh.read(), alphabet, args.format)
    checkpoints = sorted(_int_list(args.prefix)) if args.prefix else [len(data)]
    if len(set(checkpoints)) != len(checkpoints):
        raise ValueError("checkpoint prefixes must be distinct")
    if any(cp > len(data) for cp in checkpoints) or any(cp < 1 for cp in checkpoints):
        raise ValueError(f"checkpoints must lie in 1..{len(data)}")
    word = FiniteWord(alphabet, data)

    fh, own = _open_csv(args.output)
    try:
        fh.write("# normalwords discrepancy v1\n")
        fh.write("prefix_length,block_length,delta_num,delta_den,witness,delta_approx\n")
        for length in lengths:
            table = OccurrenceTable(alphabet, length, dense_cap=args.dense_cap)
            pos = 0
            stream = WordStream(word)
            for cp in checkpoints:
                table.update(stream.take(cp - pos))
                pos = cp
                rep = table.report()
                fh.write(
                    f"{cp},{length},{rep.delta.numerator},{rep.delta.denominator},"
                    f"{_word_text(rep.witness)},{float(rep.delta):.6g}\n"
                )
    finally:
        if own:
            fh.close()
    return 0


# verify


def _verify_claims(args) -> dict[str, list[OracleReport]]:
    seed = args.seed
    trials = args.trials

    def counting() -> list[OracleReport]:
        if args.order is not None:
            return [check_counting_identity(args.base or 2, args.order, budget=args.budget)]
        return [check_counting_identity(b, n, budget=args.budget) for b, n in ((2, 1), (2, 2), (3, 1))]

    registry = {
        "counting-identity": counting,
        "main-lemma": lambda: [
            check_main_lemma(2, 1, trials or 500, seed),
            check_main_lemma(2, 2, trials or 500, seed),
        ],
        "length-halving": lambda: [
            check_length_halving(2, 2, 1, trials or 1000, seed),
            check_length_halving(3, 2, 1, trials or 1000, seed),
        ],
        "suffix-discrepancy": lambda: [check_suffix_discrepancy(trials or 1000, seed)],
        "concat-discrepancy": lambda: [check_concat_discrepancy(trials or 1000, seed)],
        "unaligned-bound": lambda: [check_unaligned_bound(trials or 200, seed)],
        "concat-occurrence": lambda: [check_concat_occurrence_bound(trials or 5000, seed)],
        "window-counts": lambda: [check_window_counts()],
        "pattern-mask-counts": lambda: [check_pattern_mask_counts()],
    }
    if args.claim == "all":
        return {name: fn() for name, fn in registry.items()}
    if args.claim not in registry:
        raise ValueError(f"unknown claim {args.claim!r}; choices: all, {', '.join(registry)}")
    return {args.claim: registry[args.claim]()}


def _cmd_verify(args) -> int:
    results = _verify_claims(args)
    fh, own = _open_csv(args.output)
    failed = False
    try:
        fh.write("# normalwords verify-report v1\n")
        fh.write("claim,params,instances,skipped,violations,status\n")
        for reports in results.values():
            for rep in reports:
                params = ";".join(f"{k}={v}" for k, v in rep.params.items())
                status = "pass" if rep.passed else "fail"
                fh.write(f"{rep.claim},{params},{rep.instances},{rep.skipped},{len(rep.violations)},{status}\n")
                if not rep.passed:
                    failed = True
    finally:
        if own:
            fh.close()
    for reports in results.values():
        for rep in reports:
            print(rep.summary(), file=sys.stderr)
            for violation in rep.violations:
                print(f"  violation: {violation}", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="normalwords", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a digit-stream file")
    gen.add_argument("--kind", choices=("champernowne", "pattern"), required=True)
    gen.add_argument("--base", type=int, required=True)
    gen.add_argument("--order", type=int)
    gen.add_argument("--prefix", type=int)
    gen.add_argument("--output")
    gen.add_argument("--format", choices=("ascii", "binary"), default="ascii")
    gen.set_defaults(func=_cmd_generate)

    exp = sub.add_parser("expand", help="expand a stream to the next alphabet")
    exp.add_argument("--base", type=int, required=True)
    exp.add_argument("--schedule", choices=("practical", "theorem"), default="practical")
    exp.add_argument("--input", help="source file; omitted: built-in champernowne stream")
    exp.add_argument("--prefix", type=int, help="cap on source symbols consumed")
    exp.add_argument("--orders", help="comma-separated stage orders (practical)")
    exp.add_argument("--max-stages", type=int, dest="max_stages")
    exp.add_argument("--scan-bound", type=int, dest="scan_bound", default=100_000_000)
    exp.add_argument("--epsilon-form", choices=("derived", "printed"), default="derived", dest="epsilon_form")
    exp.add_argument("--output")
    exp.add_argument("--telemetry", help="stage telemetry CSV path")
    exp.add_argument("--format", choices=("ascii", "binary"), default="ascii")
    exp.set_defaults(func=_cmd_expand)

    disc = sub.add_parser("discrepancy", help="exact block discrepancy of a stream file")
    disc.add_argument("--input", required=True)
    disc.add_argument("--base", type=int, required=True)
    disc.add_argument("--lengths", required=True, help="comma-separated block lengths")
    disc.add_argument("--prefix", help="comma-separated checkpoint prefix lengths")
    disc.add_argument("--output")
    disc.add_argument("--format", choices=("ascii", "binary"), default="ascii")
    disc.add_argument("--dense-cap", type=int, dest="dense_cap", default=DEFAULT_DENSE_CAP)
    disc.set_defaults(func=_cmd_discrepancy)

    ver = sub.add_parser("verify", help="run the brute-force oracle suite")
    ver.add_argument("--claim", default="all")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--trials", type=int)
    ver.add_argument("--base", type=int)
    ver.add_argument("--order", type=int)
    ver.add_argument("--budget", type=int, default=1 << 20)
    ver.add_argument("--output")
    ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScheduleError as err:
        detail = "" if err.best_delta is None else f" (best delta {err.best_delta} at length {err.best_length})"
        print(f"schedule error: {err}{detail}", file=sys.stderr)
        return 3
    except StreamTruncated as err:
        print(f"input ended early: {err}", file=sys.stderr)
        return 2
    except (ResourceLimitError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
