#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each kernel on identical inputs sized like the end-to-end expansion
workload (millions of symbols) and prints per-kernel timings plus speedup.

Usage: python3 benchmarks/bench_kernels.py [--symbols N] [--repeat R]
"""

from __future__ import annotations

import argparse
import random
import time
from array import array

from normalwords import _pykernels
from normalwords.pattern import champernowne_like

try:
    from normalwords import _fastkernels
except ImportError:
    _fastkernels = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases(symbols: int):
    rng = random.Random(0)
    data2 = bytes(rng.randrange(2) for _ in range(symbols))
    data3 = bytes(rng.randrange(3) for _ in range(symbols))
    pw = champernowne_like(2, 2)
    src = bytes(rng.randrange(2) for _ in range(symbols - symbols % pw.wildcard_count))

    def count_blocks(mod):
        counts = array("q", bytes(8 * 2**12))
        usable = (len(data2) // 12) * 12
        mod.count_blocks(data2, usable, 2, 12, counts, 0, 0)

    def count_symbols(mod):
        counts = array("q", bytes(8 * 3))
        mod.count_blocks(data3, len(data3), 3, 1, counts, 0, 0)

    def sliding(mod):
        counts = array("q", bytes(8 * 27))
        mod.sliding_counts(data3, 3, 3, counts)

    def fill(mod):
        out = bytearray(len(src) // pw.wildcard_count * pw.length)
        mod.fill_blocks(pw.word.data, pw.star_offsets, src, out)

    def extremes(mod):
        counts = array("q", bytes(8 * 2**20))
        counts[12345] = 7
        mod.dense_extremes(counts)

    return [
        ("count_blocks len=12", count_blocks),
        ("count_blocks len=1", count_symbols),
        ("sliding_counts win=3", sliding),
        ("fill_blocks order=2", fill),
        ("dense_extremes 2^20", extremes),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--symbols", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"workload: {args.symbols} symbols, best of {args.repeat}")
    print(f"{'kernel':24} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>9}")
    for name, case in _cases(args.symbols):
        pure = _time(lambda: case(_pykernels), args.repeat)
        if _fastkernels is None:
            print(f"{name:24} {pure:10.4f} {'n/a':>13} {'n/a':>9}")
            continue
        fast = _time(lambda: case(_fastkernels), args.repeat)
        ratio = pure / fast if fast > 0 else float("inf")
        print(f"{name:24} {pure:10.4f} {fast:13.4f} {ratio:8.1f}x")
    if _fastkernels is None:
        print("compiled backend not built; showing fallback only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
