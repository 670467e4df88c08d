"""Brute-force oracles for the counting and discrepancy inequalities.

Every check works on exhaustive or seeded-random small instances with exact
rational comparisons; a report's violations list carries full witness data
so any failure can be replayed. Checks are deterministic given (trials,
seed). Independent checks may run in parallel; each report is assembled by
one caller.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from normalwords.counting import aligned_occurrences, discrepancy, occurrences
from normalwords.errors import ResourceLimitError
from normalwords.expander import lemma_constant
from normalwords.pattern import MASK_ALPHABET, STAR, champernowne_like, pattern_lengths
from normalwords.transforms import ExpansionContext, expand_bytes, expand_word
from normalwords.words import Alphabet, FiniteWord, lex_unrank, unrank_bytes

# Additive slack turning a measured discrepancy into a strict hypothesis bound.
DEFAULT_SLACK = Fraction(1, 10**6)

# Full enumeration budget for the counting-identity check (number of source
# words); the defaults admit (base, order) in {(2,1), (2,2), (3,1)}.
DEFAULT_ENUM_BUDGET = 1 << 20

_MAX_VIOLATIONS = 20


@dataclass
class OracleReport:
    """Outcome of one oracle run; passes iff violations is empty."""

    claim: str
    params: dict
    instances: int = 0
    skipped: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL({len(self.violations)})"
        params = ",".join(f"{k}={v}" for k, v in self.params.items())
        extra = f" skipped={self.skipped}" if self.skipped else ""
        return f"{self.claim}[{params}]: {status} instances={self.instances}{extra} ({self.elapsed:.2f}s)"


def _record(report: OracleReport, **witness) -> None:
    if len(report.violations) < _MAX_VIOLATIONS:
        report.violations.append({k: str(v) for k, v in witness.items()})
    else:
        report.violations[-1] = {"note": "further violations suppressed"}


def _random_blocks(rng: random.Random, base: int, block_len: int, max_blocks: int, min_blocks: int = 1) -> bytes:
    t = rng.randint(min_blocks, max_blocks)
    return bytes(rng.randrange(base) for _ in range(t * block_len))


def check_counting_identity(base: int, order: int, *, budget: int = DEFAULT_ENUM_BUDGET) -> OracleReport:
    """Exhaustive: summed aligned counts of every expanded-alphabet target
    over all expansions of one block equal base**wildcards exactly."""
    start = time.perf_counter()
    wild = pattern_lengths(order, base).wildcards
    total_words = base**wild
    if total_words > budget:
        raise ResourceLimitError(
            f"counting identity at base {base} order {order} needs {base}**{wild} words, budget {budget}"
        )
    report = OracleReport("counting-identity", {"base": base, "order": order})
    ctx = ExpansionContext(champernowne_like(order, base))
    expanded_base = base + 1
    n_targets = expanded_base**order
    totals = [0] * n_targets
    for rank in range(total_words):
        source = unrank_bytes(base, wild, rank)
        expanded = expand_bytes(ctx, source)
        for off in range(0, len(expanded), order):
            r = 0
            for j in range(off, off + order):
                r = r * expanded_base + expanded[j]
            totals[r] += 1
    report.instances = total_words
    expected = total_words
    for r, got in enumerate(totals):
        if got != expected:
            target = lex_unrank(Alphabet(expanded_base), order, r)
            _record(report, target=target, total=got, expected=expected)
    report.elapsed = time.perf_counter() - start
    return report


def check_main_lemma(
    base: int, order: int, trials: int, seed: int, *, slack: Fraction = DEFAULT_SLACK
) -> OracleReport:
    """Randomized: expanding a word multiplies its discrepancy bound by at
    most the order's amplification constant."""
    start = time.perf_counter()
    report = OracleReport("main-lemma", {"base": base, "order": order, "trials": trials, "seed": seed})
    rng = random.Random(seed)
    ctx = ExpansionContext(champernowne_like(order, base))
    wild = ctx.source_block_length
    c = lemma_constant(order, base)
    alphabet = Alphabet(base)
    for _ in range(trials):
        v = FiniteWord(alphabet, _random_blocks(rng, base, wild, 64))
        eps = discrepancy(v, wild).delta + slack
        expanded = expand_word(ctx, v)
        d = discrepancy(expanded, order).delta
        report.instances += 1
        if not d < c * eps:
            _record(report, v=v, delta=d, bound=c * eps)
    report.elapsed = time.perf_counter() - start
    return report


def check_length_halving(
    alphabet_size: int, m: int, n: int, trials: int, seed: int, *, slack: Fraction = DEFAULT_SLACK
) -> OracleReport:
    """Randomized: discrepancy at block length n is at most size**((m-1)n)
    times the (slack-adjusted) discrepancy at length m*n."""
    start = time.perf_counter()
    report = OracleReport(
        "length-halving", {"alphabet": alphabet_size, "m": m, "n": n, "trials": trials, "seed": seed}
    )
    rng = random.Random(seed)
    alphabet = Alphabet(alphabet_size)
    factor = alphabet_size ** ((m - 1) * n)
    for _ in range(trials):
        v = FiniteWord(alphabet, _random_blocks(rng, alphabet_size, m * n, 32))
        eps = discrepancy(v, m * n).delta + slack
        d = discrepancy(v, n).delta
        report.instances += 1
        if not d < factor * eps:
            _record(report, v=v, delta=d, bound=factor * eps)
    report.elapsed = time.perf_counter() - start
    return report


def check_suffix_discrepancy(
    trials: int, seed: int, *, alphabet_size: int = 2, n: int = 2, slack: Fraction = DEFAULT_SLACK
) -> OracleReport:
    """Randomized: a suffix inherits discrepancy from the whole and the
    prefix, scaled by (|uv|+|u|)/|v|."""
    start = time.perf_counter()
    report = OracleReport(
        "suffix-discrepancy", {"alphabet": alphabet_size, "n": n, "trials": trials, "seed": seed}
    )
    rng = random.Random(seed)
    alphabet = Alphabet(alphabet_size)
    for _ in range(trials):
        u = FiniteWord(alphabet, _random_blocks(rng, alphabet_size, n, 32))
        v = FiniteWord(alphabet, _random_blocks(rng, alphabet_size, n, 32))
        uv = u + v
        eps = max(discrepancy(u, n).delta, discrepancy(uv, n).delta) + slack
        bound = Fraction(len(uv) + len(u), len(v)) * eps
        d = discrepancy(v, n).delta
        report.instances += 1
        if not d < bound:
            _record(report, u=u, v=v, delta=d, bound=bound)
    report.elapsed = time.perf_counter() - start
    return report


def check_concat_discrepancy(
    trials: int, seed: int, *, alphabet_size: int = 2, n: int = 1, slack: Fraction = DEFAULT_SLACK
) -> OracleReport:
    """Randomized, hypothesis-conditioned: when the prefix bound and the
    scaled suffix bound both hold, the concatenation stays within 3x.

    Samples until `trials` admissible instances are found; inadmissible draws
    are counted as skipped.
    """
    start = time.perf_counter()
    report = OracleReport(
        "concat-discrepancy", {"alphabet": alphabet_size, "n": n, "trials": trials, "seed": seed}
    )
    rng = random.Random(seed)
    alphabet = Alphabet(alphabet_size)
    attempts = 0
    max_attempts = 100 * trials
    while report.instances < trials:
        attempts += 1
        if attempts > max_attempts:
            raise ResourceLimitError(f"could not find {trials} admissible instances in {max_attempts} draws")
        u = FiniteWord(alphabet, _random_blocks(rng, alphabet_size, n, 32))
        v = FiniteWord(alphabet, _random_blocks(rng, alphabet_size, n, 32))
        uv = u + v
        eps = discrepancy(u, n).delta + slack
        suffix_bound = Fraction(len(uv) + len(u), len(v)) * eps
        if not discrepancy(v, n).delta < suffix_bound:
            report.skipped += 1
            continue
        d = discrepancy(uv, n).delta
        report.instances += 1
        if not d < 3 * eps:
            _record(report, u=u, v=v, delta=d, bound=3 * eps)
    report.elapsed = time.perf_counter() - start
    return report


def check_unaligned_bound(
    trials: int, seed: int, *, alphabet_size: int = 2, max_n: int = 4, slack: Fraction = DEFAULT_SLACK
) -> OracleReport:
    """Randomized: sliding occurrences of every shorter block are bounded via
    the aligned discrepancy of the host word."""
    start = time.perf_counter()
    report = OracleReport(
        "unaligned-bound", {"alphabet": alphabet_size, "max_n": max_n, "trials": trials, "seed": seed}
    )
    rng = random.Random(seed)
    alphabet = Alphabet(alphabet_size)
    for _ in range(trials):
        n = rng.randint(2, max_n)
        u = FiniteWord(alphabet, _random_blocks(rng, alphabet_size, n, 32))
        eps = discrepancy(u, n).delta + slack
        for m in range(1, n):
            base_term = Fraction(m - 1, n) + Fraction(1, alphabet_size**m) + alphabet_size**n * eps
            bound = len(u) * base_term - (m - 1)
            for rank in range(alphabet_size**m):
                v = lex_unrank(alphabet, m, rank)
                occ = occurrences(u, v)
                report.instances += 1
                if not Fraction(occ) < bound:
                    _record(report, u=u, v=v, occ=occ, bound=bound)
    report.elapsed = time.perf_counter() - start
    return report


def check_concat_occurrence_bound(trials: int, seed: int) -> OracleReport:
    """Randomized: occurrences across a concatenation exceed the two parts by
    at most |pattern|-1 boundary hits."""
    start = time.perf_counter()
    report = OracleReport("concat-occurrence", {"trials": trials, "seed": seed})
    rng = random.Random(seed)
    for _ in range(trials):
        base = rng.choice((2, 3))
        alphabet = Alphabet(base)
        u = FiniteWord(alphabet, bytes(rng.randrange(base) for _ in range(rng.randint(0, 12))))
        v = FiniteWord(alphabet, bytes(rng.randrange(base) for _ in range(rng.randint(0, 12))))
        w = FiniteWord(alphabet, bytes(rng.randrange(base) for _ in range(rng.randint(1, 4))))
        lhs = occurrences(u + v, w)
        rhs = occurrences(u, w) + occurrences(v, w) + len(w) - 1
        report.instances += 1
        if lhs > rhs:
            _record(report, u=u, v=v, w=w, lhs=lhs, rhs=rhs)
    report.elapsed = time.perf_counter() - start
    return report


def check_window_counts(*, bases: tuple[int, ...] = (2, 3), max_length: int = 8) -> OracleReport:
    """Exhaustive: over all words of length m, each fixed window position
    holds a given block exactly size**(m-n) times."""
    start = time.perf_counter()
    report = OracleReport("window-counts", {"bases": ",".join(map(str, bases)), "max_length": max_length})
    for k in bases:
        for m in range(2, max_length + 1):
            # acc[(n, i)][rank] built in one enumeration pass per m
            acc = {
                (n, i): [0] * k**n
                for n in range(1, m)
                for i in range(0, m - n + 1)
            }
            current = bytearray(m)
            for _ in range(k**m):
                for (n, i), counts in acc.items():
                    r = 0
                    for j in range(i, i + n):
                        r = r * k + current[j]
                    counts[r] += 1
                idx = m - 1
                while idx >= 0:
                    if current[idx] == k - 1:
                        current[idx] = 0
                        idx -= 1
                    else:
                        current[idx] += 1
                        break
            for (n, i), counts in acc.items():
                expected = k ** (m - n)
                for rank, got in enumerate(counts):
                    report.instances += 1
                    if got != expected:
                        _record(
                            report, base=k, m=m, n=n, offset=i,
                            block=lex_unrank(Alphabet(k), n, rank), total=got, expected=expected,
                        )
    report.elapsed = time.perf_counter() - start
    return report


def check_pattern_mask_counts(*, bases: tuple[int, ...] = (2, 3), max_order: int = 4) -> OracleReport:
    """Exhaustive: in a pattern's mask, each length-n mask block appears
    aligned exactly base**(its wildcard count) times."""
    start = time.perf_counter()
    report = OracleReport(
        "pattern-mask-counts", {"bases": ",".join(map(str, bases)), "max_order": max_order}
    )
    for b in bases:
        for order in range(1, max_order + 1):
            mask = champernowne_like(order, b).mask
            for rank in range(2**order):
                v = lex_unrank(MASK_ALPHABET, order, rank)
                expected = b ** v.data.count(STAR)
                got = aligned_occurrences(mask, v)
                report.instances += 1
                if got != expected:
                    _record(report, base=b, order=order, mask_block=v, total=got, expected=expected)
    report.elapsed = time.perf_counter() - start
    return report
