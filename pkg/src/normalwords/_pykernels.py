"""Pure-Python counting and expansion kernels.

Fallback backend; the compiled module `_fastkernels` implements the same
interface. Symbols are raw byte values, counts are 64-bit ('q') arrays.
"""

from __future__ import annotations


def count_blocks(data, usable, base, block_len, counts, cmax, touched):
    """Tally the lex rank of each aligned block in data[:usable].

    `usable` must be a multiple of `block_len`. Returns the updated
    (nblocks, cmax, touched) where `touched` counts table entries that have
    become nonzero.
    """
    nb = 0
    if block_len == 1:
        for off in range(usable):
            c = counts[data[off]] + 1
            counts[data[off]] = c
            if c == 1:
                touched += 1
            if c > cmax:
                cmax = c
        nb = usable
    else:
        for off in range(0, usable, block_len):
            r = 0
            for j in range(off, off + block_len):
                r = r * base + data[j]
            c = counts[r] + 1
            counts[r] = c
            if c == 1:
                touched += 1
            if c > cmax:
                cmax = c
            nb += 1
    return nb, cmax, touched


def sliding_counts(data, base, window, counts):
    """Tally the lex rank of every length-`window` substring of `data`."""
    n = len(data)
    if n < window:
        return
    r = 0
    for j in range(window):
        r = r * base + data[j]
    counts[r] += 1
    hi = base ** (window - 1)
    for j in range(window, n):
        r = (r - data[j - window] * hi) * base + data[j]
        counts[r] += 1


def dense_extremes(counts):
    """Return (cmax, first index of cmax, cmin, first index of cmin)."""
    cmax = max(counts)
    cmin = min(counts)
    return cmax, counts.index(cmax), cmin, counts.index(cmin)


def fill_blocks(template, stars, src, out):
    """Expand consecutive source blocks into `out`.

    Each block of len(stars) source symbols becomes one copy of `template`
    with the symbols written at the `stars` offsets, in order. len(src) must
    be a multiple of len(stars) and len(out) the matching multiple of
    len(template).
    """
    lh = len(template)
    ls = len(stars)
    for k in range(len(src) // ls):
        ob = k * lh
        out[ob : ob + lh] = template
        sb = k * ls
        for j in range(ls):
            out[ob + stars[j]] = src[sb + j]
