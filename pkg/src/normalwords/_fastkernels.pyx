# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting and expansion kernels.

Same interface as `_pykernels`; see that module for behavior notes.
"""


def count_blocks(const unsigned char[::1] data, Py_ssize_t usable, long long base,
                 Py_ssize_t block_len, long long[::1] counts, long long cmax,
                 long long touched):
    cdef Py_ssize_t off = 0, j
    cdef long long nb = 0, r, c
    while off + block_len <= usable:
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
        off += block_len
    return nb, cmax, touched


def sliding_counts(const unsigned char[::1] data, long long base, Py_ssize_t window,
                   long long[::1] counts):
    cdef Py_ssize_t n = data.shape[0]
    cdef Py_ssize_t j
    cdef long long r = 0, hi = 1
    if n < window:
        return
    for j in range(window):
        r = r * base + data[j]
    counts[r] += 1
    for j in range(window - 1):
        hi *= base
    for j in range(window, n):
        r = (r - data[j - window] * hi) * base + data[j]
        counts[r] += 1


def dense_extremes(const long long[::1] counts):
    cdef Py_ssize_t n = counts.shape[0]
    cdef Py_ssize_t i, imax = 0, imin = 0
    cdef long long cmax = counts[0], cmin = counts[0]
    for i in range(1, n):
        if counts[i] > cmax:
            cmax = counts[i]
            imax = i
        elif counts[i] < cmin:
            cmin = counts[i]
            imin = i
    return cmax, imax, cmin, imin


def fill_blocks(const unsigned char[::1] template, const long long[::1] stars,
                const unsigned char[::1] src, unsigned char[::1] out):
    cdef Py_ssize_t lh = template.shape[0]
    cdef Py_ssize_t ls = stars.shape[0]
    cdef Py_ssize_t nblocks = src.shape[0] // ls
    cdef Py_ssize_t k, j, ob, sb
    for k in range(nblocks):
        ob = k * lh
        for j in range(lh):
            out[ob + j] = template[j]
        sb = k * ls
        for j in range(ls):
            out[ob + stars[j]] = src[sb + j]
