# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled point-counting loops.

Point codes are base-q integers whose most significant digit is edge slot 0.
Wheel tables are int32 arrays of shape (wheels, kmax) holding slot indices of
radii and clockwise / counterclockwise chords, with the spoke count per wheel
in ``ks``.
"""

import numpy as np

from libc.stdlib cimport malloc, free


cdef inline bint _is_zero(const int* dig, int q, const int[:, ::1] radius,
                          const int[:, ::1] cw, const int[:, ::1] ccw,
                          const int[::1] ks) noexcept nogil:
    cdef Py_ssize_t w, i
    cdef int k, f
    cdef long t1, t2
    for w in range(ks.shape[0]):
        k = ks[w]
        t1 = 1
        for i in range(k):
            f = dig[radius[w, i]] - dig[cw[w, i]]
            if f == 0:
                t1 = 0
                break
            t1 = (t1 * f) % q
        t2 = 1
        for i in range(k):
            f = dig[radius[w, i]] - dig[ccw[w, i]]
            if f == 0:
                t2 = 0
                break
            t2 = (t2 * f) % q
        if (t1 - t2) % q != 0:
            return False
    return True


cdef inline void _decode(long long code, int q, int d, int* dig) noexcept nogil:
    cdef int s
    for s in range(d - 1, -1, -1):
        dig[s] = <int>(code % q)
        code //= q


cdef inline void _advance(int q, int d, int* dig) noexcept nogil:
    cdef int s = d - 1
    while s >= 0:
        dig[s] += 1
        if dig[s] < q:
            return
        dig[s] = 0
        s -= 1


def count_wheel_zeros(int q, int d, const int[:, ::1] radius, const int[:, ::1] cw,
                      const int[:, ::1] ccw, const int[::1] ks,
                      long long start, long long stop):
    """Number of codes in [start, stop) at which every wheel polynomial vanishes."""
    cdef long long code, count = 0
    cdef int* dig = <int*>malloc(max(d, 1) * sizeof(int))
    if dig == NULL:
        raise MemoryError()
    try:
        with nogil:
            _decode(start, q, d, dig)
            for code in range(start, stop):
                if _is_zero(dig, q, radius, cw, ccw, ks):
                    count += 1
                _advance(q, d, dig)
    finally:
        free(dig)
    return count


def wheel_zero_flags(int q, int d, const int[:, ::1] radius, const int[:, ::1] cw,
                     const int[:, ::1] ccw, const int[::1] ks,
                     const long long[::1] codes):
    """uint8 array: 1 where the point with that code is a common zero."""
    out = np.zeros(codes.shape[0], dtype=np.uint8)
    cdef unsigned char[::1] res = out
    cdef Py_ssize_t t
    cdef int* dig = <int*>malloc(max(d, 1) * sizeof(int))
    if dig == NULL:
        raise MemoryError()
    try:
        with nogil:
            for t in range(codes.shape[0]):
                _decode(codes[t], q, d, dig)
                res[t] = _is_zero(dig, q, radius, cw, ccw, ks)
    finally:
        free(dig)
    return out


cdef inline bint _p4_free(unsigned long long mask, const int[:, ::1] subsets,
                          const unsigned char[::1] table) noexcept nogil:
    cdef Py_ssize_t u
    cdef int b, local
    for u in range(subsets.shape[0]):
        local = 0
        for b in range(6):
            local |= <int>((mask >> subsets[u, b]) & 1) << b
        if table[local]:
            return False
    return True


def count_p4_free(const int[:, ::1] subsets, const unsigned char[::1] table,
                  unsigned long long start, unsigned long long stop):
    """Number of graph masks in [start, stop) with no 4-subset matching ``table``."""
    cdef unsigned long long mask
    cdef long long count = 0
    with nogil:
        for mask in range(start, stop):
            if _p4_free(mask, subsets, table):
                count += 1
    return count


def p4_free_flags(const int[:, ::1] subsets, const unsigned char[::1] table,
                  const unsigned long long[::1] masks):
    out = np.zeros(masks.shape[0], dtype=np.uint8)
    cdef unsigned char[::1] res = out
    cdef Py_ssize_t t
    with nogil:
        for t in range(masks.shape[0]):
            res[t] = _p4_free(masks[t], subsets, table)
    return out
