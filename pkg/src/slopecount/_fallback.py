"""numpy implementations of the point-counting loops in ``_kernels.pyx``.

Same signatures and results; work is done in blocks, and within a block the
points still alive are compacted after every wheel so that the first nonzero
polynomial ends a point's evaluation.
"""

from __future__ import annotations

import numpy as np

BLOCK = 1 << 18


def _digits(codes: np.ndarray, q: int, d: int) -> np.ndarray:
    codes = codes.astype(np.int64, copy=True)
    dig = np.empty((codes.shape[0], d), dtype=np.int64)
    for s in range(d - 1, -1, -1):
        dig[:, s] = codes % q
        codes //= q
    return dig


def _zero_mask(dig: np.ndarray, q: int, radius, cw, ccw, ks) -> np.ndarray:
    alive = np.arange(dig.shape[0])
    for w in range(len(ks)):
        if alive.size == 0:
            break
        k = int(ks[w])
        t1 = np.ones(alive.size, dtype=np.int64)
        t2 = np.ones(alive.size, dtype=np.int64)
        for i in range(k):
            r = dig[alive, radius[w, i]]
            t1 = t1 * (r - dig[alive, cw[w, i]]) % q
            t2 = t2 * (r - dig[alive, ccw[w, i]]) % q
        alive = alive[t1 == t2]
    flags = np.zeros(dig.shape[0], dtype=bool)
    flags[alive] = True
    return flags


def count_wheel_zeros(q, d, radius, cw, ccw, ks, start, stop):
    radius, cw, ccw, ks = map(np.asarray, (radius, cw, ccw, ks))
    count = 0
    for lo in range(start, stop, BLOCK):
        hi = min(lo + BLOCK, stop)
        dig = _digits(np.arange(lo, hi, dtype=np.int64), q, d)
        count += int(_zero_mask(dig, q, radius, cw, ccw, ks).sum())
    return count


def wheel_zero_flags(q, d, radius, cw, ccw, ks, codes):
    radius, cw, ccw, ks = map(np.asarray, (radius, cw, ccw, ks))
    codes = np.asarray(codes, dtype=np.int64)
    out = np.zeros(codes.shape[0], dtype=np.uint8)
    for lo in range(0, codes.shape[0], BLOCK):
        dig = _digits(codes[lo:lo + BLOCK], q, d)
        out[lo:lo + BLOCK] = _zero_mask(dig, q, radius, cw, ccw, ks)
    return out


def _p4_free_mask(masks: np.ndarray, subsets: np.ndarray, table: np.ndarray) -> np.ndarray:
    alive = masks
    keep = np.arange(masks.shape[0])
    for u in range(subsets.shape[0]):
        if keep.size == 0:
            break
        local = np.zeros(alive.size, dtype=np.int64)
        for b in range(6):
            local |= ((alive >> np.uint64(subsets[u, b])) & np.uint64(1)).astype(np.int64) << b
        ok = table[local] == 0
        alive, keep = alive[ok], keep[ok]
    flags = np.zeros(masks.shape[0], dtype=bool)
    flags[keep] = True
    return flags


def count_p4_free(subsets, table, start, stop):
    subsets, table = np.asarray(subsets), np.asarray(table)
    count = 0
    for lo in range(start, stop, BLOCK):
        hi = min(lo + BLOCK, stop)
        masks = np.arange(lo, hi, dtype=np.uint64)
        count += int(_p4_free_mask(masks, subsets, table).sum())
    return count


def p4_free_flags(subsets, table, masks):
    subsets, table = np.asarray(subsets), np.asarray(table)
    masks = np.asarray(masks, dtype=np.uint64)
    return _p4_free_mask(masks, subsets, table).astype(np.uint8)
