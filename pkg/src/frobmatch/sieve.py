"""Segmented prime sieve over numpy boolean blocks."""

import math

import numpy as np

DEFAULT_BLOCK = 1 << 20


def simple_sieve(limit):
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if is_p[q]:
            is_p[q * q :: q] = False
    return np.flatnonzero(is_p).astype(np.int64)


def sieve_blocks(lo, hi, block=DEFAULT_BLOCK):
    """Yield int64 arrays of the primes in [lo, hi], one block at a time."""
    lo = max(lo, 2)
    if hi < lo:
        return
    base = simple_sieve(math.isqrt(hi))
    start = lo
    while start <= hi:
        stop = min(start + block - 1, hi)
        mask = np.ones(stop - start + 1, dtype=bool)
        if start <= 1:
            mask[: 2 - start] = False
        for q in base:
            q = int(q)
            first = max(q * q, (start + q - 1) // q * q)
            if first > stop:
                continue
            mask[first - start :: q] = False
        yield (np.flatnonzero(mask) + start).astype(np.int64)
        start = stop + 1


def primes_in_range(lo, hi, block=DEFAULT_BLOCK):
    parts = list(sieve_blocks(lo, hi, block))
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts)
