"""Seeded, portable randomness built on SplitMix64.

All randomness in this package flows through one primitive: the i-th
draw for a given seed is ``mix64(seed + (i + 1) * GAMMA)`` where
``mix64`` is the SplitMix64 finalizer (Steele, Lea & Flood's
SplittableRandom, as shipped in Java 8). Because the stream is a pure
function of (seed, index) it can be evaluated out of order and in
vectorized blocks, and it is reproducible from a one-paragraph
description in any language with 64-bit integers.
"""
from __future__ import annotations

import numpy as np

GAMMA = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a single 64-bit value."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def draw(seed: int, index: int) -> int:
    """The index-th 64-bit draw of the stream for ``seed``."""
    return mix64(seed + (index + 1) * GAMMA)


def draw_block(seed: int, start: int, count: int) -> np.ndarray:
    """Draws ``start .. start+count-1`` as a uint64 array (vectorized mix64)."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK) + idx * np.uint64(GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def uniform53_block(seed: int, start: int, count: int) -> np.ndarray:
    """Uniform floats in [0, 1) with 53-bit resolution, one per draw."""
    return (draw_block(seed, start, count) >> np.uint64(11)) * 2.0**-53


def permutation(n: int, seed: int) -> np.ndarray:
    """Deterministic pseudo-random permutation of 0..n-1.

    Ranks vertices by their draw value; stable argsort makes the result
    well defined even in the (astronomically unlikely) event of a
    collision.
    """
    if n == 0:
        return np.empty(0, dtype=np.int64)
    keys = draw_block(seed, 0, n)
    return np.argsort(keys, kind="stable").astype(np.int64)
