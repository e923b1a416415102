"""SplitMix64 pseudo-random numbers.

The generator is the standard SplitMix64 of Steele, Lea and Flood: the
state advances by the golden-ratio increment ``0x9E3779B97F4A7C15`` and each
output is the state passed through a fixed 64-bit finalizer. Doubles take
the top 53 bits. Everything is exact integer arithmetic, so a seed gives the
same stream on every platform.

Substreams: trial ``k`` of a run seeded with ``s`` uses
``s XOR (k * 0x9E3779B97F4A7C15 mod 2**64)``. A trial's stream depends only on
``(s, k)``, which is why parallel and serial runs produce identical output.
"""

import zlib

import numpy as np

from . import kernels

GOLDEN = 0x9E3779B97F4A7C15
MASK64 = (1 << 64) - 1


def mix64(z):
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def substream(seed, k):
    """Seed of substream ``k``: ``seed ^ (k * GOLDEN)`` modulo 2**64."""
    return (int(seed) ^ ((int(k) * GOLDEN) & MASK64)) & MASK64


def keyed_seed(seed, *keys):
    """Fold string/int keys into a seed (stable across runs and platforms)."""
    s = int(seed) & MASK64
    for key in keys:
        h = zlib.crc32(str(key).encode("utf-8"))
        s = mix64(s ^ h)
    return s


class SplitMix64:
    """Scalar SplitMix64 stream; the bulk path is :func:`uniforms`."""

    def __init__(self, seed):
        self.state = int(seed) & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def random(self):
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def uniform(self, lo, hi, size=None):
        if size is None:
            return lo + (hi - lo) * self.random()
        return np.array([lo + (hi - lo) * self.random() for _ in range(size)])

    def integers(self, lo, hi):
        """Integer in ``[lo, hi)`` (rejection-free multiply-shift; bias < 2**-32)."""
        span = hi - lo
        if span <= 0:
            raise ValueError("empty range")
        return lo + ((self.next_u64() >> 32) * span >> 32)

    def choice(self, seq):
        return seq[self.integers(0, len(seq))]


def uniforms(seed, n):
    """``n`` doubles in [0, 1); identical to ``n`` calls of ``SplitMix64(seed).random()``."""
    return kernels.splitmix64_uniforms(int(seed) & MASK64, int(n))
