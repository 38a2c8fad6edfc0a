"""Seed-stream derivation.

Every stochastic routine in the package owns a small integer stream id and
derives its generator as ``generator(seed, stream_id)``.  Mixing the user
seed with the stream id through a 64-bit finalizer keeps distinct routines
decorrelated while staying deterministic for a fixed (seed, stream) pair.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

# Stream ids, one per stochastic routine.
STREAM_ER = 1
STREAM_BA = 2
STREAM_ISING = 3
STREAM_SIS = 4
STREAM_VOTER = 5
STREAM_WALKER = 6
STREAM_KURAMOTO = 7
STREAM_DIFFUSION = 8


def _finalize(x: int) -> int:
    # splitmix64 output function
    x &= _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def substream_seed(seed: int, stream: int) -> int:
    """Mix a user seed with a stream id into a derived 64-bit seed."""
    return _finalize((int(seed) + (int(stream) + 1) * _GOLDEN) & _MASK)


def generator(seed: int, stream: int) -> np.random.Generator:
    """Return the deterministic generator for (seed, stream)."""
    return np.random.default_rng(substream_seed(seed, stream))
