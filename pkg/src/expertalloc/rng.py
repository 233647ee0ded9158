"""Counter-based deterministic random sampling.

Samples are a pure function of ``(key, counter)``: position ``c`` of a stream
always yields the same value, no matter how many threads consume the stream or
in what order blocks are drawn. This is what makes Monte-Carlo profiling
reproducible under any parallel schedule. Streams are plain immutable values;
drawing returns the samples together with an advanced stream instead of
mutating shared state.

The generator is a splitmix64-style avalanche hash of the counter, seeded by
the key. Standard-normal variates use the Box-Muller transform, two uniforms
per pair of normals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB
_KEY_INIT = 0x243F6A8885A308D3

# one uniform in [0, 1) from the top 53 bits of a word
_U53 = 2.0**-53


def _mix64(z: int) -> int:
    """Scalar splitmix64 finalizer (python ints, 64-bit wrapping)."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX_A) & _MASK
    z = ((z ^ (z >> 27)) * _MIX_B) & _MASK
    return z ^ (z >> 31)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    """Vectorized splitmix64 finalizer over a uint64 array."""
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_A)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_B)
    return z ^ (z >> np.uint64(31))


def derive_key(*components: int) -> int:
    """Fold integer components into a well-mixed 64-bit stream key.

    Order-sensitive, so ``derive_key(seed, layer, iteration)`` gives every
    (layer, iteration) cell its own statistically independent stream.
    """
    key = _KEY_INIT
    for c in components:
        key = _mix64(key ^ _mix64((int(c) + _GOLDEN) & _MASK))
    return key


@dataclass(frozen=True)
class RngStream:
    """Position-addressable random stream: a key plus a counter offset."""

    key: int
    counter: int = 0

    def advanced(self, n: int) -> "RngStream":
        """Stream pointing ``n`` positions further along."""
        if n < 0:
            raise ValueError(f"cannot advance by negative count {n}")
        return replace(self, counter=(self.counter + n) & _MASK)


def _words(stream: RngStream, n: int) -> np.ndarray:
    """``n`` raw 64-bit words at consecutive counter positions."""
    base = np.uint64((_mix64(stream.key) + ((stream.counter * _GOLDEN) & _MASK)) & _MASK)
    steps = np.arange(n, dtype=np.uint64) * np.uint64(_GOLDEN)
    return _mix64_array(base + steps)


def uniform(stream: RngStream, n: int) -> tuple[np.ndarray, RngStream]:
    """``n`` uniforms in [0, 1), one counter position each."""
    if n < 1:
        raise ValueError(f"sample count must be positive, got {n}")
    u = (_words(stream, n) >> np.uint64(11)).astype(np.float64) * _U53
    return u, stream.advanced(n)


def integers(stream: RngStream, upper: int, n: int) -> tuple[np.ndarray, RngStream]:
    """``n`` integers uniform on [0, upper), one counter position each.

    Uses the floor-of-scaled-uniform method; its modulo bias is below 2**-53
    per draw, irrelevant at the ranges used here.
    """
    if upper < 1:
        raise ValueError(f"upper bound must be positive, got {upper}")
    u, out = uniform(stream, n)
    return (u * upper).astype(np.int64), out


def standard_normal(
    stream: RngStream, shape: tuple[int, ...] | int
) -> tuple[np.ndarray, RngStream]:
    """I.i.d. standard-normal tensor of the given shape (float32).

    Each pair of outputs consumes two counter positions (two uniforms through
    Box-Muller), so position ``c`` of a stream always yields the same values
    regardless of how preceding samples were blocked or threaded.
    """
    if isinstance(shape, int):
        shape = (shape,)
    if len(shape) == 0 or any(int(d) < 1 for d in shape):
        raise ValueError(f"shape must have positive dims, got {shape}")
    n = int(np.prod([int(d) for d in shape]))
    n_pairs = (n + 1) // 2
    words = _words(stream, 2 * n_pairs)
    u1 = ((words[0::2] >> np.uint64(11)).astype(np.float64) + 1.0) * _U53  # (0, 1]
    u2 = (words[1::2] >> np.uint64(11)).astype(np.float64) * _U53  # [0, 1)
    radius = np.sqrt(-2.0 * np.log(u1))
    theta = (2.0 * math.pi) * u2
    pairs = np.empty(2 * n_pairs, dtype=np.float64)
    pairs[0::2] = radius * np.cos(theta)
    pairs[1::2] = radius * np.sin(theta)
    samples = pairs[:n].astype(np.float32).reshape(shape)
    return samples, stream.advanced(2 * n_pairs)
