"""Deterministic random streams shared by every stochastic routine.

The generator is SplitMix64: a 64-bit counter advanced by a fixed odd
constant, with outputs produced by an avalanching finalizer.  Because it is
counter-based, independent substreams are cheap: ``Stream(seed, k)`` for
distinct ``k`` gives statistically independent sequences, which is how the
sampler (one substream per source vertex) and the walk runners (one per
walk) parallelize without coordination.

The compiled kernels implement the identical algorithm, including the
Poisson and geometric samplers below, so a given (seed, substream) pair
yields bit-identical draws on either backend.
"""

from __future__ import annotations

import struct
from math import exp, floor, log, log1p, sqrt

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_SEED_MULT = 0xC2B2AE3D27D4EB4F
_SEED_OFFSET = 0x165667B19E3779F9
_CHAIN_INIT = 0x51DC42F1D5F4D688

_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53

_COUNT_CLAMP = 1 << 62  # overflow guard for astronomically large draws

_LS2PI = 0.9189385332046727  # log(sqrt(2*pi))

# log(k!) for k < 126, built by cumulative summation (both backends build
# the same table with the same operation order).
_LOGFACT = [0.0] * 126
_acc = 0.0
for _k in range(1, 126):
    _acc += log(float(_k))
    _LOGFACT[_k] = _acc
del _acc, _k


def mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanche a 64-bit word."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def stream_state(seed: int, sub: int) -> int:
    """Initial counter of substream ``sub`` of ``seed``."""
    return mix64((seed * _SEED_MULT + sub * _GOLDEN + _SEED_OFFSET) & _MASK)


def derive_seed(*words: int) -> int:
    """Fold integer words into one 64-bit seed (order-sensitive).

    Used to give every sweep point its own seed as a pure function of
    (base seed, parameter bits, replicate index), so a sweep stays
    reproducible however its grid is partitioned across workers.
    """
    acc = _CHAIN_INIT
    for w in words:
        acc = mix64(((acc ^ (w & _MASK)) * _SEED_MULT + _GOLDEN) & _MASK)
    return acc


def double_bits(x: float) -> int:
    """IEEE-754 bit pattern of a double, as an unsigned 64-bit int."""
    return struct.unpack("<Q", struct.pack("<d", float(x)))[0]


def log_factorial(k: int) -> float:
    """log(k!): exact table below 126, Stirling series above (err < 1e-13)."""
    if k < 126:
        return _LOGFACT[k]
    x = k + 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    return (
        (x - 0.5) * log(x)
        - x
        + _LS2PI
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0)))
    )


class Stream:
    """One SplitMix64 substream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int, sub: int = 0):
        self._state = stream_state(seed, sub)

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def uniform(self) -> float:
        """Uniform double in (0, 1]."""
        return ((self.next_u64() >> 11) + 1) * _INV_2_53

    def geometric_skip(self, p: float) -> int:
        """Number of failures before the first success of Bernoulli(p) trials."""
        if p >= 1.0:
            return 0
        u = self.uniform()
        r = log(u) / log1p(-p)
        if r >= 9.0e18:
            return _COUNT_CLAMP
        return floor(r)

    def poisson(self, lam: float) -> int:
        """Exact Poisson draw: inversion below mean 10, PTRS rejection above.

        PTRS is Hormann's transformed rejection with squeeze; it needs
        log(k!), supplied by ``log_factorial``.  No normal approximation
        anywhere, so the tail is faithful.
        """
        if lam <= 0.0:
            return 0
        if lam < 10.0:
            limit = exp(-lam)
            k = 0
            prod = self.uniform()
            while prod > limit:
                k += 1
                prod *= self.uniform()
            return k
        if lam >= 4.0e18:
            return _COUNT_CLAMP
        slam = sqrt(lam)
        loglam = log(lam)
        b = 0.931 + 2.53 * slam
        a = -0.059 + 0.02483 * b
        invalpha = 1.1239 + 1.1328 / (b - 3.4)
        vr = 0.9277 - 3.6224 / (b - 2.0)
        while True:
            u = self.uniform() - 0.5
            v = self.uniform()
            us = 0.5 - abs(u)
            if us < 1e-15:
                continue
            kf = floor((2.0 * a / us + b) * u + lam + 0.43)
            if us >= 0.07 and v <= vr:
                return kf
            if kf < 0 or (us < 0.013 and v > us):
                continue
            if log(v) + log(invalpha) - log(a / (us * us) + b) <= (
                kf * loglam - lam - log_factorial(kf)
            ):
                return kf
