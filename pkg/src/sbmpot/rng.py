"""Counter-based random streams for reproducible parallel simulation.

Every variate is a pure function of (seed, channel, step, path index), so a
path's stream never depends on batching, thread count, or evaluation order.
The block cipher is Philox4x32-10: the 128-bit counter is laid out as
(channel, step, path_lo, path_hi), the 64-bit key is the user seed, and one
invocation yields two 53-bit uniforms.

Channel map used by the samplers:

* 0: subordinator increment draws (Kanter pair, or the Poisson count),
* 1..7: Gaussian pairs for the continuous component (one pair per channel,
  enough for dimensions up to 14),
* 8 + 2k, 9 + 2k: size and direction draws of the k-th jump inside one
  skeleton step (compound mode, dimensions up to 3).
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtri

__all__ = [
    "CH_SUB",
    "CH_GAUSS",
    "CH_JUMP_BASE",
    "PhiloxStream",
]

CH_SUB = 0
CH_GAUSS = 1
CH_JUMP_BASE = 8

_M0 = np.uint64(0xD2511F53)
_M1 = np.uint64(0xCD9E8D57)
_W0 = np.uint64(0x9E3779B9)
_W1 = np.uint64(0xBB67AE85)
_U32 = np.uint64(32)
_MASK32 = np.uint64(0xFFFFFFFF)


def _round_keys(key_lo: int, key_hi: int) -> tuple[np.ndarray, np.ndarray]:
    j = np.arange(10, dtype=np.uint64)
    rk0 = ((np.uint64(key_lo) + j * _W0) & _MASK32).astype(np.uint32)
    rk1 = ((np.uint64(key_hi) + j * _W1) & _MASK32).astype(np.uint32)
    return rk0, rk1


def philox4x32(c0, c1, c2, c3, rk0, rk1):
    """Ten Philox rounds on uint32 counter lanes; returns the four lanes."""
    for j in range(10):
        p0 = _M0 * c0.astype(np.uint64)
        p1 = _M1 * c2.astype(np.uint64)
        c0, c1, c2, c3 = (
            (p1 >> _U32).astype(np.uint32) ^ c1 ^ rk0[j],
            p1.astype(np.uint32),
            (p0 >> _U32).astype(np.uint32) ^ c3 ^ rk1[j],
            p0.astype(np.uint32),
        )
    return c0, c1, c2, c3


class PhiloxStream:
    """Stateless generator addressed by (channel, step, path index)."""

    def __init__(self, seed: int):
        seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.seed = seed
        self._rk = _round_keys(seed & 0xFFFFFFFF, seed >> 32)

    def _block(self, channel: int, step: int, path_ids: np.ndarray):
        ids = np.asarray(path_ids, dtype=np.uint64)
        c0 = np.full(ids.shape, np.uint32(channel), dtype=np.uint32)
        c1 = np.full(ids.shape, np.uint32(step & 0xFFFFFFFF), dtype=np.uint32)
        c2 = ids.astype(np.uint32)
        c3 = (ids >> _U32).astype(np.uint32)
        return philox4x32(c0, c1, c2, c3, *self._rk)

    def uniform_pair(self, channel: int, step: int, path_ids) -> tuple[np.ndarray, np.ndarray]:
        """Two independent uniforms in (0,1) per path id.

        Each uniform packs two output lanes into 53 mantissa bits with a
        half-ulp offset, so 0 and 1 are unreachable and ndtri is safe.
        """
        a, b, c, d = self._block(channel, step, np.atleast_1d(path_ids))
        h1 = (a.astype(np.uint64) << _U32) | b.astype(np.uint64)
        h2 = (c.astype(np.uint64) << _U32) | d.astype(np.uint64)
        u0 = ((h1 >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
        u1 = ((h2 >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
        return u0, u1

    def normal_pair(self, channel: int, step: int, path_ids) -> tuple[np.ndarray, np.ndarray]:
        u0, u1 = self.uniform_pair(channel, step, path_ids)
        return ndtri(u0), ndtri(u1)

    def normals(self, step: int, path_ids, d: int, base_channel: int = CH_GAUSS) -> np.ndarray:
        """(n, d) standard normals from consecutive channels starting at base."""
        ids = np.atleast_1d(path_ids)
        out = np.empty((ids.shape[0], d))
        for j in range((d + 1) // 2):
            u0, u1 = self.uniform_pair(base_channel + j, step, ids)
            out[:, 2 * j] = ndtri(u0)
            if 2 * j + 1 < d:
                out[:, 2 * j + 1] = ndtri(u1)
        return out
