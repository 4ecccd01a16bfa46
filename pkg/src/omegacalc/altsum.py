"""Signed counting of chains inside a marked subposet of the boolean lattice.

For a predicate `good` on the proper nonempty subsets of [n], computes

    sum over chains 0 = T_0 < T_1 < ... < T_j < full, all T_i good,
    of (-1)^j

which both set-indexed summation engines and the pointwise identity
checker need.  The recursion v(T) = -1 - sum of v over good proper
subsets of T is evaluated level by level with a subset-sum (zeta)
transform, so the whole computation is O(n^2 2^n) array work.

Values are bounded by the number of chains in the boolean lattice, which
for n <= 12 fits comfortably in int64.
"""

from __future__ import annotations

import numpy as np

_POPCOUNT_CACHE: dict[int, np.ndarray] = {}


def _popcounts(n: int) -> np.ndarray:
    cached = _POPCOUNT_CACHE.get(n)
    if cached is None:
        masks = np.arange(1 << n, dtype=np.uint32)
        cached = np.zeros(1 << n, dtype=np.int8)
        while masks.any():
            cached += (masks & 1).astype(np.int8)
            masks >>= 1
        _POPCOUNT_CACHE[n] = cached
    return cached


def alternating_chain_sum(n: int, good: np.ndarray) -> int:
    """`good` is a boolean array of length 2^n; entries at 0 and at the
    full mask are ignored (chain endpoints are fixed, not marked)."""
    if n > 12:
        raise ValueError("alternating_chain_sum is capped at n = 12")
    size = 1 << n
    full = size - 1
    good = good.copy()
    good[0] = False
    good[full] = False
    if not good.any():
        return 1
    pc = _popcounts(n)
    v = np.zeros(size, dtype=np.int64)
    shape = (2,) * n
    for level in range(1, n):
        marked = good & (pc == level)
        if not marked.any():
            continue
        zeta = v.copy().reshape(shape)
        for axis in range(n):
            lo = [slice(None)] * n
            hi = [slice(None)] * n
            lo[axis] = 0
            hi[axis] = 1
            zeta[tuple(hi)] += zeta[tuple(lo)]
        zeta = zeta.reshape(size)
        v[marked] = -1 - zeta[marked]
    return 1 + int(v.sum())
