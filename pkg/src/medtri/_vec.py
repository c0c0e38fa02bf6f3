"""Vectorized exact integer square roots over int64 arrays."""

import numpy as np

_ROOT_MAX = 3037000499  # isqrt(2**63 - 1); squares of anything larger overflow int64


def isqrt_array(q):
    """Elementwise floor square root of a nonnegative int64 array.

    The float64 estimate can be off by a few units once ``q`` exceeds
    2**52, so it is corrected in integer arithmetic until exact.
    """
    q = np.asarray(q, dtype=np.int64)
    r = np.minimum(np.sqrt(q.astype(np.float64)), _ROOT_MAX).astype(np.int64)
    while True:
        high = r * r > q
        if not high.any():
            break
        r -= high
    while True:
        # (r+1)**2 <= q without forming (r+1)**2
        low = q - r * r >= 2 * r + 1
        if not low.any():
            break
        r += low
    return r


def square_root_or_minus_one(q):
    """``sqrt(q)`` where ``q`` is a perfect square, else -1."""
    r = isqrt_array(q)
    return np.where(r * r == q, r, -1)
