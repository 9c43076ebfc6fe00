"""Pure numpy periodized two-channel filter bank (fallback backend).

Both functions work along the last axis of a C-contiguous float64 2-D array
whose last dimension is even.
"""

import numpy as np


def _taps(n, length):
    return 2 * np.arange(n // 2) - length // 2 + 1


def analysis(x, lo, hi):
    n = x.shape[-1]
    base = _taps(n, len(lo))
    approx = np.zeros(x.shape[:-1] + (n // 2,))
    detail = np.zeros_like(approx)
    for i in range(len(lo)):
        cols = x[:, (base + i) % n]
        approx += lo[i] * cols
        detail += hi[i] * cols
    return approx, detail


def synthesis(approx, detail, lo, hi):
    n = 2 * approx.shape[-1]
    base = _taps(n, len(lo))
    out = np.zeros(approx.shape[:-1] + (n,))
    for i in range(len(lo)):
        # indices are distinct for fixed i, so fancy-index accumulation is safe
        out[:, (base + i) % n] += lo[i] * approx + hi[i] * detail
    return out
