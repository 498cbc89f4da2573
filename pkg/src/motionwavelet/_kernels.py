"""Filter-bank inner loops.

Two interchangeable implementations of the zero-padded analysis and synthesis
filter banks, both operating on the last axis of a C-contiguous 2-D float64
array of shape ``(rows, n)``:

* a numba ``@njit`` path with explicit loops (default when numba imports), and
* a pure-numpy path built on ``sliding_window_view``.

Set ``MOTIONWAVELET_DISABLE_NUMBA=1`` before import to force the numpy path.
``USING_NUMBA`` reports which one is active; both are always importable under
explicit names so tests and ``benchmarks/bench_kernels.py`` can compare them.

Indexing convention (1-based samples, 0-based taps, zero outside ``[1, n]``)::

    a[k] = sum_j lo[j] * x[2k - j]            k = 1 .. (n + l - 1) // 2
    x[n] = sum_m rlo[n + l - 1 - 2m] * a[m] + sum_m rhi[n + l - 1 - 2m] * d[m]
"""

from __future__ import annotations

import os

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

_DISABLED = os.environ.get("MOTIONWAVELET_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False


def band_length(n: int, filter_len: int) -> int:
    return (n + filter_len - 1) // 2


# ---------------------------------------------------------------------------
# numpy path


def analysis_numpy(x, lo, hi):
    rows, n = x.shape
    l = lo.shape[0]
    k = band_length(n, l)
    xp = np.zeros((rows, n + 2 * (l - 1)), dtype=np.float64)
    xp[:, l - 1 : l - 1 + n] = x
    # window q covers x0[q-l+1 .. q]; odd q give the 1-based even positions 2k-1 (0-based)
    win = sliding_window_view(xp, l, axis=1)[:, 1 : 2 * k : 2, :]
    taps = np.stack([lo[::-1], hi[::-1]], axis=1)
    out = win @ taps
    return np.ascontiguousarray(out[..., 0]), np.ascontiguousarray(out[..., 1])


def synthesis_numpy(a, d, rlo, rhi, n_out):
    rows, k = a.shape
    l = rlo.shape[0]
    # u[2m] = coeff[m] for m = 1..k; full convolution read from offset l
    u = np.zeros((rows, 2, 2 * k + 1 + 2 * (l - 1)), dtype=np.float64)
    u[:, 0, l + 1 : l + 1 + 2 * k : 2] = a
    u[:, 1, l + 1 : l + 1 + 2 * k : 2] = d
    win = sliding_window_view(u, l, axis=2)[:, :, l : l + n_out, :]
    return win[:, 0] @ rlo[::-1] + win[:, 1] @ rhi[::-1]


# ---------------------------------------------------------------------------
# numba path

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def analysis_numba(x, lo, hi):
        rows, n = x.shape
        l = lo.shape[0]
        k_len = (n + l - 1) // 2
        a = np.zeros((rows, k_len))
        d = np.zeros((rows, k_len))
        for r in range(rows):
            for k in range(1, k_len + 1):
                sa = 0.0
                sd = 0.0
                # 2k - j in [1, n]  <=>  j in [2k - n, 2k - 1]
                j0 = max(0, 2 * k - n)
                j1 = min(l - 1, 2 * k - 1)
                for j in range(j0, j1 + 1):
                    v = x[r, 2 * k - j - 1]
                    sa += lo[j] * v
                    sd += hi[j] * v
                a[r, k - 1] = sa
                d[r, k - 1] = sd
        return a, d

    @numba.njit(cache=True)
    def synthesis_numba(a, d, rlo, rhi, n_out):
        rows, k_len = a.shape
        l = rlo.shape[0]
        out = np.zeros((rows, n_out))
        for r in range(rows):
            for n in range(1, n_out + 1):
                p = n + l - 1
                # tap j = p - 2m in [0, l-1]  <=>  m in [ceil((p-l+1)/2), floor(p/2)]
                m0 = max(1, (p - l + 2) // 2)
                m1 = min(k_len, p // 2)
                s = 0.0
                for m in range(m0, m1 + 1):
                    j = p - 2 * m
                    s += rlo[j] * a[r, m - 1] + rhi[j] * d[r, m - 1]
                out[r, n - 1] = s
        return out

else:  # pragma: no cover
    analysis_numba = analysis_numpy
    synthesis_numba = synthesis_numpy


USING_NUMBA = HAVE_NUMBA and not _DISABLED

if USING_NUMBA:
    analysis = analysis_numba
    synthesis = synthesis_numba
else:
    analysis = analysis_numpy
    synthesis = synthesis_numpy
