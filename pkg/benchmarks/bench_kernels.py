"""Compare the numba and numpy filter-bank kernels.

Run from the repository root::

    python3 benchmarks/bench_kernels.py [--repeats N]

Each case times one analysis + synthesis roundtrip over a batch of rows, the
same work a 2-D manifold encode/decode does per axis. The first numba call
(compilation) is excluded.
"""

import argparse
import time

import numpy as np

from motionwavelet import _kernels as K
from motionwavelet.wavelet import make_basis

CASES = [
    # (label, rows, length, basis)
    ("toy manifold rows", 15, 48, "bior2.8"),
    ("h36m manifold rows", 51, 125, "bior2.8"),
    ("h36m columns", 125, 51, "bior2.8"),
    ("batch of 50 samples", 50 * 51, 125, "bior2.8"),
    ("long filter", 51, 125, "coif5"),
]


def roundtrip(analysis, synthesis, x, b):
    a, d = analysis(x, b.dec_lo, b.dec_hi)
    return synthesis(a, d, b.rec_lo, b.rec_hi, x.shape[1])


def best_time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args()

    if not K.HAVE_NUMBA:
        print("numba is not importable; only the numpy path can run")
        return
    rng = np.random.default_rng(0)
    # compile outside the timed region
    b0 = make_basis("haar")
    roundtrip(K.analysis_numba, K.synthesis_numba, rng.standard_normal((2, 8)), b0)

    print(f"{'case':24s} {'rows':>6s} {'len':>5s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}  max|diff|")
    for label, rows, n, name in CASES:
        b = make_basis(name)
        x = rng.standard_normal((rows, n))
        t_np = best_time(lambda: roundtrip(K.analysis_numpy, K.synthesis_numpy, x, b), args.repeats)
        t_nb = best_time(lambda: roundtrip(K.analysis_numba, K.synthesis_numba, x, b), args.repeats)
        diff = np.abs(
            roundtrip(K.analysis_numpy, K.synthesis_numpy, x, b) - roundtrip(K.analysis_numba, K.synthesis_numba, x, b)
        ).max()
        print(f"{label:24s} {rows:6d} {n:5d} {1e3 * t_np:10.3f} {1e3 * t_nb:10.3f} {t_np / t_nb:8.2f}  {diff:.1e}")
    print(f"active path: {'numba' if K.USING_NUMBA else 'numpy'} (MOTIONWAVELET_DISABLE_NUMBA=1 forces numpy)")


if __name__ == "__main__":
    main()
