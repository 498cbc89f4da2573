"""Direct-sum reference implementations used as independent test oracles.

These evaluate the defining sums literally with explicit bounds checks; they
share no code with the package's kernels.
"""

import math

import numpy as np


def dwt1d_direct(x, h, g):
    """a[k] = sum_n h[n] x[2k - n], 1-based samples k = 1..floor((N+l-1)/2), zero outside."""
    n_len = len(x)
    l = len(h)
    k_len = (n_len + l - 1) // 2

    def sample(i):
        return x[i - 1] if 1 <= i <= n_len else 0.0

    a = [sum(h[n] * sample(2 * k - n) for n in range(l)) for k in range(1, k_len + 1)]
    d = [sum(g[n] * sample(2 * k - n) for n in range(l)) for k in range(1, k_len + 1)]
    return np.array(a), np.array(d)


def idwt1d_direct(a, d, h_rec, g_rec, target_len):
    """Full up-sampled convolution y[p] = sum_m h'[p - 2m] a[m] + g'[p - 2m] d[m], read at p = n + l - 1."""
    l = len(h_rec)
    k_len = len(a)
    out = []
    for n in range(1, target_len + 1):
        p = n + l - 1
        s = 0.0
        for m in range(1, k_len + 1):
            j = p - 2 * m
            if 0 <= j < l:
                s += h_rec[j] * a[m - 1] + g_rec[j] * d[m - 1]
        out.append(s)
    return np.array(out)


def dwt2d_direct(x, h, g):
    """Double sum over both axes for all four filter pairs."""
    rows, cols = x.shape
    l = len(h)
    k1 = (rows + l - 1) // 2
    k2 = (cols + l - 1) // 2
    filt = {"l": h, "h": g}
    out = {}
    for fr in "lh":
        for fc in "lh":
            y = np.zeros((k1, k2))
            for a in range(1, k1 + 1):
                for b in range(1, k2 + 1):
                    s = 0.0
                    for n1 in range(l):
                        i = 2 * a - n1
                        if not 1 <= i <= rows:
                            continue
                        for n2 in range(l):
                            j = 2 * b - n2
                            if 1 <= j <= cols:
                                s += filt[fr][n1] * filt[fc][n2] * x[i - 1, j - 1]
                    y[a - 1, b - 1] = s
            out[fr + fc] = y
    return out


def pairwise_apd(samples):
    s = len(samples)
    if s < 2:
        return 0.0
    total = 0.0
    count = 0
    for i in range(s):
        for j in range(i + 1, s):
            total += math.sqrt(sum((u - v) ** 2 for u, v in zip(np.ravel(samples[i]), np.ravel(samples[j]))))
            count += 1
    return total / count


def _frame_dist(p, q):
    return math.sqrt(sum((u - v) ** 2 for u, v in zip(p, q)))


def min_ade(samples, gt):
    best = math.inf
    for smp in samples:
        avg = sum(_frame_dist(smp[f], gt[f]) for f in range(len(gt))) / len(gt)
        best = min(best, avg)
    return best


def min_fde(samples, gt):
    return min(_frame_dist(smp[-1], gt[-1]) for smp in samples)
