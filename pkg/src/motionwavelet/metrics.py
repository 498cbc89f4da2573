"""Diversity and accuracy metrics for sets of predicted futures.

Poses are compared as flat ``3J`` vectors per frame with the L2 norm.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError


def _stack(samples) -> np.ndarray:
    arr = np.asarray(samples, dtype=np.float64)
    if arr.ndim == 2:
        arr = arr[None]
    if arr.ndim != 3 or arr.shape[0] == 0:
        raise ShapeError(f"samples must be (S, F, 3J) with S >= 1, got {arr.shape}")
    return arr


def apd(samples) -> float:
    """Mean L2 distance over unordered pairs of flattened samples; 0 for S = 1."""
    x = _stack(samples)
    s = x.shape[0]
    if s < 2:
        return 0.0
    flat = x.reshape(s, -1)
    i, j = np.triu_indices(s, k=1)
    return float(np.linalg.norm(flat[i] - flat[j], axis=1).mean())


def _per_frame_dist(x, gt):
    gt = np.asarray(gt, dtype=np.float64)
    if gt.shape != x.shape[1:]:
        raise ShapeError(f"ground truth {gt.shape} does not match samples {x.shape[1:]}")
    return np.linalg.norm(x - gt[None], axis=-1)


def ade(samples, gt) -> float:
    x = _stack(samples)
    return float(_per_frame_dist(x, gt).mean(axis=1).min())


def fde(samples, gt) -> float:
    x = _stack(samples)
    return float(_per_frame_dist(x, gt)[:, -1].min())


def _check_mm(mm_gt):
    if len(mm_gt) == 0:
        raise ShapeError("multi-modal ground-truth set is empty")


def mmade(samples, mm_gt) -> float:
    _check_mm(mm_gt)
    x = _stack(samples)
    return float(np.mean([_per_frame_dist(x, g).mean(axis=1).min() for g in mm_gt]))


def mmfde(samples, mm_gt) -> float:
    _check_mm(mm_gt)
    x = _stack(samples)
    return float(np.mean([_per_frame_dist(x, g)[:, -1].min() for g in mm_gt]))


def multimodal_groups(histories, futures, tau: float) -> list[list[np.ndarray]]:
    """Pseudo multi-modal ground truth.

    Window ``j``'s future joins window ``i``'s set when their last observed
    poses lie within ``tau`` (L2) of each other; every set contains its own
    future.
    """
    last = np.asarray([np.asarray(h)[-1] for h in histories], dtype=np.float64)
    dist = np.linalg.norm(last[:, None, :] - last[None, :, :], axis=-1)
    return [[futures[j] for j in np.flatnonzero((dist[i] <= tau) | (np.arange(len(last)) == i))] for i in range(len(last))]


METRIC_NAMES = ("APD", "ADE", "FDE", "MMADE", "MMFDE")


def evaluate_set(samples, gt, mm_gt) -> dict[str, float]:
    return {
        "APD": apd(samples),
        "ADE": ade(samples, gt),
        "FDE": fde(samples, gt),
        "MMADE": mmade(samples, mm_gt),
        "MMFDE": mmfde(samples, mm_gt),
    }
