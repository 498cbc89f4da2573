"""Motion sequences and their wavelet-manifold encoding.

A motion of shape ``(frames, 3J)`` maps to a ``(K, 4D)`` manifold by a
single-level 2-D DWT whose four subbands are concatenated along the feature
axis in the order LL, HL, LH, HH.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .wavelet import Subbands2D, WaveletBasis, band_length, dwt2d, idwt2d


@dataclass
class MotionSequence:
    data: np.ndarray
    fps: float = 30.0
    joints: int | None = None

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.float64)
        if self.data.ndim != 2:
            raise ShapeError(f"motion must be 2-D (frames, channels), got {self.data.shape}")
        if self.joints is None:
            if self.data.shape[1] % 3:
                raise ShapeError(f"channel count {self.data.shape[1]} is not a multiple of 3")
            self.joints = self.data.shape[1] // 3
        if self.data.shape[1] != 3 * self.joints:
            raise ShapeError(f"channel count {self.data.shape[1]} != 3 * joints ({self.joints})")
        if not np.all(np.isfinite(self.data)):
            raise ShapeError("motion contains NaN or Inf")

    @property
    def frames(self) -> int:
        return self.data.shape[0]


@dataclass
class WaveletManifold:
    data: np.ndarray
    original_shape: tuple[int, int]
    basis_name: str

    @property
    def subband_width(self) -> int:
        return self.data.shape[-1] // 4


def manifold_shape(original_shape, basis: WaveletBasis) -> tuple[int, int]:
    rows, cols = original_shape
    return band_length(rows, basis), 4 * band_length(cols, basis)


def encode_array(x, basis: WaveletBasis) -> np.ndarray:
    """Array-level encode over the two trailing axes; leading axes are a batch."""
    s = dwt2d(x, basis)
    return np.concatenate([s.ll, s.hl, s.lh, s.hh], axis=-1)


def decode_array(y, basis: WaveletBasis, original_shape) -> np.ndarray:
    y = np.asarray(y, dtype=np.float64)
    if y.shape[-1] % 4:
        raise ShapeError(f"manifold width {y.shape[-1]} not divisible by 4")
    expected = manifold_shape(original_shape, basis)
    if tuple(y.shape[-2:]) != expected:
        raise ShapeError(
            f"manifold shape {tuple(y.shape[-2:])} does not match {expected} expected "
            f"for motion {tuple(original_shape)} with {basis.name}"
        )
    ll, hl, lh, hh = np.split(y, 4, axis=-1)
    return idwt2d(Subbands2D(ll, lh, hl, hh, tuple(original_shape)), basis)


def encode(motion: MotionSequence, basis: WaveletBasis) -> WaveletManifold:
    data = encode_array(motion.data, basis)
    return WaveletManifold(data=data, original_shape=motion.data.shape, basis_name=basis.name)


def decode(manifold: WaveletManifold, basis: WaveletBasis, fps: float = 30.0) -> MotionSequence:
    if manifold.basis_name != basis.name:
        raise ShapeError(
            f"basis mismatch: manifold encoded with {manifold.basis_name!r}, got {basis.name!r}"
        )
    x = decode_array(manifold.data, basis, manifold.original_shape)
    return MotionSequence(x, fps=fps)


def pad_history(history, total_frames: int, fps: float = 30.0) -> MotionSequence:
    """Extend an observed history to ``total_frames`` by repeating its last frame."""
    h = np.asarray(history, dtype=np.float64)
    if h.ndim != 2 or h.shape[0] == 0:
        raise ShapeError(f"history must be a non-empty 2-D array, got {h.shape}")
    if h.shape[0] >= total_frames:
        raise ShapeError(f"history length {h.shape[0]} must be < total frames {total_frames}")
    return MotionSequence(pad_history_array(h, total_frames), fps=fps)


def pad_history_array(h, total_frames: int) -> np.ndarray:
    h = np.asarray(h, dtype=np.float64)
    tail = np.repeat(h[..., -1:, :], total_frames - h.shape[-2], axis=-2)
    return np.concatenate([h, tail], axis=-2)


@dataclass
class NormStats:
    """Per-channel standardisation statistics."""

    mean: np.ndarray
    std: np.ndarray

    @classmethod
    def fit(cls, motions, min_std: float = 1e-6) -> "NormStats":
        stacked = np.concatenate([np.asarray(m, dtype=np.float64).reshape(-1, np.shape(m)[-1]) for m in motions])
        return cls(stacked.mean(axis=0), np.maximum(stacked.std(axis=0), min_std))

    @classmethod
    def identity(cls, channels: int) -> "NormStats":
        return cls(np.zeros(channels), np.ones(channels))

    def normalize(self, x):
        return (np.asarray(x, dtype=np.float64) - self.mean) / self.std

    def denormalize(self, x):
        return np.asarray(x, dtype=np.float64) * self.std + self.mean
