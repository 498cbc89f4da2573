"""Synthetic motion, motion files and history/future windowing.

WMOT binary layout (all little-endian)::

    bytes 0-3   b"WMOT"
    byte  4     version (1)
    u32         frames
    u32         joints
    f32         fps
    f64 * frames * 3 * joints, row-major (frame, joint, axis)

A CSV import/export path uses a ``frame,j0x,j0y,j0z,...`` header.
"""

from __future__ import annotations

import csv
import math
import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import FormatError, ShapeError
from .manifold import MotionSequence

MOTION_KINDS = ("sine_walk", "chirp", "stop_start", "mixture")

WMOT_MAGIC = b"WMOT"
WMOT_VERSION = 1
_HEADER = struct.Struct("<4sBIIf")


# ---------------------------------------------------------------------------
# synthetic generators


def _sine_walk(frames, channels, fps, rng, freq_range):
    t = np.arange(frames) / fps
    freq = rng.uniform(*freq_range, size=channels)
    phase = rng.uniform(0, 2 * np.pi, size=channels)
    amp = rng.uniform(0.5, 1.5, size=channels)
    offset = rng.normal(0.0, 1.0, size=channels)
    return offset + amp * np.sin(2 * np.pi * freq * t[:, None] + phase)


def _chirp(frames, channels, fps, rng, freq_range):
    t = np.arange(frames) / fps
    f0 = rng.uniform(*freq_range, size=channels)
    duration = frames / fps
    rate = rng.uniform(0.5, 1.5, size=channels) * f0 / duration
    phase = rng.uniform(0, 2 * np.pi, size=channels)
    amp = rng.uniform(0.5, 1.5, size=channels)
    tt = t[:, None]
    return amp * np.sin(2 * np.pi * (f0 * tt + 0.5 * rate * tt**2) + phase)


def _stop_start(frames, channels, fps, rng, freq_range):
    """Alternating hold / move segments; velocity jumps at every boundary."""
    out = np.empty((frames, channels))
    lo = max(4, frames // 8)
    hi = max(lo + 1, frames // 3)
    for c in range(channels):
        pos = rng.normal()
        amp = rng.uniform(0.5, 1.5)
        freq = rng.uniform(*freq_range)
        start = 0
        moving = bool(rng.integers(2))
        while start < frames:
            end = min(frames, start + int(rng.integers(lo, hi)))
            n = end - start
            if moving:
                seg = pos + amp * np.sin(2 * np.pi * freq * np.arange(1, n + 1) / fps)
                out[start:end, c] = seg
                pos = seg[-1]
            else:
                out[start:end, c] = pos
            moving = not moving
            start = end
    return out


_GENERATORS = {"sine_walk": _sine_walk, "chirp": _chirp, "stop_start": _stop_start}


def synth_motion(kind: str, frames: int, joints: int, rng: np.random.Generator, fps: float = 30.0,
                 freq_range: tuple[float, float] = (0.5, 1.5)) -> MotionSequence:
    """Generate a synthetic ``(frames, 3 * joints)`` motion.

    Args:
        kind: one of ``sine_walk``, ``chirp``, ``stop_start``, ``mixture``.
        freq_range: per-channel oscillation frequencies in Hz are drawn from
            this interval.
    """
    if kind not in MOTION_KINDS:
        raise ShapeError(f"unknown motion kind {kind!r}; choose from {', '.join(MOTION_KINDS)}")
    if frames < 8:
        raise ShapeError(f"need at least 8 frames, got {frames}")
    if joints < 1:
        raise ShapeError(f"need at least 1 joint, got {joints}")
    channels = 3 * joints
    if kind == "mixture":
        parts = [gen(frames, channels, fps, rng, freq_range) for gen in _GENERATORS.values()]
        weights = rng.dirichlet(np.ones(len(parts)), size=channels)
        data = sum(weights[:, i] * p for i, p in enumerate(parts))
    else:
        data = _GENERATORS[kind](frames, channels, fps, rng, freq_range)
    return MotionSequence(data, fps=fps, joints=joints)


# ---------------------------------------------------------------------------
# file formats


def save_motion(path, motion: MotionSequence) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        save_motion_csv(path, motion)
        return
    data = np.ascontiguousarray(motion.data, dtype="<f8")
    header = _HEADER.pack(WMOT_MAGIC, WMOT_VERSION, data.shape[0], motion.joints, motion.fps)
    path.write_bytes(header + data.tobytes())


def load_motion(path) -> MotionSequence:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return load_motion_csv(path)
    buf = path.read_bytes()
    if len(buf) < _HEADER.size:
        raise FormatError(f"{path}: malformed header ({len(buf)} bytes)")
    magic, version, frames, joints, fps = _HEADER.unpack_from(buf)
    if magic != WMOT_MAGIC:
        raise FormatError(f"{path}: malformed header, bad magic {magic!r}")
    if version != WMOT_VERSION:
        raise FormatError(f"{path}: malformed header, unsupported version {version}")
    row_bytes = 8 * 3 * joints
    body = buf[_HEADER.size :]
    if len(body) < frames * row_bytes:
        raise FormatError(f"{path}: unexpected end of file at frame {len(body) // max(row_bytes, 1)}")
    if len(body) > frames * row_bytes:
        raise FormatError(f"{path}: frame-length mismatch, {len(body) - frames * row_bytes} trailing bytes")
    data = np.frombuffer(body, dtype="<f8").reshape(frames, 3 * joints).astype(np.float64)
    if not np.all(np.isfinite(data)):
        bad = int(np.argwhere(~np.isfinite(data))[0, 0])
        raise FormatError(f"{path}: NaN/Inf entry at frame {bad}")
    return MotionSequence(data, fps=float(fps), joints=joints)


def csv_header(joints: int) -> list[str]:
    return ["frame"] + [f"j{j}{ax}" for j in range(joints) for ax in "xyz"]


def save_motion_csv(path, motion: MotionSequence) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(csv_header(motion.joints))
        for i, row in enumerate(motion.data):
            w.writerow([i] + [repr(float(v)) for v in row])


def load_motion_csv(path, fps: float = 30.0) -> MotionSequence:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or not rows[0] or rows[0][0] != "frame":
        raise FormatError(f"{path}: malformed header, expected 'frame,j0x,j0y,j0z,...'")
    header = rows[0]
    ncols = len(header) - 1
    if ncols == 0 or ncols % 3:
        raise FormatError(f"{path}: malformed header, {ncols} coordinate columns is not a multiple of 3")
    data = []
    for k, row in enumerate(rows[1:]):
        if len(row) != ncols + 1:
            raise FormatError(f"{path}: frame-length mismatch at frame {k}: {len(row) - 1} values, expected {ncols}")
        try:
            vals = [float(v) for v in row[1:]]
        except ValueError as exc:
            raise FormatError(f"{path}: unparsable value at frame {k}: {exc}") from None
        if not all(math.isfinite(v) for v in vals):
            raise FormatError(f"{path}: NaN/Inf entry at frame {k}")
        data.append(vals)
    if not data:
        raise FormatError(f"{path}: no frames")
    return MotionSequence(np.array(data), fps=fps, joints=ncols // 3)


# ---------------------------------------------------------------------------
# windowing


@dataclass
class MotionDataset:
    sequences: list
    H: int = 25
    F: int = 100
    stride: int = 1
    windows: list = field(default_factory=list)
    skipped: int = 0

    def __post_init__(self):
        if not self.windows:
            self.windows, self.skipped = make_windows(self.sequences, self.H, self.F, self.stride)

    def histories(self) -> np.ndarray:
        return np.stack([h for h, _ in self.windows])

    def futures(self) -> np.ndarray:
        return np.stack([f for _, f in self.windows])

    def full(self) -> np.ndarray:
        return np.stack([np.concatenate([h, f]) for h, f in self.windows])


def window_count(length: int, H: int, F: int, stride: int) -> int:
    total = H + F
    return 0 if length < total else (length - total) // stride + 1


def make_windows(sequences, H: int, F: int, stride: int = 1):
    """Slide an ``H + F`` window over each sequence.

    Returns:
        ``(windows, skipped)`` where ``windows`` is a list of
        ``(history, future)`` arrays and ``skipped`` counts sequences shorter
        than ``H + F``.
    """
    if H < 1 or F < 1 or stride < 1:
        raise ShapeError(f"H, F and stride must be >= 1 (got {H}, {F}, {stride})")
    windows = []
    skipped = 0
    for seq in sequences:
        data = seq.data if isinstance(seq, MotionSequence) else np.asarray(seq, dtype=np.float64)
        n = window_count(data.shape[0], H, F, stride)
        if n == 0:
            skipped += 1
            continue
        for i in range(n):
            s = i * stride
            windows.append((data[s : s + H].copy(), data[s + H : s + H + F].copy()))
    return windows, skipped


def synth_corpus(kind: str, count: int, frames: int, joints: int, seed: int, fps: float = 30.0,
                 freq_range=(0.5, 1.5)) -> list[MotionSequence]:
    """``count`` independent synthetic sequences, each from its own spawned stream."""
    seqs = np.random.SeedSequence(seed).spawn(count)
    return [
        synth_motion(kind, frames, joints, np.random.Generator(np.random.Philox(s)), fps=fps, freq_range=freq_range)
        for s in seqs
    ]
