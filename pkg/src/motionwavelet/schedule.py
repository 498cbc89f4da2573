"""Noise schedules and the closed-form forward (noising) process.

Timesteps are 1-based at the interface, ``t in 1..T``. ``t = 0`` denotes the
clean limit with ``alpha_bar = 1``; arrays are stored 0-based, so
``alpha_bar[t - 1]`` belongs to step ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, ShapeError

SCHEDULE_KINDS = ("cosine", "linear", "sigmoid")

BETA_START = 1e-4
BETA_END = 2e-2
COSINE_OFFSET = 0.008


@dataclass(frozen=True)
class NoiseSchedule:
    kind: str
    steps: int
    alpha: np.ndarray
    alpha_bar: np.ndarray

    def abar(self, t: int) -> float:
        """``alpha_bar`` at 1-based step ``t``; 1.0 at ``t = 0``."""
        check_step(t, self.steps, allow_zero=True)
        return 1.0 if t == 0 else float(self.alpha_bar[t - 1])


def check_step(t: int, steps: int, allow_zero: bool = False) -> None:
    lo = 0 if allow_zero else 1
    if not (lo <= int(t) <= steps):
        raise ShapeError(f"timestep {t} outside [{lo}, {steps}]")


def _cosine_alpha(steps: int) -> np.ndarray:
    t = np.arange(steps + 1, dtype=np.float64)
    f = np.cos(((t / steps + COSINE_OFFSET) / (1.0 + COSINE_OFFSET)) * math.pi / 2) ** 2
    return np.clip(f[1:] / f[:-1], 0.001, 0.999)


def _linear_alpha(steps: int) -> np.ndarray:
    if steps == 1:
        return np.array([1.0 - BETA_START])
    return 1.0 - np.linspace(BETA_START, BETA_END, steps)


def _sigmoid_alpha(steps: int) -> np.ndarray:
    logits = np.linspace(-6.0, 6.0, steps) if steps > 1 else np.array([-6.0])
    betas = 1.0 / (1.0 + np.exp(-logits)) * (BETA_END - BETA_START) + BETA_START
    return 1.0 - betas


_BUILDERS = {"cosine": _cosine_alpha, "linear": _linear_alpha, "sigmoid": _sigmoid_alpha}


def build_schedule(kind: str = "cosine", steps: int = 1000) -> NoiseSchedule:
    if kind not in _BUILDERS:
        raise ConfigError(f"unknown schedule kind {kind!r}; choose from {', '.join(SCHEDULE_KINDS)}")
    if int(steps) < 1:
        raise ConfigError(f"schedule needs at least one step, got {steps}")
    alpha = _BUILDERS[kind](int(steps))
    alpha_bar = np.cumprod(alpha)
    alpha.setflags(write=False)
    alpha_bar.setflags(write=False)
    return NoiseSchedule(kind=kind, steps=int(steps), alpha=alpha, alpha_bar=alpha_bar)


def q_sample(y0, t: int, noise, schedule: NoiseSchedule) -> np.ndarray:
    """Noised manifold ``sqrt(abar_t) * y0 + sqrt(1 - abar_t) * noise``."""
    y0 = np.asarray(y0)
    noise = np.asarray(noise)
    if y0.shape != noise.shape:
        raise ShapeError(f"q_sample: y0 {y0.shape} and noise {noise.shape} differ")
    ab = schedule.abar(t)
    return math.sqrt(ab) * y0 + math.sqrt(1.0 - ab) * noise


def q_sample_batch(y0, t, noise, schedule: NoiseSchedule) -> np.ndarray:
    """Per-sample steps ``t`` of shape ``(B,)`` over a batch ``(B, ...)``."""
    t = np.asarray(t)
    if np.any(t < 1) or np.any(t > schedule.steps):
        raise ShapeError(f"timesteps outside [1, {schedule.steps}]")
    ab = schedule.alpha_bar[t - 1].reshape((-1,) + (1,) * (np.ndim(y0) - 1))
    return np.sqrt(ab) * y0 + np.sqrt(1.0 - ab) * noise


def ddim_timesteps(steps: int, ddim_steps: int) -> np.ndarray:
    """Evenly spaced descending 1-based timesteps, e.g. 1000, 990, ..., 10."""
    n = min(int(ddim_steps), steps)
    if n < 1:
        raise ConfigError(f"ddim_steps must be >= 1, got {ddim_steps}")
    return (np.arange(n, 0, -1) * steps) // n
