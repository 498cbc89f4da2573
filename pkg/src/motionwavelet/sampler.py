"""Guided reverse diffusion on wavelet manifolds.

One sampling run draws, in this order from a single Philox generator:
the initial noise ``y_T``, then one standard-normal tensor ``z`` per DDIM
step. ``z`` feeds the attention-guidance perturbation and, in controlled
sampling, the noising of the ground-truth manifold, so switching either
feature on or off never shifts the random stream.

Reverse steps are deterministic DDIM (eta = 0) over an evenly spaced subset
of the training timesteps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DivergenceError, ShapeError
from .manifold import MotionSequence, NormStats, decode_array, encode_array, pad_history_array
from .schedule import NoiseSchedule, ddim_timesteps
from .wavelet import WaveletBasis, make_basis


@dataclass(frozen=True)
class SampleConfig:
    ddim_steps: int = 100
    w: float = 1.0
    s: float = 1.0
    sigma: float = 2.5
    phi_quantile: float = 0.8
    m: int = 3
    tabg_window: int = 90
    wmsg_enabled: bool = True
    control_window: int = 90
    x0_clip: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.ddim_steps < 1:
            raise ConfigError("ddim_steps must be >= 1")
        if self.m < 1 or self.m % 2 == 0:
            raise ConfigError(f"mask width m must be odd and >= 1, got {self.m}")
        if self.sigma < 0:
            raise ConfigError("sigma must be >= 0")
        if self.x0_clip < 0:
            raise ConfigError("x0_clip must be >= 0 (0 disables clipping)")
        if not 0.0 < self.phi_quantile < 1.0:
            raise ConfigError("phi_quantile must lie in (0, 1)")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(int(seed)))


def _same_shape(*arrays):
    shapes = {np.shape(a) for a in arrays}
    if len(shapes) != 1:
        raise ShapeError(f"shape mismatch: {sorted(shapes)}")


# ---------------------------------------------------------------------------
# step-level operations


def estimate_x0(y_t, eps, t: int, schedule: NoiseSchedule, sigma: float = 0.0, z=None):
    """Noised clean-manifold estimate ``(y_t - sqrt(1-abar) eps + sigma z) / sqrt(abar)``."""
    _same_shape(y_t, eps)
    ab = schedule.abar(t)
    num = np.asarray(y_t) - math.sqrt(1.0 - ab) * np.asarray(eps)
    if sigma:
        _same_shape(y_t, z)
        num = num + sigma * np.asarray(z)
    return num / math.sqrt(ab)


def aggregate_attention(record) -> np.ndarray:
    """Mean over recorded layers, then column sums: importance per manifold row."""
    maps = record.per_layer if hasattr(record, "per_layer") else record
    if len(maps) == 0:
        raise ShapeError("attention record is empty")
    avg = np.mean(np.stack(maps), axis=0)
    return avg.sum(axis=-2)


def build_attention_mask(importance, phi, m: int, feature_dim: int) -> np.ndarray:
    """Binary ``(..., K, feature_dim)`` mask covering ``m`` rows around each row above ``phi``.

    ``importance`` may carry leading batch axes; ``phi`` broadcasts against
    them.
    """
    if m < 1 or m % 2 == 0:
        raise ShapeError(f"mask width m must be odd, got {m}")
    a = np.asarray(importance, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)[..., None]
    hot = (a > phi).astype(np.float64)
    half = (m - 1) // 2
    k = a.shape[-1]
    # row i is covered when any hot row lies within [i-half, i+half]
    padded = np.zeros(a.shape[:-1] + (k + 2 * half,))
    padded[..., half : half + k] = hot
    cov = np.zeros_like(hot)
    for off in range(m):
        cov = np.maximum(cov, padded[..., off : off + k])
    return np.repeat(cov[..., None], feature_dim, axis=-1)


def tabg_epsilon(model, y_t, t: int, eps_uncond, mask, y_tilde_t, s: float):
    """Attention-guided unconditional noise ``eps + s (eps(y_hat) - eps)``."""
    _same_shape(y_t, eps_uncond, mask, y_tilde_t)
    if s == 0:
        return eps_uncond
    y_hat = (1.0 - mask) * y_t + mask * y_tilde_t
    eps_hat, _ = model.predict(y_hat, t, cond=None, record=False)
    return (1.0 - s) * eps_uncond + s * eps_hat


def cfg_combine(eps_tilde, eps_cond, w: float):
    """``eps_tilde + w (eps_cond - eps_tilde)``; ``w = 1`` is purely conditional."""
    _same_shape(eps_tilde, eps_cond)
    # affine form keeps w = 0 and w = 1 exact
    return (1.0 - w) * np.asarray(eps_tilde) + w * np.asarray(eps_cond)


def ddim_step(y_t, eps, t: int, t_prev: int, schedule: NoiseSchedule, clip: float = 0.0):
    """Deterministic DDIM move from step ``t`` to ``t_prev`` (0 = clean).

    Args:
        clip: when positive, the clean estimate is clipped to ``[-clip, clip]``
            and the noise re-derived from it before stepping.
    """
    ab = schedule.abar(t)
    ab_prev = schedule.abar(t_prev)
    y0 = (y_t - math.sqrt(1.0 - ab) * eps) / math.sqrt(ab)
    if clip > 0:
        y0 = np.clip(y0, -clip, clip)
        eps = (y_t - math.sqrt(ab) * y0) / math.sqrt(1.0 - ab)
    return math.sqrt(ab_prev) * y0 + math.sqrt(1.0 - ab_prev) * eps


def wmsg(y, basis: WaveletBasis, original_shape):
    """Project a manifold tensor onto the image of the DWT: ``DWT(iDWT(y))``."""
    return encode_array(decode_array(y, basis, original_shape), basis)


def controlled_wmsg(y, y_gt, mask, basis: WaveletBasis, original_shape):
    """WMSG with a motion-space blend toward the ground truth under ``mask``."""
    x = decode_array(y, basis, original_shape)
    x_gt = decode_array(y_gt, basis, original_shape)
    return encode_array((1.0 - mask) * x + mask * x_gt, basis)


# ---------------------------------------------------------------------------
# full sampling loop


def _model_context(model):
    if model.motion_shape is None:
        raise ShapeError("model carries no motion shape; was it built by the trainer?")
    basis = make_basis(model.basis_name)
    rows, cols = model.motion_shape
    norm = model.norm_stats or NormStats.identity(cols)
    return basis, (rows, cols), norm


def _check_history(model, history):
    h = np.asarray(history, dtype=np.float64)
    rows, cols = model.motion_shape
    want = (model.history_len, cols) if model.history_len else (h.shape[0], cols)
    if h.ndim != 2 or h.shape != want:
        raise ShapeError(f"history shape {h.shape} does not match model shape {want} (motion {rows}x{cols})")
    if not np.all(np.isfinite(h)):
        raise ShapeError("history contains NaN or Inf")
    return h


def _run(model, history, schedule, config: SampleConfig, num_samples, rng, control=None):
    basis, shape, norm = _model_context(model)
    if (schedule.kind, schedule.steps) != (model.config.schedule, model.config.timesteps):
        raise ConfigError(
            f"schedule {schedule.kind}/{schedule.steps} does not match the model's "
            f"{model.config.schedule}/{model.config.timesteps}"
        )
    h = _check_history(model, history)
    rows = shape[0]
    cond1 = encode_array(pad_history_array(norm.normalize(h), rows), basis)
    bsz = int(num_samples)
    cond = np.broadcast_to(cond1, (bsz,) + cond1.shape)
    k, f = cond1.shape

    rng = rng if rng is not None else make_rng(config.seed)
    y = rng.standard_normal((bsz, k, f))
    ts = ddim_timesteps(schedule.steps, config.ddim_steps)
    n_steps = len(ts)

    if control is not None:
        gt, mask = control
        y_gt0 = encode_array(norm.normalize(gt), basis)

    for i, t in enumerate(ts):
        t = int(t)
        t_prev = int(ts[i + 1]) if i + 1 < n_steps else 0
        # w = 1 discards the unconditional branch, w = 0 the conditional one
        need_u = config.w != 1
        if need_u:
            eps_u, attn = model.predict(y, t, cond=None, record=config.s != 0)
        eps_c = model.predict(y, t, cond=cond, record=False)[0] if config.w != 0 else eps_u
        z = rng.standard_normal(y.shape)

        if not need_u:
            eps_t = eps_c
        elif i < config.tabg_window and config.s != 0:
            ab = schedule.abar(t)
            a_t = aggregate_attention(attn)
            phi = np.quantile(a_t, config.phi_quantile, axis=-1)
            mask_t = build_attention_mask(a_t, phi, config.m, f)
            y0_tilde = estimate_x0(y, eps_u, t, schedule, config.sigma, z)
            y_tilde = math.sqrt(ab) * y0_tilde + math.sqrt(1.0 - ab) * z
            eps_t = tabg_epsilon(model, y, t, eps_u, mask_t, y_tilde, config.s)
        else:
            eps_t = eps_u

        eps_hat = cfg_combine(eps_t, eps_c, config.w)
        y = ddim_step(y, eps_hat, t, t_prev, schedule, config.x0_clip)

        if control is not None and i < config.control_window:
            ab_prev = schedule.abar(t_prev)
            y_gt = math.sqrt(ab_prev) * y_gt0 + math.sqrt(1.0 - ab_prev) * z
            y = controlled_wmsg(y, y_gt, mask, basis, shape)
        elif config.wmsg_enabled:
            y = wmsg(y, basis, shape)

        if not np.all(np.isfinite(y)):
            raise DivergenceError(f"non-finite manifold at DDIM step {i} (t={t}, t_prev={t_prev})")

    x = norm.denormalize(decode_array(y, basis, shape))
    x[:, : h.shape[0], :] = h
    return x


def sample_many(model, history, schedule: NoiseSchedule, config: SampleConfig, num_samples: int = 1, rng=None):
    """Draw ``num_samples`` predicted motions ``(S, frames, channels)`` for one history.

    The first ``H`` frames of every output equal the observed history.
    """
    return _run(model, history, schedule, config, num_samples, rng)


def sample(model, history, schedule: NoiseSchedule, config: SampleConfig, rng=None, fps: float = 30.0) -> MotionSequence:
    return MotionSequence(sample_many(model, history, schedule, config, 1, rng)[0], fps=fps)


def controlled_sample_many(model, history, gt_motion, mask, schedule, config: SampleConfig, num_samples=1, rng=None):
    """Controlled variant of :func:`sample_many`.

    Within the first ``config.control_window`` steps the shaping projection
    blends toward the noised ground truth wherever ``mask`` is 1. WMSG is
    applied at those steps regardless of ``config.wmsg_enabled``.
    """
    gt = np.asarray(gt_motion, dtype=np.float64)
    mk = np.asarray(mask, dtype=np.float64)
    shape = tuple(model.motion_shape)
    if gt.shape != shape:
        raise ShapeError(f"gt_motion shape {gt.shape} != model motion shape {shape}")
    if mk.shape != shape:
        raise ShapeError(f"mask shape {mk.shape} != motion shape {shape}")
    if not np.all((mk == 0) | (mk == 1)):
        raise ShapeError("mask must be binary")
    return _run(model, history, schedule, config, num_samples, rng, control=(gt, mk))


def controlled_sample(model, history, gt_motion, mask, schedule, config: SampleConfig, rng=None, fps=30.0):
    x = controlled_sample_many(model, history, gt_motion, mask, schedule, config, 1, rng)[0]
    return MotionSequence(x, fps=fps)


def joint_mask(shape, joints) -> np.ndarray:
    """Mask selecting the three channels of each listed joint for all frames."""
    m = np.zeros(shape)
    for j in joints:
        if not 0 <= 3 * j + 2 < shape[1]:
            raise ShapeError(f"joint {j} outside motion with {shape[1] // 3} joints")
        m[:, 3 * j : 3 * j + 3] = 1.0
    return m


def frame_mask(shape, frames) -> np.ndarray:
    """Mask selecting every channel of each listed frame."""
    m = np.zeros(shape)
    for t in frames:
        if not 0 <= t < shape[0]:
            raise ShapeError(f"frame {t} outside motion with {shape[0]} frames")
        m[t, :] = 1.0
    return m
