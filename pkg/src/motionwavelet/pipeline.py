"""Training and evaluation loops shared by the CLI and the acceptance suite."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import metrics
from .denoiser import DenoiserConfig, DenoiserModel, TrainSettings, train_step
from .manifold import NormStats, encode_array, manifold_shape, pad_history_array
from .sampler import SampleConfig, make_rng, sample_many
from .schedule import NoiseSchedule
from .wavelet import make_basis

log = logging.getLogger(__name__)


def manifold_pairs(windows, basis, norm: NormStats):
    """Clean manifolds and padded-history conditions for a list of windows."""
    full = np.stack([np.concatenate([h, f]) for h, f in windows])
    hist = np.stack([h for h, _ in windows])
    full_n = norm.normalize(full)
    cond_n = pad_history_array(norm.normalize(hist), full.shape[1])
    return encode_array(full_n, basis), encode_array(cond_n, basis)


def build_model(windows, *, basis_name="bior2.8", blocks=4, latent_dim=64, heads=8, ff_dim=128, timesteps=1000,
                schedule="cosine", cond_drop_prob=0.1, seed=0, dtype=np.float32, train: TrainSettings | None = None) -> DenoiserModel:
    """Fresh model sized for the windows, with normalisation fitted on them."""
    basis = make_basis(basis_name)
    h0, f0 = windows[0]
    rows, cols = h0.shape[0] + f0.shape[0], h0.shape[1]
    k, feat = manifold_shape((rows, cols), basis)
    norm = NormStats.fit([np.concatenate([h, f]) for h, f in windows])
    cfg = DenoiserConfig(
        feature_dim=feat,
        seq_len=k,
        blocks=blocks,
        latent_dim=latent_dim,
        heads=heads,
        ff_dim=ff_dim,
        timesteps=timesteps,
        cond_drop_prob=cond_drop_prob,
        schedule=schedule,
    )
    return DenoiserModel(
        cfg,
        rng=np.random.default_rng(seed),
        dtype=dtype,
        norm_stats=norm,
        basis_name=basis.name,
        motion_shape=(rows, cols),
        history_len=h0.shape[0],
        train=train,
    )


def train(model: DenoiserModel, y0, cond, schedule: NoiseSchedule, steps: int, batch_size: int, rng,
          callback=None) -> list[float]:
    """Run ``steps`` optimiser updates on shuffled minibatches.

    ``callback(step, loss)`` is invoked after every update.
    """
    n = y0.shape[0]
    losses = []
    order = rng.permutation(n)
    pos = 0
    for _ in range(steps):
        if pos + batch_size > n:
            order = rng.permutation(n)
            pos = 0
        idx = order[pos : pos + batch_size]
        pos += batch_size
        loss = train_step(model, (y0[idx], cond[idx]), schedule, rng)
        losses.append(loss)
        if callback is not None:
            callback(model.step, loss)
    return losses


def zero_velocity(history, future_len: int) -> np.ndarray:
    h = np.asarray(history)
    return np.repeat(h[-1:], future_len, axis=0)


def predict_futures(model, history, schedule, config: SampleConfig, num_samples: int, seed: int) -> np.ndarray:
    """``(S, F, C)`` predicted futures (history rows stripped)."""
    out = sample_many(model, history, schedule, config, num_samples, rng=make_rng(seed))
    return out[:, model.history_len :, :]


def evaluate(model, schedule, config: SampleConfig, windows, num_samples: int = 50, tau: float = 0.5,
             threads: int = 1, seed: int = 0, baseline: str | None = None, predictor=None):
    """Mean of the five metrics over test windows.

    Args:
        baseline: ``"zero_vel"`` scores the repeat-last-frame predictor
            instead of the model.
        predictor: optional ``f(index, history) -> (S, F, C)`` override.

    Returns:
        ``(means, per_window)``: dict of metric means and a list of
        per-window metric dicts.
    """
    hist = [h for h, _ in windows]
    fut = [f for _, f in windows]
    groups = metrics.multimodal_groups(hist, fut, tau)
    seeds = np.random.SeedSequence(seed).generate_state(len(windows))

    def one(i):
        h, f = windows[i]
        if predictor is not None:
            preds = predictor(i, h)
        elif baseline == "zero_vel":
            preds = zero_velocity(h, f.shape[0])[None]
        else:
            preds = predict_futures(model, h, schedule, config, num_samples, int(seeds[i]))
        return metrics.evaluate_set(preds, f, groups[i])

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per = list(pool.map(one, range(len(windows))))
    else:
        per = [one(i) for i in range(len(windows))]
    means = {k: float(np.mean([p[k] for p in per])) for k in metrics.METRIC_NAMES}
    return means, per
