"""Noise-prediction network over wavelet manifolds.

The network is a small stack of blocks, each a pre-norm temporal multi-head
self-attention over the K manifold rows followed by a pre-norm position-wise
feed-forward feature mixer, both residual. Inputs are projected to the latent
width and summed with a learned row embedding, a sinusoidal timestep
embedding and either a projected condition manifold or a learned null token.
The condition projection is a sum of ``COND_TERMS`` separable maps, each a
learned ``K x K`` mix across manifold rows followed by a feature projection.
The predicted noise is ``sqrt(1 - abar_t) * y_t + sqrt(abar_t) * f``, so the
head's target is unit scale at every step and its errors are not amplified
when ``abar_t`` is tiny. The head is ``f = g - sqrt(1 - abar_t) * P(cond)``:
``g`` is the network output and ``P`` a step-independent linear map of the
condition (same separable form as the condition embedding, zero at init),
which makes the clean estimate ``sqrt(abar_t) y_t + (1 - abar_t) P(cond)
- sqrt(1 - abar_t) g``. ``P`` is learned where the loss weight is large and
carries over unchanged to the noisiest steps.

Everything is plain numpy with a hand-written backward pass. Parameters live
in an ordered dict whose order is the checkpoint order.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DivergenceError, FormatError, ShapeError
from .manifold import NormStats
from .schedule import SCHEDULE_KINDS, NoiseSchedule, build_schedule, check_step, q_sample_batch

LN_EPS = 1e-5
# one row-mixing term per (output, input) pair of temporal bands
COND_TERMS = 4


@dataclass(frozen=True)
class DenoiserConfig:
    feature_dim: int
    seq_len: int
    blocks: int = 4
    latent_dim: int = 64
    heads: int = 8
    ff_dim: int = 128
    timesteps: int = 1000
    cond_drop_prob: float = 0.1
    schedule: str = "cosine"

    def __post_init__(self):
        for name in ("feature_dim", "seq_len", "blocks", "latent_dim", "heads", "ff_dim", "timesteps"):
            if getattr(self, name) < 1:
                raise ShapeError(f"{name} must be >= 1")
        if self.latent_dim % self.heads:
            raise ShapeError(f"latent_dim {self.latent_dim} not divisible by heads {self.heads}")
        if not 0.0 <= self.cond_drop_prob <= 1.0:
            raise ShapeError(f"cond_drop_prob must lie in [0, 1], got {self.cond_drop_prob}")
        if self.schedule not in SCHEDULE_KINDS:
            raise ShapeError(f"unknown schedule kind {self.schedule!r}")

    @property
    def recorded_blocks(self) -> tuple[int, ...]:
        """The two middle blocks, ``B//2 - 1`` and ``B//2`` (just block 0 when B = 1)."""
        b = self.blocks
        return (0,) if b == 1 else (b // 2 - 1, b // 2)


@dataclass
class AttentionRecord:
    """Head-averaged ``(..., K, K)`` attention maps of the recorded blocks."""

    per_layer: list = field(default_factory=list)


def param_shapes(cfg: DenoiserConfig) -> dict[str, tuple[int, ...]]:
    d, f, k, ff = cfg.latent_dim, cfg.feature_dim, cfg.seq_len, cfg.ff_dim
    shapes = {
        "in_w": (f, d),
        "in_b": (d,),
        "cond_w": (COND_TERMS, f, d),
        "cond_b": (d,),
        "cond_rows": (COND_TERMS, k, k),
        "null_token": (d,),
        "row_emb": (k, d),
        "time_w": (d, d),
        "time_b": (d,),
    }
    for i in range(cfg.blocks):
        shapes.update(
            {
                f"b{i}.ln1_g": (d,),
                f"b{i}.ln1_b": (d,),
                f"b{i}.qkv_w": (d, 3 * d),
                f"b{i}.qkv_b": (3 * d,),
                f"b{i}.proj_w": (d, d),
                f"b{i}.proj_b": (d,),
                f"b{i}.ln2_g": (d,),
                f"b{i}.ln2_b": (d,),
                f"b{i}.ff1_w": (d, ff),
                f"b{i}.ff1_b": (ff,),
                f"b{i}.ff2_w": (ff, d),
                f"b{i}.ff2_b": (d,),
                f"b{i}.mod_w": (d, 4 * d),
                f"b{i}.mod_b": (4 * d,),
            }
        )
    shapes.update({"lnf_g": (d,), "lnf_b": (d,), "out_w": (d, f), "out_b": (f,)})
    shapes.update({"prior_rows": (COND_TERMS, k, k), "prior_w": (COND_TERMS, f, f)})
    return shapes


def init_params(cfg: DenoiserConfig, rng: np.random.Generator, dtype=np.float32) -> dict[str, np.ndarray]:
    params = {}
    for name, shape in param_shapes(cfg).items():
        leaf = name.split(".")[-1]
        if leaf.endswith("_g"):
            arr = np.ones(shape)
        elif leaf.endswith("_b"):
            arr = np.zeros(shape)
        elif leaf == "mod_w":
            # zero modulation at init: blocks start as plain pre-norm blocks
            arr = np.zeros(shape)
        elif leaf == "prior_w":
            # no condition prior at init
            arr = np.zeros(shape)
        elif leaf in ("cond_rows", "prior_rows"):
            # identity row mixing: the condition starts as a per-row projection
            arr = np.tile(np.eye(shape[1]), (shape[0], 1, 1))
        elif leaf == "cond_w":
            arr = rng.normal(0.0, 1.0 / math.sqrt(shape[0] * shape[1]), size=shape)
        elif leaf in ("null_token", "row_emb"):
            arr = rng.normal(0.0, 0.02, size=shape)
        else:
            arr = rng.normal(0.0, 1.0 / math.sqrt(shape[0]), size=shape)
        params[name] = arr.astype(dtype)
    return params


@lru_cache(maxsize=16)
def _sqrt_abar(kind: str, steps: int) -> tuple[np.ndarray, np.ndarray]:
    ab = build_schedule(kind, steps).alpha_bar
    return np.sqrt(1.0 - ab), np.sqrt(ab)


def output_gains(cfg: DenoiserConfig, t) -> tuple[np.ndarray, np.ndarray]:
    """Skip and head gains ``(sqrt(1 - abar_t), sqrt(abar_t))`` per step."""
    skip, head = _sqrt_abar(cfg.schedule, cfg.timesteps)
    t = np.asarray(t, dtype=np.int64)
    return skip[t - 1], head[t - 1]


def timestep_embedding(t, dim: int) -> np.ndarray:
    """Sinusoidal embedding of integer steps, shape ``(B, dim)``."""
    t = np.asarray(t, dtype=np.float64).reshape(-1, 1)
    half = dim // 2
    freqs = np.exp(-math.log(10000.0) * np.arange(half) / max(half, 1))
    args = t * freqs[None, :]
    emb = np.concatenate([np.sin(args), np.cos(args)], axis=1)
    if dim % 2:
        emb = np.concatenate([emb, np.zeros((emb.shape[0], 1))], axis=1)
    return emb


# ---------------------------------------------------------------------------
# layers


def _layernorm(x, g, b):
    mu = x.mean(axis=-1, keepdims=True)
    xc = x - mu
    rstd = 1.0 / np.sqrt((xc * xc).mean(axis=-1, keepdims=True) + LN_EPS)
    xh = xc * rstd
    return xh * g + b, (xh, rstd)


def _layernorm_back(dy, g, cache):
    xh, rstd = cache
    dxh = dy * g
    dx = rstd * (dxh - dxh.mean(axis=-1, keepdims=True) - xh * (dxh * xh).mean(axis=-1, keepdims=True))
    red = tuple(range(dy.ndim - 1))
    return dx, (dy * xh).sum(axis=red), dy.sum(axis=red)


def _softmax(s):
    s = s - s.max(axis=-1, keepdims=True)
    e = np.exp(s)
    return e / e.sum(axis=-1, keepdims=True)


def _sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def _split_heads(x, heads):
    b, k, d = x.shape
    return x.reshape(b, k, heads, d // heads).transpose(0, 2, 1, 3)


def _merge_heads(x):
    b, h, k, dh = x.shape
    return x.transpose(0, 2, 1, 3).reshape(b, k, h * dh)


def _sum_lead(x):
    return x.reshape(-1, x.shape[-1]).sum(axis=0)


def _matgrad(inp, dout):
    """Gradient of ``inp @ w`` with respect to ``w``."""
    return inp.reshape(-1, inp.shape[-1]).T @ dout.reshape(-1, dout.shape[-1])


# ---------------------------------------------------------------------------
# forward / backward


def forward_batch(params, cfg: DenoiserConfig, y, t, cond=None, keep=None, record=True, cache=False):
    """Batched forward pass.

    Args:
        y: noised manifolds, ``(B, K, F)``.
        t: 1-based steps, scalar or ``(B,)``.
        cond: condition manifolds ``(B, K, F)`` or None for the null token.
        keep: boolean ``(B,)``; False replaces that sample's condition with
            the null token. Defaults to "all kept" when ``cond`` is given.
        record: collect head-averaged attention of the recorded blocks.
        cache: also return the activations needed by :func:`backward_batch`.

    Returns:
        ``(eps, AttentionRecord)`` or ``(eps, AttentionRecord, cache)``.
    """
    p = params
    dtype = p["in_w"].dtype
    y = np.asarray(y, dtype=dtype)
    bsz, k, f = y.shape
    if (k, f) != (cfg.seq_len, cfg.feature_dim):
        raise ShapeError(f"input manifold {(k, f)} does not match model {(cfg.seq_len, cfg.feature_dim)}")
    t = np.broadcast_to(np.asarray(t), (bsz,)).astype(np.int64)
    if np.any(t < 1) or np.any(t > cfg.timesteps):
        raise ShapeError(f"timestep outside [1, {cfg.timesteps}]")
    if cond is not None:
        cond = np.asarray(cond, dtype=dtype)
        if cond.shape != y.shape:
            raise ShapeError(f"condition {cond.shape} does not match input {y.shape}")
        keep = np.ones(bsz, dtype=bool) if keep is None else np.asarray(keep, dtype=bool)
    else:
        keep = np.zeros(bsz, dtype=bool)

    c = {"y": y, "cond": cond, "keep": keep}
    temb_in = timestep_embedding(t, cfg.latent_dim).astype(dtype)
    temb = temb_in @ p["time_w"] + p["time_b"]
    c["temb_in"] = temb_in
    temb_sg = _sigmoid(temb)
    temb_act = temb * temb_sg
    c.update(temb=temb, temb_sg=temb_sg, temb_act=temb_act)

    h = y @ p["in_w"] + p["in_b"] + p["row_emb"] + temb[:, None, :]
    cemb = np.broadcast_to(p["null_token"], (bsz, cfg.latent_dim)).astype(dtype)[:, None, :]
    cemb = np.repeat(cemb, k, axis=1)
    if keep.any():
        mixed = p["cond_rows"][None] @ cond[keep][:, None]
        c["cond_mixed"] = mixed
        cemb[keep] = (mixed @ p["cond_w"][None]).sum(axis=1) + p["cond_b"]
    h = h + cemb

    heads = cfg.heads
    scale = 1.0 / math.sqrt(cfg.latent_dim // heads)
    rec = AttentionRecord()
    blocks = []
    for i in range(cfg.blocks):
        pre = f"b{i}."
        bc = {}
        mod = temb_act @ p[pre + "mod_w"] + p[pre + "mod_b"]
        sc1, sh1, sc2, sh2 = (m[:, None, :] for m in np.split(mod, 4, axis=-1))
        v1, bc["ln1"] = _layernorm(h, p[pre + "ln1_g"], p[pre + "ln1_b"])
        u = v1 * (1.0 + sc1) + sh1
        qkv = u @ p[pre + "qkv_w"] + p[pre + "qkv_b"]
        q, kk, v = (_split_heads(z, heads) for z in np.split(qkv, 3, axis=-1))
        att = _softmax((q @ kk.transpose(0, 1, 3, 2)) * scale)
        o = _merge_heads(att @ v)
        h = h + o @ p[pre + "proj_w"] + p[pre + "proj_b"]
        v2, bc["ln2"] = _layernorm(h, p[pre + "ln2_g"], p[pre + "ln2_b"])
        u2 = v2 * (1.0 + sc2) + sh2
        z1 = u2 @ p[pre + "ff1_w"] + p[pre + "ff1_b"]
        sg = _sigmoid(z1)
        a1 = z1 * sg
        h = h + a1 @ p[pre + "ff2_w"] + p[pre + "ff2_b"]
        if record and i in cfg.recorded_blocks:
            rec.per_layer.append(att.mean(axis=1))
        if cache:
            bc.update(u=u, q=q, k=kk, v=v, att=att, o=o, u2=u2, z1=z1, sg=sg, a1=a1, v1=v1, v2=v2, sc1=sc1, sc2=sc2)
            blocks.append(bc)

    hf, lnf = _layernorm(h, p["lnf_g"], p["lnf_b"])
    skip, head = (g.astype(dtype)[:, None, None] for g in output_gains(cfg, t))
    f_head = hf @ p["out_w"] + p["out_b"]
    if keep.any():
        pmix = p["prior_rows"][None] @ cond[keep][:, None]
        c["prior_mixed"] = pmix
        f_head[keep] -= skip[keep] * (pmix @ p["prior_w"][None]).sum(axis=1)
    out = skip * y + head * f_head
    if not cache:
        return out, rec
    c.update(blocks=blocks, lnf=lnf, hf=hf, scale=scale, head=head, skip=skip)
    return out, rec, c


def backward_batch(params, cfg: DenoiserConfig, c, dout) -> dict[str, np.ndarray]:
    p = params
    g = {}
    heads = cfg.heads
    scale = c["scale"]
    dout = dout * c["head"]
    keep = c["keep"]
    if keep.any():
        dprior = -(c["skip"][keep] * dout[keep])[:, None]
        pmix = c["prior_mixed"]
        g["prior_w"] = (pmix.transpose(0, 1, 3, 2) @ dprior).sum(axis=0)
        dpmix = dprior @ p["prior_w"].transpose(0, 2, 1)[None]
        g["prior_rows"] = (dpmix @ c["cond"][keep][:, None].transpose(0, 1, 3, 2)).sum(axis=0)
    else:
        g["prior_w"] = np.zeros_like(p["prior_w"])
        g["prior_rows"] = np.zeros_like(p["prior_rows"])
    g["out_w"] = _matgrad(c["hf"], dout)
    g["out_b"] = _sum_lead(dout)
    dh, g["lnf_g"], g["lnf_b"] = _layernorm_back(dout @ p["out_w"].T, p["lnf_g"], c["lnf"])

    dact = np.zeros_like(c["temb_act"])
    for i in reversed(range(cfg.blocks)):
        pre = f"b{i}."
        bc = c["blocks"][i]
        # feed-forward
        g[pre + "ff2_w"] = _matgrad(bc["a1"], dh)
        g[pre + "ff2_b"] = _sum_lead(dh)
        da1 = dh @ p[pre + "ff2_w"].T
        sg, z1 = bc["sg"], bc["z1"]
        dz1 = da1 * sg * (1.0 + z1 * (1.0 - sg))
        g[pre + "ff1_w"] = _matgrad(bc["u2"], dz1)
        g[pre + "ff1_b"] = _sum_lead(dz1)
        du2 = dz1 @ p[pre + "ff1_w"].T
        dsc2 = (du2 * bc["v2"]).sum(axis=1)
        dsh2 = du2.sum(axis=1)
        dx, g[pre + "ln2_g"], g[pre + "ln2_b"] = _layernorm_back(du2 * (1.0 + bc["sc2"]), p[pre + "ln2_g"], bc["ln2"])
        dh = dh + dx
        # attention
        g[pre + "proj_w"] = _matgrad(bc["o"], dh)
        g[pre + "proj_b"] = _sum_lead(dh)
        do = _split_heads(dh @ p[pre + "proj_w"].T, heads)
        att, q, kk, v = bc["att"], bc["q"], bc["k"], bc["v"]
        dv = att.transpose(0, 1, 3, 2) @ do
        datt = do @ v.transpose(0, 1, 3, 2)
        ds = att * (datt - (datt * att).sum(axis=-1, keepdims=True)) * scale
        dq = ds @ kk
        dk = ds.transpose(0, 1, 3, 2) @ q
        dqkv = np.concatenate([_merge_heads(dq), _merge_heads(dk), _merge_heads(dv)], axis=-1)
        g[pre + "qkv_w"] = _matgrad(bc["u"], dqkv)
        g[pre + "qkv_b"] = _sum_lead(dqkv)
        du = dqkv @ p[pre + "qkv_w"].T
        dsc1 = (du * bc["v1"]).sum(axis=1)
        dsh1 = du.sum(axis=1)
        dx, g[pre + "ln1_g"], g[pre + "ln1_b"] = _layernorm_back(du * (1.0 + bc["sc1"]), p[pre + "ln1_g"], bc["ln1"])
        dh = dh + dx
        dmod = np.concatenate([dsc1, dsh1, dsc2, dsh2], axis=-1)
        g[pre + "mod_w"] = c["temb_act"].T @ dmod
        g[pre + "mod_b"] = dmod.sum(axis=0)
        dact = dact + dmod @ p[pre + "mod_w"].T

    g["in_w"] = _matgrad(c["y"], dh)
    g["in_b"] = _sum_lead(dh)
    g["row_emb"] = dh.sum(axis=0)
    sg = c["temb_sg"]
    dtemb = dh.sum(axis=1) + dact * sg * (1.0 + c["temb"] * (1.0 - sg))
    g["time_w"] = c["temb_in"].T @ dtemb
    g["time_b"] = dtemb.sum(axis=0)
    g["null_token"] = _sum_lead(dh[~keep]) if (~keep).any() else np.zeros_like(p["null_token"])
    if keep.any():
        dk, mixed = dh[keep][:, None], c["cond_mixed"]
        g["cond_w"] = (mixed.transpose(0, 1, 3, 2) @ dk).sum(axis=0)
        dmixed = dk @ p["cond_w"].transpose(0, 2, 1)[None]
        g["cond_rows"] = (dmixed @ c["cond"][keep][:, None].transpose(0, 1, 3, 2)).sum(axis=0)
        g["cond_b"] = _sum_lead(dh[keep])
    else:
        g["cond_w"] = np.zeros_like(p["cond_w"])
        g["cond_b"] = np.zeros_like(p["cond_b"])
        g["cond_rows"] = np.zeros_like(p["cond_rows"])
    return {name: g[name].astype(p[name].dtype, copy=False) for name in p}


def loss_and_grads(params, cfg: DenoiserConfig, y_t, t, noise, cond=None, keep=None):
    """Mean squared noise-prediction error and its parameter gradients."""
    out, _, c = forward_batch(params, cfg, y_t, t, cond=cond, keep=keep, record=False, cache=True)
    diff = out - np.asarray(noise, dtype=out.dtype)
    loss = float(np.mean(diff.astype(np.float64) ** 2))
    dout = (2.0 / diff.size) * diff
    return loss, backward_batch(params, cfg, c, dout)


# ---------------------------------------------------------------------------
# model state


@dataclass
class TrainSettings:
    lr: float = 1e-4
    weight_decay: float = 0.01
    betas: tuple[float, float] = (0.9, 0.999)
    adam_eps: float = 1e-8
    grad_clip: float = 1.0
    ema_decay: float = 0.999


class DenoiserModel:
    """Parameters, optimiser state and EMA weights of one denoiser.

    ``basis_name``, ``motion_shape`` (frames, channels) and ``history_len``
    describe the data the model was built for; ``norm_stats`` standardise
    motion channels before encoding.
    """

    def __init__(
        self,
        config: DenoiserConfig,
        params=None,
        *,
        rng: np.random.Generator | None = None,
        dtype=np.float32,
        norm_stats: NormStats | None = None,
        basis_name: str = "bior2.8",
        motion_shape: tuple[int, int] | None = None,
        history_len: int = 0,
        train: TrainSettings | None = None,
    ):
        self.config = config
        if params is None:
            rng = rng if rng is not None else np.random.default_rng(0)
            params = init_params(config, rng, dtype=dtype)
        self.params = params
        self.ema = None
        self.adam_m = None
        self.adam_v = None
        self.step = 0
        self.norm_stats = norm_stats
        self.basis_name = basis_name
        self.motion_shape = motion_shape
        self.history_len = history_len
        self.train_settings = train or TrainSettings()

    @property
    def dtype(self):
        return self.params["in_w"].dtype

    @property
    def num_params(self) -> int:
        return sum(v.size for v in self.params.values())

    def inference_params(self):
        return self.ema if self.ema is not None else self.params

    def predict(self, y_t, t, cond=None, record=True):
        """Batch-aware noise prediction with the inference (EMA) weights.

        Accepts ``(K, F)`` or ``(B, K, F)`` inputs; returns float64 noise of
        the same shape and the attention record.
        """
        y = np.asarray(y_t)
        single = y.ndim == 2
        yb = y[None] if single else y
        cb = None
        if cond is not None:
            cb = np.asarray(cond)
            cb = cb[None] if cb.ndim == 2 else cb
            if cb.shape[1:] != yb.shape[1:] or cb.shape[0] not in (1, yb.shape[0]):
                raise ShapeError(f"condition {cb.shape} does not match input {yb.shape}")
            cb = np.broadcast_to(cb, yb.shape)
        out, rec = forward_batch(self.inference_params(), self.config, yb, t, cond=cb, record=record)
        out = out.astype(np.float64)
        if single:
            out = out[0]
            rec = AttentionRecord([a[0].astype(np.float64) for a in rec.per_layer])
        else:
            rec = AttentionRecord([a.astype(np.float64) for a in rec.per_layer])
        return out, rec

    def snapshot(self) -> "DenoiserModel":
        """Read-only copy holding the inference weights only."""
        snap = DenoiserModel(
            self.config,
            {k: v.copy() for k, v in self.inference_params().items()},
            norm_stats=self.norm_stats,
            basis_name=self.basis_name,
            motion_shape=self.motion_shape,
            history_len=self.history_len,
            train=self.train_settings,
        )
        snap.step = self.step
        for v in snap.params.values():
            v.setflags(write=False)
        return snap

    def astype(self, dtype) -> "DenoiserModel":
        m = DenoiserModel(
            self.config,
            {k: v.astype(dtype) for k, v in self.params.items()},
            norm_stats=self.norm_stats,
            basis_name=self.basis_name,
            motion_shape=self.motion_shape,
            history_len=self.history_len,
            train=self.train_settings,
        )
        m.step = self.step
        return m


def forward(model: DenoiserModel, y_t, t, cond=None):
    """Predicted noise and attention record for one manifold (or a batch)."""
    check_step(int(np.max(t)), model.config.timesteps)
    return model.predict(y_t, t, cond=cond, record=True)


def _adamw_update(model: DenoiserModel, grads) -> None:
    s = model.train_settings
    if model.adam_m is None:
        model.adam_m = {k: np.zeros_like(v) for k, v in model.params.items()}
        model.adam_v = {k: np.zeros_like(v) for k, v in model.params.items()}
    norm = math.sqrt(sum(float(np.sum(g.astype(np.float64) ** 2)) for g in grads.values()))
    clip = min(1.0, s.grad_clip / (norm + 1e-12)) if s.grad_clip > 0 else 1.0
    model.step += 1
    b1, b2 = s.betas
    c1 = 1.0 - b1**model.step
    c2 = 1.0 - b2**model.step
    for name, w in model.params.items():
        gr = grads[name] * clip
        m = model.adam_m[name]
        v = model.adam_v[name]
        m *= b1
        m += (1.0 - b1) * gr
        v *= b2
        v += (1.0 - b2) * gr * gr
        if s.weight_decay and w.ndim > 1:
            w -= s.lr * s.weight_decay * w
        w -= s.lr * (m / c1) / (np.sqrt(v / c2) + s.adam_eps)
    _update_ema(model)


def _update_ema(model: DenoiserModel) -> None:
    if model.ema is None:
        model.ema = {k: v.copy() for k, v in model.params.items()}
        return
    decay = min(model.train_settings.ema_decay, (1.0 + model.step) / (10.0 + model.step))
    for name, w in model.params.items():
        e = model.ema[name]
        e *= decay
        e += (1.0 - decay) * w


def train_step(model: DenoiserModel, batch, schedule: NoiseSchedule, rng: np.random.Generator) -> float:
    """One optimiser update on the noise-prediction objective.

    Args:
        batch: pair ``(y0, cond)`` of ``(B, K, F)`` arrays (clean manifolds and
            their padded-history conditions).

    Returns:
        The pre-update mean squared error.
    """
    y0, cond = (np.asarray(a) for a in batch)
    if y0.ndim == 2:
        y0, cond = y0[None], cond[None]
    if y0.shape[0] == 0:
        raise ShapeError("train_step: empty batch")
    if y0.shape != cond.shape:
        raise ShapeError(f"train_step: y0 {y0.shape} and cond {cond.shape} differ")
    cfg = model.config
    if (schedule.kind, schedule.steps) != (cfg.schedule, cfg.timesteps):
        raise ShapeError(
            f"schedule {schedule.kind}/{schedule.steps} does not match the model's {cfg.schedule}/{cfg.timesteps}"
        )
    bsz = y0.shape[0]
    t = rng.integers(1, schedule.steps + 1, size=bsz)
    noise = rng.standard_normal(y0.shape)
    keep = rng.random(bsz) >= model.config.cond_drop_prob
    y_t = q_sample_batch(y0, t, noise, schedule)
    loss, grads = loss_and_grads(model.params, model.config, y_t, t, noise, cond=cond, keep=keep)
    if not math.isfinite(loss):
        raise DivergenceError(
            f"loss became {loss} at step {model.step}; lower the learning rate "
            f"(now {model.train_settings.lr}) or check input normalisation"
        )
    _adamw_update(model, grads)
    return loss


def finite_diff_check(model: DenoiserModel, y_t, t, cond=None, epsilon: float = 1e-4, noise=None, keep=None,
                      max_entries: int | None = None, rng=None) -> float:
    """Max relative error between analytic and central-difference gradients.

    The relative error of one parameter tensor is
    ``||g_analytic - g_fd|| / (||g_analytic|| + ||g_fd||)``; the maximum over
    tensors is returned. Meant for small float64 models.
    """
    params = {k: v.astype(np.float64) for k, v in model.params.items()}
    cfg = model.config
    y = np.asarray(y_t, dtype=np.float64)
    y = y[None] if y.ndim == 2 else y
    if cond is not None:
        cond = np.asarray(cond, dtype=np.float64)
        cond = cond[None] if cond.ndim == 2 else cond
    if noise is None:
        noise = np.random.default_rng(1234).standard_normal(y.shape)
    noise = np.asarray(noise, dtype=np.float64).reshape(y.shape)

    def loss_fn():
        out, _ = forward_batch(params, cfg, y, t, cond=cond, keep=keep, record=False)
        return float(np.mean((out - noise) ** 2))

    _, grads = loss_and_grads(params, cfg, y, t, noise, cond=cond, keep=keep)
    worst = 0.0
    for name, w in params.items():
        flat = w.reshape(-1)
        idx = np.arange(flat.size)
        if max_entries is not None and flat.size > max_entries:
            idx = (rng or np.random.default_rng(0)).choice(flat.size, max_entries, replace=False)
        fd = np.empty(idx.size)
        for j, i in enumerate(idx):
            orig = flat[i]
            flat[i] = orig + epsilon
            lp = loss_fn()
            flat[i] = orig - epsilon
            lm = loss_fn()
            flat[i] = orig
            fd[j] = (lp - lm) / (2.0 * epsilon)
        an = grads[name].reshape(-1)[idx]
        denom = np.linalg.norm(an) + np.linalg.norm(fd)
        if denom > 0:
            worst = max(worst, float(np.linalg.norm(an - fd) / denom))
    return worst


# ---------------------------------------------------------------------------
# checkpoint I/O

CKPT_MAGIC = b"WMCK"
CKPT_VERSION = 1
_CFG_FIELDS = ("blocks", "latent_dim", "heads", "feature_dim", "seq_len", "ff_dim", "timesteps")


def _pack_str(s: str) -> bytes:
    raw = s.encode("ascii")
    return struct.pack("<B", len(raw)) + raw


def save_checkpoint(path, model: DenoiserModel) -> None:
    """Write a ``WMCK`` checkpoint (layout documented in the README)."""
    rows, cols = model.motion_shape or (0, 0)
    ns = model.norm_stats or NormStats.identity(cols)
    parts = [CKPT_MAGIC, struct.pack("<B", CKPT_VERSION)]
    parts.append(struct.pack("<7I", *(getattr(model.config, f) for f in _CFG_FIELDS)))
    parts.append(struct.pack("<4I", rows, cols, model.history_len, model.step))
    parts.append(struct.pack("<d", model.config.cond_drop_prob))
    parts.append(_pack_str(model.basis_name))
    parts.append(_pack_str(model.config.schedule))
    parts.append(struct.pack("<I", len(ns.mean)))
    parts.append(np.asarray(ns.mean, dtype="<f8").tobytes())
    parts.append(np.asarray(ns.std, dtype="<f8").tobytes())
    has_ema = model.ema is not None
    parts.append(struct.pack("<B", 1 if has_ema else 0))
    for store in (model.params, model.ema) if has_ema else (model.params,):
        for name in param_shapes(model.config):
            parts.append(np.ascontiguousarray(store[name], dtype="<f4").tobytes())
    with open(path, "wb") as fh:
        fh.write(b"".join(parts))


class _Reader:
    def __init__(self, buf: bytes, path):
        self.buf = buf
        self.pos = 0
        self.path = path

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.buf):
            raise FormatError(f"{self.path}: unexpected end of checkpoint at byte {self.pos}")
        out = self.buf[self.pos : self.pos + n]
        self.pos += n
        return out

    def unpack(self, fmt: str):
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def string(self) -> str:
        (n,) = self.unpack("<B")
        return self.take(n).decode("ascii")


def load_checkpoint(path, dtype=np.float32) -> tuple[DenoiserModel, str]:
    """Read a checkpoint; returns ``(model, schedule_kind)``."""
    with open(path, "rb") as fh:
        r = _Reader(fh.read(), path)
    if r.take(4) != CKPT_MAGIC:
        raise FormatError(f"{path}: not a WMCK checkpoint")
    (version,) = r.unpack("<B")
    if version != CKPT_VERSION:
        raise FormatError(f"{path}: unsupported checkpoint version {version}")
    vals = r.unpack("<7I")
    rows, cols, hist, step = r.unpack("<4I")
    (drop,) = r.unpack("<d")
    basis_name = r.string()
    kind = r.string()
    if kind not in SCHEDULE_KINDS:
        raise FormatError(f"{path}: unknown schedule kind {kind!r}")
    cfg = DenoiserConfig(**dict(zip(_CFG_FIELDS, vals)), cond_drop_prob=drop, schedule=kind)
    (nch,) = r.unpack("<I")
    mean = np.frombuffer(r.take(8 * nch), dtype="<f8").astype(np.float64)
    std = np.frombuffer(r.take(8 * nch), dtype="<f8").astype(np.float64)
    (has_ema,) = r.unpack("<B")
    shapes = param_shapes(cfg)

    def read_store():
        store = {}
        for name, shape in shapes.items():
            n = int(np.prod(shape))
            store[name] = np.frombuffer(r.take(4 * n), dtype="<f4").reshape(shape).astype(dtype)
        return store

    params = read_store()
    ema = read_store() if has_ema else None
    if r.pos != len(r.buf):
        raise FormatError(f"{path}: {len(r.buf) - r.pos} trailing bytes")
    model = DenoiserModel(
        cfg,
        params,
        norm_stats=NormStats(mean, std) if nch else None,
        basis_name=basis_name,
        motion_shape=(rows, cols) if rows else None,
        history_len=hist,
    )
    model.ema = ema
    model.step = step
    return model, kind

