"""Command-line entry point.

Settings come from a flat ``key = value`` file (``--config``) overridden by
repeated ``--set key=value`` flags. Every key has a default; unknown keys are
rejected. Failures print one line ``error[CODE]: message`` to stderr and exit
with status 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import struct
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import data_io, metrics, pipeline
from .denoiser import TrainSettings, load_checkpoint, save_checkpoint
from .errors import ConfigError, DivergenceError, FormatError, MotionWaveletError, ShapeError
from .manifold import MotionSequence, decode_array, encode_array, manifold_shape
from .sampler import SampleConfig, controlled_sample_many, frame_mask, joint_mask, make_rng, sample_many
from .schedule import build_schedule
from .wavelet import ALL_BASES, make_basis

log = logging.getLogger("motionwavelet")


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class Key:
    default: object
    kind: type
    help: str


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    low = str(text).strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


KEYS: dict[str, Key] = {
    "data.kind": Key("sine_walk", str, "synthetic motion kind"),
    "data.files": Key("", str, "comma-separated motion files; empty means synthetic"),
    "data.count": Key(64, int, "number of synthetic training sequences"),
    "data.frames": Key(256, int, "frames per synthetic training sequence"),
    "data.joints": Key(5, int, "joints per pose (3 channels each)"),
    "data.fps": Key(30.0, float, "frame rate of synthetic motion"),
    "data.H": Key(16, int, "observed history frames"),
    "data.F": Key(32, int, "predicted future frames"),
    "data.stride": Key(4, int, "window stride over training sequences"),
    "data.seed": Key(0, int, "seed of the synthetic training corpus"),
    "data.test_files": Key("", str, "comma-separated test motion files; empty means synthetic"),
    "data.test_count": Key(20, int, "number of synthetic test sequences (one window each)"),
    "data.test_seed": Key(1, int, "seed of the synthetic test corpus"),
    "model.basis": Key("bior2.8", str, "wavelet basis"),
    "model.blocks": Key(4, int, "denoiser blocks"),
    "model.latent_dim": Key(64, int, "latent width"),
    "model.heads": Key(8, int, "attention heads"),
    "model.ff_dim": Key(128, int, "feed-forward width"),
    "model.cond_drop_prob": Key(0.1, float, "probability of dropping the condition in training"),
    "model.seed": Key(0, int, "initialisation and training seed"),
    "model.train_steps": Key(5000, int, "optimiser updates; 0 writes the initial weights"),
    "model.batch_size": Key(32, int, "minibatch size"),
    "model.lr": Key(2e-3, float, "learning rate"),
    "model.weight_decay": Key(0.01, float, "decoupled weight decay on matrices"),
    "model.grad_clip": Key(1.0, float, "global gradient-norm clip (0 disables)"),
    "model.ema_decay": Key(0.999, float, "EMA decay of inference weights"),
    "schedule.kind": Key("cosine", str, "cosine, linear or sigmoid"),
    "schedule.steps": Key(1000, int, "diffusion steps T"),
    "sample.ddim_steps": Key(100, int, "DDIM steps"),
    "sample.w": Key(1.0, float, "classifier-free guidance scale"),
    "sample.s": Key(1.0, float, "attention-guidance scale"),
    "sample.sigma": Key(2.5, float, "attention-guidance noise scale"),
    "sample.phi_quantile": Key(0.8, float, "attention threshold as a quantile of row importance"),
    "sample.m": Key(3, int, "odd mask width in manifold rows"),
    "sample.tabg_window": Key(90, int, "leading DDIM steps with attention guidance"),
    "sample.wmsg": Key(True, _bool, "project onto the wavelet manifold after each step"),
    "sample.control_window": Key(90, int, "leading DDIM steps with mask control"),
    "sample.x0_clip": Key(0.0, float, "clip of the clean estimate in DDIM steps (0 disables)"),
    "sample.seed": Key(0, int, "sampling seed"),
    "sample.num_samples": Key(1, int, "samples drawn by predict"),
    "eval.num_samples": Key(50, int, "samples per test window"),
    "eval.tau": Key(0.5, float, "last-pose distance for multi-modal ground truth"),
    "eval.seed": Key(0, int, "evaluation seed"),
    "eval.threads": Key(1, int, "worker threads over test windows"),
    "eval.sweep_s": Key("0,1", str, "ablate-guidance values of s"),
    "eval.sweep_sigma": Key("0,2.5", str, "ablate-guidance values of sigma"),
    "eval.sweep_w": Key("0.5,1,1.5", str, "ablate-guidance values of w"),
    "out.dir": Key("out", str, "output directory"),
    "out.svg": Key(True, _bool, "write SVG trajectory plots"),
    "out.plot_channel": Key(0, int, "channel drawn in SVG plots"),
}


class RunConfig(dict):
    """Typed flat settings map."""

    @classmethod
    def defaults(cls) -> "RunConfig":
        return cls({k: v.default for k, v in KEYS.items()})

    def set(self, key: str, raw) -> None:
        key = key.strip()
        if key not in KEYS:
            raise ConfigError(f"unknown config key {key!r}")
        try:
            self[key] = KEYS[key].kind(raw.strip() if isinstance(raw, str) else raw)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key}: {exc}") from None

    def load_text(self, text: str, source: str = "<config>") -> None:
        for no, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{source}:{no}: expected 'key = value'")
            k, v = line.split("=", 1)
            self.set(k, v)

    def dump(self) -> str:
        return "".join(f"{k} = {_fmt_value(self[k])}\n" for k in KEYS)

    def sample_config(self, **over) -> SampleConfig:
        kw = dict(
            ddim_steps=self["sample.ddim_steps"],
            w=self["sample.w"],
            s=self["sample.s"],
            sigma=self["sample.sigma"],
            phi_quantile=self["sample.phi_quantile"],
            m=self["sample.m"],
            tabg_window=self["sample.tabg_window"],
            wmsg_enabled=self["sample.wmsg"],
            control_window=self["sample.control_window"],
            x0_clip=self["sample.x0_clip"],
            seed=self["sample.seed"],
        )
        kw.update(over)
        return SampleConfig(**kw)


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else str(v)


def build_config(args) -> RunConfig:
    cfg = RunConfig.defaults()
    if args.config:
        p = Path(args.config)
        if not p.exists():
            raise ConfigError(f"config file {p} not found")
        cfg.load_text(p.read_text(), str(p))
    for item in args.set or []:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        cfg.set(k, v)
    return cfg


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad number list {text!r}: {exc}") from None


def parse_index_list(text: str) -> list[int]:
    """``"0,1,2"`` or ``"100..124"`` (inclusive) or a mix of both."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if ".." in part:
                a, b = part.split("..", 1)
                lo, hi = int(a), int(b)
                if hi < lo:
                    raise ValueError(f"empty range {part}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
    except ValueError as exc:
        raise ConfigError(f"bad index list {text!r}: {exc}") from None
    return out


# ---------------------------------------------------------------------------
# data


def _files(text: str) -> list[Path]:
    return [Path(p.strip()) for p in text.split(",") if p.strip()]


def train_windows(cfg: RunConfig):
    files = _files(cfg["data.files"])
    if files:
        seqs = [data_io.load_motion(p) for p in files]
    else:
        seqs = data_io.synth_corpus(
            cfg["data.kind"], cfg["data.count"], cfg["data.frames"], cfg["data.joints"], cfg["data.seed"],
            fps=cfg["data.fps"],
        )
    wins, skipped = data_io.make_windows(seqs, cfg["data.H"], cfg["data.F"], cfg["data.stride"])
    if skipped:
        log.warning("skipped %d sequences shorter than H + F", skipped)
    if not wins:
        raise ShapeError("no training windows: every sequence is shorter than H + F")
    return wins


def test_windows(cfg: RunConfig):
    files = _files(cfg["data.test_files"])
    H, F = cfg["data.H"], cfg["data.F"]
    if files:
        seqs = [data_io.load_motion(p) for p in files]
    else:
        seqs = data_io.synth_corpus(
            cfg["data.kind"], cfg["data.test_count"], H + F, cfg["data.joints"], cfg["data.test_seed"],
            fps=cfg["data.fps"],
        )
    # one window per test sequence, taken from its start
    wins, _ = data_io.make_windows([s.data[: H + F] for s in seqs if s.data.shape[0] >= H + F], H, F, 1)
    if not wins:
        raise ShapeError("no test windows: every test sequence is shorter than H + F")
    return wins


# ---------------------------------------------------------------------------
# manifold file


WMAN_MAGIC = b"WMAN"
WMAN_VERSION = 1


def save_manifold(path, y: np.ndarray, original_shape, basis_name: str) -> None:
    y = np.ascontiguousarray(y, dtype="<f8")
    name = basis_name.encode()
    head = struct.pack("<4sBIIII", WMAN_MAGIC, WMAN_VERSION, y.shape[0], y.shape[1], *original_shape)
    Path(path).write_bytes(head + struct.pack("<B", len(name)) + name + y.tobytes())


def load_manifold(path):
    """Returns ``(y, original_shape, basis_name)``."""
    buf = Path(path).read_bytes()
    head = struct.calcsize("<4sBIIII")
    if len(buf) < head + 1:
        raise FormatError(f"{path}: malformed header ({len(buf)} bytes)")
    magic, version, k, w, rows, cols = struct.unpack_from("<4sBIIII", buf)
    if magic != WMAN_MAGIC or version != WMAN_VERSION:
        raise FormatError(f"{path}: malformed header (magic {magic!r}, version {version})")
    n = buf[head]
    name = buf[head + 1 : head + 1 + n].decode("ascii", errors="replace")
    body = buf[head + 1 + n :]
    if len(body) != 8 * k * w:
        raise FormatError(f"{path}: expected {8 * k * w} data bytes, found {len(body)}")
    y = np.frombuffer(body, dtype="<f8").reshape(k, w).astype(np.float64)
    if not np.all(np.isfinite(y)):
        raise FormatError(f"{path}: NaN/Inf entry")
    return y, (rows, cols), name


# ---------------------------------------------------------------------------
# output helpers


def _write_csv(path: Path, header, rows, comments=()) -> None:
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    path.write_text(buf.getvalue())


def _num(v: float) -> str:
    return repr(float(v))


PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def svg_lines(series, title: str, width: int = 640, height: int = 320) -> str:
    """Static line chart. ``series`` is a list of ``(label, color, ys)``."""
    pad = 40
    allv = np.concatenate([np.asarray(ys, dtype=float) for _, _, ys in series])
    lo, hi = float(allv.min()), float(allv.max())
    if hi - lo < 1e-12:
        lo, hi = lo - 1.0, hi + 1.0
    n = max(len(ys) for _, _, ys in series)
    sx = (width - 2 * pad) / max(n - 1, 1)
    sy = (height - 2 * pad) / (hi - lo)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{pad}" y="20" font-family="sans-serif" font-size="13">{title}</text>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="#888"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="#888"/>',
        f'<text x="4" y="{pad + 4}" font-family="sans-serif" font-size="10">{hi:.3g}</text>',
        f'<text x="4" y="{height - pad}" font-family="sans-serif" font-size="10">{lo:.3g}</text>',
    ]
    for i, (label, color, ys) in enumerate(series):
        pts = " ".join(f"{pad + j * sx:.2f},{height - pad - (float(v) - lo) * sy:.2f}" for j, v in enumerate(ys))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        out.append(
            f'<text x="{width - pad - 110}" y="{pad + 14 * i}" font-family="sans-serif" font-size="10" '
            f'fill="{color}">{label}</text>'
        )
    out.append("</svg>\n")
    return "\n".join(out)


def _outdir(cfg: RunConfig) -> Path:
    d = Path(cfg["out.dir"])
    d.mkdir(parents=True, exist_ok=True)
    return d


def _load_model(path):
    p = Path(path)
    if not p.exists():
        raise FormatError(f"checkpoint {p} not found")
    return load_checkpoint(p)


# ---------------------------------------------------------------------------
# commands


def cmd_train(cfg: RunConfig, args) -> int:
    out = _outdir(cfg)
    ckpt = Path(args.checkpoint) if args.checkpoint else out / "model.wmck"
    settings = TrainSettings(
        lr=cfg["model.lr"], weight_decay=cfg["model.weight_decay"], grad_clip=cfg["model.grad_clip"],
        ema_decay=cfg["model.ema_decay"],
    )
    windows = train_windows(cfg)
    if args.resume:
        model, kind = _load_model(args.resume)
        if kind != cfg["schedule.kind"]:
            raise ConfigError(f"checkpoint schedule {kind!r} differs from schedule.kind {cfg['schedule.kind']!r}")
        model.train_settings = settings
    else:
        model = pipeline.build_model(
            windows, basis_name=cfg["model.basis"], blocks=cfg["model.blocks"], latent_dim=cfg["model.latent_dim"],
            heads=cfg["model.heads"], ff_dim=cfg["model.ff_dim"], timesteps=cfg["schedule.steps"],
            schedule=cfg["schedule.kind"], cond_drop_prob=cfg["model.cond_drop_prob"], seed=cfg["model.seed"], train=settings,
        )
    schedule = build_schedule(cfg["schedule.kind"], cfg["schedule.steps"])
    basis = make_basis(model.basis_name)
    y0, cond = pipeline.manifold_pairs(windows, basis, model.norm_stats)
    if y0.shape[1:] != (model.config.seq_len, model.config.feature_dim):
        raise ShapeError(
            f"training manifolds {y0.shape[1:]} do not match checkpoint "
            f"{(model.config.seq_len, model.config.feature_dim)}"
        )
    # a resumed run draws from a stream keyed by its starting step
    rng = np.random.Generator(np.random.Philox(key=cfg["model.seed"], counter=model.step))
    losses = []
    first_step = model.step
    try:
        pipeline.train(
            model, y0, cond, schedule, cfg["model.train_steps"], cfg["model.batch_size"], rng,
            callback=lambda step, loss: losses.append((step, loss)),
        )
    except DivergenceError:
        save_checkpoint(ckpt, model)
        _write_loss(out, losses, first_step)
        raise
    save_checkpoint(ckpt, model)
    _write_loss(out, losses, first_step)
    (out / "config.txt").write_text(cfg.dump())
    if losses:
        print(f"trained {len(losses)} steps (now at step {model.step}); final loss {losses[-1][1]:.6f}")
    else:
        print(f"wrote initial weights at step {model.step}")
    print(f"checkpoint: {ckpt}")
    return 0


def _write_loss(out: Path, losses, first_step: int) -> None:
    path = out / "loss.csv"
    rows = [(s, _num(v)) for s, v in losses]
    if first_step and path.exists():
        with open(path, "a", newline="") as fh:
            csv.writer(fh, lineterminator="\n").writerows(rows)
    else:
        _write_csv(path, ["step", "loss"], rows)


def cmd_predict(cfg: RunConfig, args) -> int:
    model, kind = _load_model(args.checkpoint)
    schedule = build_schedule(kind, model.config.timesteps)
    history = data_io.load_motion(args.history)
    rows, cols = model.motion_shape
    if history.data.shape != (model.history_len, cols):
        raise ShapeError(
            f"history shape {history.data.shape} does not match checkpoint history shape "
            f"{(model.history_len, cols)}"
        )
    gt = data_io.load_motion(args.gt).data if args.gt else None
    if gt is not None and gt.shape != (rows, cols):
        raise ShapeError(f"ground-truth shape {gt.shape} does not match checkpoint motion shape {(rows, cols)}")
    scfg = cfg.sample_config()
    num = args.num_samples or cfg["sample.num_samples"]
    rng = make_rng(scfg.seed)

    if args.mask_joints or args.mask_frames:
        if gt is None:
            raise ConfigError("--mask-joints/--mask-frames need --gt with the full motion to follow")
        mask = np.zeros((rows, cols))
        if args.mask_joints:
            mask = np.maximum(mask, joint_mask((rows, cols), parse_index_list(args.mask_joints)))
        if args.mask_frames:
            mask = np.maximum(mask, frame_mask((rows, cols), parse_index_list(args.mask_frames)))
        preds = controlled_sample_many(model, history.data, gt, mask, schedule, scfg, num, rng=rng)
    else:
        preds = sample_many(model, history.data, schedule, scfg, num, rng=rng)

    out = _outdir(cfg)
    fps = history.fps
    for i, p in enumerate(preds):
        data_io.save_motion(out / f"pred_{i:03d}.wmot", MotionSequence(p, fps=fps))
    header = ["sample", "frame"] + data_io.csv_header(cols // 3)[1:]
    table = [[i, f] + [_num(v) for v in row] for i, p in enumerate(preds) for f, row in enumerate(p)]
    if gt is not None:
        table += [["gt", f] + [_num(v) for v in row] for f, row in enumerate(gt)]
    _write_csv(out / "trajectories.csv", header, table)
    if cfg["out.svg"]:
        ch = cfg["out.plot_channel"]
        if not 0 <= ch < cols:
            raise ConfigError(f"out.plot_channel {ch} outside 0..{cols - 1}")
        series = [("ground truth", "#000000", gt[:, ch])] if gt is not None else []
        series += [(f"sample {i}", PALETTE[i % len(PALETTE)], p[:, ch]) for i, p in enumerate(preds)]
        (out / "trajectories.svg").write_text(svg_lines(series, f"channel {ch}, history {model.history_len} frames"))
    print(f"wrote {len(preds)} predictions to {out}")
    return 0


def _eval_rows(means, num_samples, num_windows, seed):
    return [(k, _num(means[k]), num_samples, num_windows, seed) for k in metrics.METRIC_NAMES]


APD_NOTE = "APD: mean L2 distance over unordered pairs of flattened predicted futures (0 when S = 1)"


def cmd_eval(cfg: RunConfig, args) -> int:
    windows = test_windows(cfg)
    seed = cfg["eval.seed"]
    threads = args.threads or cfg["eval.threads"]
    if args.baseline:
        if args.baseline != "zero_vel":
            raise ConfigError(f"unknown baseline {args.baseline!r}; only zero_vel is available")
        means, _ = pipeline.evaluate(None, None, None, windows, tau=cfg["eval.tau"], baseline="zero_vel")
        num = 1
    else:
        if not args.checkpoint:
            raise ConfigError("eval needs --checkpoint unless --baseline is given")
        model, kind = _load_model(args.checkpoint)
        schedule = build_schedule(kind, model.config.timesteps)
        num = cfg["eval.num_samples"]
        means, _ = pipeline.evaluate(
            model.snapshot(), schedule, cfg.sample_config(), windows, num_samples=num, tau=cfg["eval.tau"],
            threads=threads, seed=seed,
        )
    out = _outdir(cfg)
    path = Path(args.output) if args.output else out / "metrics.csv"
    _write_csv(path, ["metric", "value", "S", "num_histories", "seed"], _eval_rows(means, num, len(windows), seed),
               comments=[APD_NOTE])
    for k in metrics.METRIC_NAMES:
        print(f"{k:6s} {means[k]:.6f}")
    return 0


def cmd_encode(cfg: RunConfig, args) -> int:
    motion = data_io.load_motion(args.input)
    basis = make_basis(args.basis or cfg["model.basis"])
    y = encode_array(motion.data, basis)
    save_manifold(args.output, y, motion.data.shape, basis.name)
    print(f"{motion.data.shape} -> {y.shape} with {basis.name}")
    return 0


def cmd_decode(cfg: RunConfig, args) -> int:
    y, shape, name = load_manifold(args.input)
    basis = make_basis(name)
    if y.shape != manifold_shape(shape, basis):
        raise ShapeError(f"manifold {y.shape} inconsistent with motion {shape} under {name}")
    x = decode_array(y, basis, shape)
    data_io.save_motion(args.output, MotionSequence(x, fps=args.fps))
    print(f"{y.shape} -> {x.shape} with {name}")
    return 0


def cmd_ablate_bases(cfg: RunConfig, args) -> int:
    files = _files(cfg["data.files"])
    if files:
        corpus = [data_io.load_motion(p).data for p in files]
    else:
        corpus = [s.data for s in data_io.synth_corpus(
            cfg["data.kind"], cfg["data.count"], cfg["data.frames"], cfg["data.joints"], cfg["data.seed"],
            fps=cfg["data.fps"],
        )]
    rows = []
    for name in ALL_BASES:
        basis = make_basis(name)
        err = {"pos": [], "vel": [], "acc": []}
        for x in corpus:
            r = decode_array(encode_array(x, basis), basis, x.shape)
            err["pos"].append(((r - x) ** 2).ravel())
            err["vel"].append(((np.diff(r, axis=0) - np.diff(x, axis=0)) ** 2).ravel())
            err["acc"].append(((np.diff(r, 2, axis=0) - np.diff(x, 2, axis=0)) ** 2).ravel())
        rmse = {k: float(np.sqrt(np.concatenate(v).mean())) for k, v in err.items()}
        rows.append((name, "yes" if basis.exact else "no", _num(rmse["pos"]), _num(rmse["vel"]), _num(rmse["acc"])))
        print(f"{name:8s} pos {rmse['pos']:.3e}  vel {rmse['vel']:.3e}  acc {rmse['acc']:.3e}")
    out = _outdir(cfg)
    path = Path(args.output) if args.output else out / "ablate_bases.csv"
    _write_csv(path, ["basis", "perfect_reconstruction", "position_rmse", "velocity_rmse", "acceleration_rmse"], rows)
    return 0


def cmd_ablate_guidance(cfg: RunConfig, args) -> int:
    model, kind = _load_model(args.checkpoint)
    schedule = build_schedule(kind, model.config.timesteps)
    windows = test_windows(cfg)
    snap = model.snapshot()
    num = cfg["eval.num_samples"]
    threads = args.threads or cfg["eval.threads"]
    rows = []
    for s in _floats(cfg["eval.sweep_s"]):
        for sigma in _floats(cfg["eval.sweep_sigma"]):
            for w in _floats(cfg["eval.sweep_w"]):
                scfg = cfg.sample_config(s=s, sigma=sigma, w=w)
                means, _ = pipeline.evaluate(
                    snap, schedule, scfg, windows, num_samples=num, tau=cfg["eval.tau"], threads=threads,
                    seed=cfg["eval.seed"],
                )
                rows.append([_num(s), _num(sigma), _num(w)] + [_num(means[k]) for k in metrics.METRIC_NAMES])
                print(f"s={s:g} sigma={sigma:g} w={w:g}  ADE {means['ADE']:.4f}  FDE {means['FDE']:.4f}")
    out = _outdir(cfg)
    path = Path(args.output) if args.output else out / "ablate_guidance.csv"
    _write_csv(path, ["s", "sigma", "w", *metrics.METRIC_NAMES], rows, comments=[APD_NOTE])
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _config_help() -> str:
    lines = ["config keys (key = value, defaults shown):"]
    for k, v in KEYS.items():
        lines.append(f"  {k} = {_fmt_value(v.default)}    {v.help}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value settings file")
    common.add_argument("--set", action="append", metavar="KEY=VALUE", help="override one setting (repeatable)")
    common.add_argument("--dump-config", metavar="PATH", help="write the effective settings and continue")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="motionwavelet",
        description="Wavelet-manifold diffusion for stochastic motion prediction.",
        epilog=_config_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", parents=[common], help="train a denoiser")
    p.add_argument("--checkpoint", help="output checkpoint (default out.dir/model.wmck)")
    p.add_argument("--resume", help="continue training from this checkpoint")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", parents=[common], help="sample futures for one history")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--history", required=True, help="motion file with exactly H frames")
    p.add_argument("--gt", help="full motion (H + F frames) for plots and mask control")
    p.add_argument("--num-samples", type=int, help="overrides sample.num_samples")
    p.add_argument("--mask-joints", help="joints following --gt, e.g. 0,1,2")
    p.add_argument("--mask-frames", help="frames following --gt, e.g. 40..47")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("eval", parents=[common], help="score test windows with all metrics")
    p.add_argument("--checkpoint")
    p.add_argument("--baseline", help="zero_vel scores the repeat-last-pose predictor")
    p.add_argument("--threads", type=int, help="overrides eval.threads")
    p.add_argument("--output", help="metrics CSV (default out.dir/metrics.csv)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("encode", parents=[common], help="motion file to manifold file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--basis", help="overrides model.basis")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="manifold file to motion file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--fps", type=float, default=30.0)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("ablate-bases", parents=[common], help="roundtrip RMSE per wavelet basis")
    p.add_argument("--output")
    p.set_defaults(func=cmd_ablate_bases)

    p = sub.add_parser("ablate-guidance", parents=[common], help="metric sweep over s, sigma and w")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--threads", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_ablate_guidance)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = build_config(args)
        if args.dump_config:
            Path(args.dump_config).write_text(cfg.dump())
        t0 = time.perf_counter()
        rc = args.func(cfg, args)
        log.info("%s finished in %.1fs", args.command, time.perf_counter() - t0)
        return rc
    except MotionWaveletError as exc:
        print(f"error[{exc.code}]: {_one_line(exc)}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error[E_IO]: {_one_line(exc)}", file=sys.stderr)
        return 2


def _one_line(exc) -> str:
    return " ".join(str(exc).split())


if __name__ == "__main__":
    sys.exit(main())
