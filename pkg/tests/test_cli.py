import csv
import subprocess
import sys

import numpy as np
import pytest

from motionwavelet import cli
from motionwavelet.data_io import load_motion, save_motion, synth_motion
from motionwavelet.denoiser import load_checkpoint
from motionwavelet.manifold import MotionSequence

TINY = [
    "data.count=4", "data.frames=48", "data.joints=2", "data.H=8", "data.F=8", "data.stride=8",
    "data.test_count=3", "model.blocks=2", "model.latent_dim=16", "model.heads=2", "model.ff_dim=32",
    "model.train_steps=6", "model.batch_size=4", "schedule.steps=50", "sample.ddim_steps=5",
    "sample.tabg_window=4", "sample.control_window=5", "eval.num_samples=3",
]


def run(tmp_path, *argv, extra=()):
    sets = [a for kv in [*TINY, f"out.dir={tmp_path}", *extra] for a in ("--set", kv)]
    return cli.main([argv[0], *sets, *argv[1:]])


@pytest.fixture
def trained(tmp_path):
    assert run(tmp_path, "train") == 0
    return tmp_path / "model.wmck"


def read_csv(path):
    lines = [ln for ln in path.read_text().splitlines() if not ln.startswith("#")]
    return list(csv.reader(lines))


class TestConfig:
    def test_unknown_key(self, tmp_path, capsys):
        assert cli.main(["ablate-bases", "--set", "model.colour=red"]) == 2
        err = capsys.readouterr().err.strip()
        assert err.startswith("error[E_CONFIG]:") and "\n" not in err

    def test_bad_value(self, capsys):
        assert cli.main(["ablate-bases", "--set", "data.count=many"]) == 2
        assert "error[E_CONFIG]" in capsys.readouterr().err

    def test_file_and_override(self, tmp_path):
        f = tmp_path / "run.cfg"
        f.write_text("# toy\ndata.joints = 3\nsample.wmsg = off\n")
        args = cli.build_parser().parse_args(["ablate-bases", "--config", str(f), "--set", "data.joints=4"])
        cfg = cli.build_config(args)
        assert cfg["data.joints"] == 4 and cfg["sample.wmsg"] is False

    def test_dump_roundtrip(self):
        cfg = cli.RunConfig.defaults()
        cfg.set("sample.w", "0.75")
        again = cli.RunConfig.defaults()
        again.load_text(cfg.dump())
        assert again == cfg

    def test_every_key_documented(self):
        text = cli.build_parser().format_help()
        assert all(k in text for k in cli.KEYS)

    @pytest.mark.parametrize("text,want", [("0,1,2", [0, 1, 2]), ("3..5", [3, 4, 5]), ("1,4..5", [1, 4, 5])])
    def test_index_list(self, text, want):
        assert cli.parse_index_list(text) == want


class TestTrain:
    def test_writes_checkpoint_and_loss(self, tmp_path, trained):
        model, kind = load_checkpoint(trained)
        assert kind == "cosine" and model.step == 6
        rows = read_csv(tmp_path / "loss.csv")
        assert rows[0] == ["step", "loss"] and len(rows) == 7

    def test_zero_steps(self, tmp_path):
        assert run(tmp_path, "train", extra=["model.train_steps=0"]) == 0
        model, _ = load_checkpoint(tmp_path / "model.wmck")
        assert model.step == 0 and np.isfinite(model.params["in_w"]).all()

    def test_resume_continues_counter(self, tmp_path, trained):
        out = tmp_path / "resumed.wmck"
        assert run(tmp_path, "train", "--resume", str(trained), "--checkpoint", str(out)) == 0
        model, _ = load_checkpoint(out)
        assert model.step == 12
        assert len(read_csv(tmp_path / "loss.csv")) == 13


class TestPredict:
    def _files(self, tmp_path):
        m = synth_motion("sine_walk", 16, 2, np.random.default_rng(4))
        hist, gt = tmp_path / "hist.wmot", tmp_path / "gt.wmot"
        save_motion(hist, MotionSequence(m.data[:8]))
        save_motion(gt, m)
        return hist, gt, m.data

    def test_outputs(self, tmp_path, trained):
        hist, gt, _ = self._files(tmp_path)
        assert run(tmp_path, "predict", "--checkpoint", str(trained), "--history", str(hist), "--gt", str(gt),
                   "--num-samples", "2") == 0
        p = load_motion(tmp_path / "pred_001.wmot")
        assert p.data.shape == (16, 6)
        rows = read_csv(tmp_path / "trajectories.csv")
        assert rows[0][:3] == ["sample", "frame", "j0x"] and len(rows) == 1 + 3 * 16
        assert (tmp_path / "trajectories.svg").read_text().startswith("<svg")

    def test_joint_control(self, tmp_path, trained):
        hist, gt, data = self._files(tmp_path)
        assert run(tmp_path, "predict", "--checkpoint", str(trained), "--history", str(hist), "--gt", str(gt),
                   "--mask-joints", "1", extra=["sample.control_window=5"]) == 0
        p = load_motion(tmp_path / "pred_000.wmot").data
        np.testing.assert_allclose(p[:, 3:6], data[:, 3:6], atol=1e-6)

    def test_history_shape_error(self, tmp_path, trained, capsys):
        bad = tmp_path / "bad.wmot"
        save_motion(bad, MotionSequence(np.zeros((5, 6))))
        assert run(tmp_path, "predict", "--checkpoint", str(trained), "--history", str(bad)) == 2
        err = capsys.readouterr().err
        assert err.startswith("error[E_SHAPE]") and "(5, 6)" in err and "(8, 6)" in err

    def test_mask_needs_gt(self, tmp_path, trained, capsys):
        hist, _, _ = self._files(tmp_path)
        assert run(tmp_path, "predict", "--checkpoint", str(trained), "--history", str(hist),
                   "--mask-frames", "10..12") == 2
        assert "error[E_CONFIG]" in capsys.readouterr().err


class TestEval:
    def test_schema(self, tmp_path, trained):
        assert run(tmp_path, "eval", "--checkpoint", str(trained)) == 0
        text = (tmp_path / "metrics.csv").read_text()
        assert text.startswith("# APD")
        rows = read_csv(tmp_path / "metrics.csv")
        assert rows[0] == ["metric", "value", "S", "num_histories", "seed"]
        assert [r[0] for r in rows[1:]] == ["APD", "ADE", "FDE", "MMADE", "MMFDE"]
        assert all(r[2] == "3" and r[3] == "3" for r in rows[1:])

    def test_zero_velocity(self, tmp_path):
        assert run(tmp_path, "eval", "--baseline", "zero_vel") == 0
        vals = {r[0]: float(r[1]) for r in read_csv(tmp_path / "metrics.csv")[1:]}
        assert vals["ADE"] > 0 and vals["APD"] == 0.0

    def test_threads_match_serial(self, tmp_path, trained):
        assert run(tmp_path, "eval", "--checkpoint", str(trained), "--output", str(tmp_path / "a.csv")) == 0
        assert run(tmp_path, "eval", "--checkpoint", str(trained), "--threads", "3",
                   "--output", str(tmp_path / "b.csv")) == 0
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_missing_checkpoint(self, tmp_path, capsys):
        assert run(tmp_path, "eval", "--checkpoint", str(tmp_path / "nope.wmck")) == 2
        assert "error[E_FORMAT]" in capsys.readouterr().err


class TestCodec:
    def test_encode_decode(self, tmp_path, rng):
        x = MotionSequence(rng.standard_normal((20, 9)))
        src, man, back = tmp_path / "x.wmot", tmp_path / "x.wman", tmp_path / "y.wmot"
        save_motion(src, x)
        assert cli.main(["encode", str(src), str(man), "--basis", "db9"]) == 0
        y, shape, name = cli.load_manifold(man)
        assert shape == (20, 9) and name == "db9"
        assert cli.main(["decode", str(man), str(back)]) == 0
        assert np.abs(load_motion(back).data - x.data).max() < 1e-10

    def test_corrupt_manifold(self, tmp_path, capsys):
        p = tmp_path / "x.wman"
        cli.save_manifold(p, np.zeros((3, 8)), (4, 3), "haar")
        p.write_bytes(p.read_bytes()[:-1])
        assert cli.main(["decode", str(p), str(tmp_path / "o.wmot")]) == 2
        assert "error[E_FORMAT]" in capsys.readouterr().err

    def test_bad_basis(self, tmp_path, capsys, rng):
        src = tmp_path / "x.wmot"
        save_motion(src, MotionSequence(rng.standard_normal((8, 3))))
        assert cli.main(["encode", str(src), str(tmp_path / "x.wman"), "--basis", "db99"]) == 2
        assert "error[E_BASIS]" in capsys.readouterr().err


def test_ablate_bases(tmp_path):
    assert run(tmp_path, "ablate-bases") == 0
    rows = read_csv(tmp_path / "ablate_bases.csv")
    table = {r[0]: r for r in rows[1:]}
    assert rows[0][0] == "basis" and len(rows) - 1 == len(cli.ALL_BASES)
    pos, vel = float(table["bior2.8"][2]), float(table["bior2.8"][3])
    assert pos < 1e-9
    assert vel <= 2 * pos * np.sqrt(2) + 1e-15
    assert table["dmey"][1] == "no"


def test_ablate_guidance(tmp_path, trained):
    assert run(tmp_path, "ablate-guidance", "--checkpoint", str(trained),
               extra=["eval.sweep_s=0,1", "eval.sweep_sigma=2.5", "eval.sweep_w=0.5"]) == 0
    rows = read_csv(tmp_path / "ablate_guidance.csv")
    assert rows[0][:3] == ["s", "sigma", "w"] and len(rows) == 3


def test_byte_identical_runs(tmp_path):
    outs = []
    for name in ("a", "b"):
        d = tmp_path / name
        assert run(d, "train") == 0
        hist = tmp_path / "hist.wmot"
        save_motion(hist, MotionSequence(np.linspace(0, 1, 48).reshape(8, 6)))
        assert run(d, "predict", "--checkpoint", str(d / "model.wmck"), "--history", str(hist)) == 0
        assert run(d, "eval", "--checkpoint", str(d / "model.wmck")) == 0
        outs.append(d)
    for f in ("model.wmck", "loss.csv", "pred_000.wmot", "trajectories.csv", "trajectories.svg", "metrics.csv"):
        assert (outs[0] / f).read_bytes() == (outs[1] / f).read_bytes(), f


def test_console_entry(tmp_path):
    r = subprocess.run([sys.executable, "-m", "motionwavelet.cli", "eval", "--set", "model.nope=1"],
                       capture_output=True, text=True)
    assert r.returncode == 2
    assert r.stderr.count("\n") == 1 and r.stderr.startswith("error[E_CONFIG]")
