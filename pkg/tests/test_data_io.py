import numpy as np
import pytest

from motionwavelet.data_io import (
    MOTION_KINDS,
    MotionDataset,
    load_motion,
    make_windows,
    save_motion,
    synth_corpus,
    synth_motion,
    window_count,
)
from motionwavelet.errors import FormatError, ShapeError
from motionwavelet.manifold import MotionSequence


def test_sine_walk_period(rng):
    fps, f = 30.0, 1.0
    m = synth_motion("sine_walk", 300, 1, rng, fps=fps, freq_range=(f, f))
    x = m.data[:, 0] - m.data[:, 0].mean()
    ac = np.correlate(x, x, mode="full")[len(x) - 1 :]
    # first peak after lag 0, away from the zero lag lobe
    lag = int(np.argmax(ac[10:60])) + 10
    assert abs(lag - fps / f) <= 1


@pytest.mark.parametrize("kind", MOTION_KINDS)
def test_shapes_and_determinism(kind):
    a = synth_motion(kind, 40, 3, np.random.default_rng(7))
    b = synth_motion(kind, 40, 3, np.random.default_rng(7))
    assert a.data.shape == (40, 9) and a.joints == 3
    np.testing.assert_array_equal(a.data, b.data)


def test_stop_start_has_holds():
    m = synth_motion("stop_start", 200, 4, np.random.default_rng(3))
    vel = np.diff(m.data, axis=0)
    held = np.abs(vel) == 0
    assert held.any(axis=0).all()
    # inside a hold the pose is exactly constant; runs of zeros longer than 2 exist per channel
    for c in range(vel.shape[1]):
        run = best = 0
        for h in held[:, c]:
            run = run + 1 if h else 0
            best = max(best, run)
        assert best >= 2


def test_bad_kind(rng):
    with pytest.raises(ShapeError):
        synth_motion("jog", 40, 1, rng)


class TestWmot:
    def test_roundtrip_bit_identical(self, tmp_path, rng):
        m = MotionSequence(rng.standard_normal((17, 12)), fps=25.0)
        p = tmp_path / "a.wmot"
        save_motion(p, m)
        back = load_motion(p)
        assert back.data.tobytes() == m.data.tobytes()
        assert back.joints == 4 and back.fps == 25.0
        assert p.stat().st_size == 17 + 17 * 12 * 8

    def test_truncated(self, tmp_path, rng):
        p = tmp_path / "a.wmot"
        save_motion(p, MotionSequence(rng.standard_normal((10, 6))))
        p.write_bytes(p.read_bytes()[:-5])
        with pytest.raises(FormatError, match="end of file at frame 9"):
            load_motion(p)

    def test_trailing_bytes(self, tmp_path, rng):
        p = tmp_path / "a.wmot"
        save_motion(p, MotionSequence(rng.standard_normal((4, 3))))
        p.write_bytes(p.read_bytes() + b"\0" * 8)
        with pytest.raises(FormatError, match="frame-length"):
            load_motion(p)

    def test_bad_magic(self, tmp_path):
        p = tmp_path / "a.wmot"
        p.write_bytes(b"XXXX" + b"\0" * 40)
        with pytest.raises(FormatError, match="malformed header"):
            load_motion(p)

    def test_short_header(self, tmp_path):
        p = tmp_path / "a.wmot"
        p.write_bytes(b"WM")
        with pytest.raises(FormatError):
            load_motion(p)

    def test_nan_rejected(self, tmp_path):
        p = tmp_path / "a.wmot"
        save_motion(p, MotionSequence(np.zeros((3, 3))))
        raw = bytearray(p.read_bytes())
        raw[-8:] = np.array([np.nan]).tobytes()
        p.write_bytes(bytes(raw))
        with pytest.raises(FormatError, match="frame 2"):
            load_motion(p)


class TestCsv:
    def test_fixture(self, tmp_path):
        p = tmp_path / "m.csv"
        p.write_text("frame,j0x,j0y,j0z\n0,1.0,2.0,3.0\n1,4.0,5.0,6.5\n")
        m = load_motion(p)
        np.testing.assert_array_equal(m.data, [[1, 2, 3], [4, 5, 6.5]])

    def test_roundtrip(self, tmp_path, rng):
        m = MotionSequence(rng.standard_normal((6, 6)))
        p = tmp_path / "m.csv"
        save_motion(p, m)
        assert p.read_text().splitlines()[0] == "frame,j0x,j0y,j0z,j1x,j1y,j1z"
        np.testing.assert_array_equal(load_motion(p).data, m.data)

    def test_ragged_row(self, tmp_path):
        p = tmp_path / "m.csv"
        p.write_text("frame,j0x,j0y,j0z\n0,1,2,3\n1,4,5\n")
        with pytest.raises(FormatError, match="frame 1"):
            load_motion(p)

    def test_bad_header(self, tmp_path):
        p = tmp_path / "m.csv"
        p.write_text("t,a,b\n0,1,2\n")
        with pytest.raises(FormatError, match="malformed header"):
            load_motion(p)


class TestWindows:
    @pytest.mark.parametrize(
        "length,stride,want", [(125, 1, 1), (126, 1, 2), (135, 1, 11), (124, 1, 0), (145, 10, 3)]
    )
    def test_counts(self, length, stride, want):
        assert window_count(length, 25, 100, stride) == want
        wins, skipped = make_windows([np.zeros((length, 3))], 25, 100, stride)
        assert len(wins) == want
        assert skipped == (want == 0)

    def test_contents(self):
        x = np.arange(30, dtype=float).reshape(10, 3)
        wins, _ = make_windows([x], 3, 4, stride=2)
        h, f = wins[1]
        np.testing.assert_array_equal(h, x[2:5])
        np.testing.assert_array_equal(f, x[5:9])

    def test_dataset(self):
        ds = MotionDataset(synth_corpus("chirp", 3, 50, 2, seed=0), H=10, F=20, stride=5)
        assert len(ds.windows) == 3 * 5
        assert ds.histories().shape == (15, 10, 6)
        assert ds.full().shape == (15, 30, 6)

    def test_bad_args(self):
        with pytest.raises(ShapeError):
            make_windows([np.zeros((10, 3))], 0, 5)


def test_corpus_independent_streams():
    a = synth_corpus("sine_walk", 3, 20, 1, seed=5)
    b = synth_corpus("sine_walk", 3, 20, 1, seed=5)
    assert all(np.array_equal(x.data, y.data) for x, y in zip(a, b))
    assert not np.array_equal(a[0].data, a[1].data)
