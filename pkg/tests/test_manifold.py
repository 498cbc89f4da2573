import numpy as np
import pytest

from motionwavelet.errors import ShapeError
from motionwavelet.manifold import (
    MotionSequence,
    NormStats,
    WaveletManifold,
    decode,
    encode,
    manifold_shape,
    pad_history,
)
from motionwavelet.wavelet import SUPPORTED_BASES, make_basis


def rmse(a, b):
    return float(np.sqrt(np.mean((a - b) ** 2)))


def walking(frames=125, joints=17, fps=50.0):
    t = np.arange(frames)[:, None] / fps
    j = np.arange(3 * joints)[None, :]
    return np.sin(2 * np.pi * 1.1 * t + 0.3 * j) + 0.2 * np.cos(2 * np.pi * 2.7 * t + j)


def test_zero_motion_encodes_to_zero():
    m = encode(MotionSequence(np.zeros((20, 6))), make_basis("bior2.8"))
    assert not m.data.any()


def test_h36m_manifold_shape():
    m = encode(MotionSequence(np.zeros((125, 51))), make_basis("bior2.8"))
    assert m.data.shape == (71, 136)
    assert m.original_shape == (125, 51)
    assert m.basis_name == "bior2.8"


@pytest.mark.parametrize("name", SUPPORTED_BASES)
def test_roundtrip(name, rng):
    b = make_basis(name)
    x = rng.standard_normal((48, 15))
    assert rmse(decode(encode(MotionSequence(x), b), b).data, x) < 1e-10


def test_zero_manifold_decodes_to_zero():
    b = make_basis("bior2.8")
    k, w = manifold_shape((30, 9), b)
    out = decode(WaveletManifold(np.zeros((k, w)), (30, 9), "bior2.8"), b)
    assert out.data.shape == (30, 9) and not out.data.any()


def test_velocity_preserved():
    b = make_basis("bior2.8")
    x = walking()
    y = decode(encode(MotionSequence(x), b), b).data
    assert rmse(np.diff(y, axis=0), np.diff(x, axis=0)) < 1e-9


def test_subband_order_matters(rng):
    b = make_basis("bior2.8")
    x = rng.standard_normal((40, 12))
    m = encode(MotionSequence(x), b)
    q = m.subband_width
    ll, hl, lh, hh = (m.data[:, i * q : (i + 1) * q] for i in range(4))
    swapped = WaveletManifold(np.concatenate([ll, lh, hl, hh], axis=1), m.original_shape, m.basis_name)
    assert rmse(decode(swapped, b).data, x) > 1e-3


def test_decode_rejects_bad_width():
    b = make_basis("haar")
    with pytest.raises(ShapeError):
        decode(WaveletManifold(np.zeros((5, 7)), (10, 6), "haar"), b)


def test_decode_rejects_basis_mismatch():
    m = encode(MotionSequence(np.zeros((10, 6))), make_basis("haar"))
    with pytest.raises(ShapeError):
        decode(m, make_basis("db9"))


class TestPadHistory:
    def test_repeat_last(self):
        p1, p2 = [1.0, 2.0, 3.0], [4.0, 5.0, 6.0]
        out = pad_history(np.array([p1, p2]), 4).data
        np.testing.assert_array_equal(out, [p1, p2, p2, p2])

    def test_h36m_sizes(self, rng):
        h = rng.standard_normal((25, 51))
        out = pad_history(h, 125).data
        assert out.shape == (125, 51)
        np.testing.assert_array_equal(out[:25], h)
        assert (out[25:] == h[24]).all()
        m = encode(MotionSequence(out), make_basis("bior2.8"))
        assert m.data.shape == (71, 136) and np.isfinite(m.data).all()

    def test_too_long(self):
        with pytest.raises(ShapeError):
            pad_history(np.zeros((5, 3)), 5)

    def test_idempotent_on_padded_form(self, rng):
        h = rng.standard_normal((6, 9))
        once = pad_history(h, 20).data
        again = pad_history(once[:12], 20).data
        np.testing.assert_array_equal(once, again)


def test_motion_rejects_nan():
    x = np.zeros((5, 3))
    x[2, 1] = np.nan
    with pytest.raises(ShapeError):
        MotionSequence(x)


def test_norm_stats_roundtrip(rng):
    x = rng.normal(3.0, 2.0, size=(50, 6))
    ns = NormStats.fit([x])
    z = ns.normalize(x)
    np.testing.assert_allclose(z.mean(axis=0), 0, atol=1e-12)
    np.testing.assert_allclose(z.std(axis=0), 1, atol=1e-12)
    np.testing.assert_allclose(ns.denormalize(z), x, atol=1e-12)
