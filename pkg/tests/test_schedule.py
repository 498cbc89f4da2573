import math

import numpy as np
import pytest

from motionwavelet.errors import ConfigError, ShapeError
from motionwavelet.schedule import SCHEDULE_KINDS, build_schedule, ddim_timesteps, q_sample


@pytest.mark.parametrize("kind", SCHEDULE_KINDS)
@pytest.mark.parametrize("steps", [1, 10, 100, 1000])
def test_schedule_invariants(kind, steps):
    s = build_schedule(kind, steps)
    assert s.alpha.shape == s.alpha_bar.shape == (steps,)
    assert np.all(s.alpha_bar > 0) and np.all(s.alpha_bar <= 1)
    assert np.all(np.diff(s.alpha_bar) < 0)
    # construction identity, checked step by step
    for t in range(1, steps):
        assert s.alpha_bar[t] == s.alpha_bar[t - 1] * s.alpha[t]


def test_cosine_endpoint():
    s = build_schedule("cosine", 1000)
    assert s.alpha_bar[999] < 0.01
    assert s.alpha_bar[0] > 0.99


@pytest.mark.parametrize("kind", SCHEDULE_KINDS)
def test_single_step(kind):
    s = build_schedule(kind, 1)
    assert 0 < s.alpha[0] < 1


def test_bad_inputs():
    with pytest.raises(ConfigError):
        build_schedule("cosine", 0)
    with pytest.raises(ConfigError):
        build_schedule("quadratic", 10)


class TestQSample:
    def test_clean_limit(self, rng):
        s = build_schedule("cosine", 100)
        y0 = rng.standard_normal((4, 8))
        np.testing.assert_array_equal(q_sample(y0, 0, rng.standard_normal((4, 8)), s), y0)

    def test_zero_signal(self, rng):
        s = build_schedule("linear", 100)
        eps = rng.standard_normal((3, 5))
        out = q_sample(np.zeros((3, 5)), 40, eps, s)
        np.testing.assert_allclose(out, math.sqrt(1 - s.alpha_bar[39]) * eps, rtol=0, atol=1e-15)

    def test_affine(self, rng):
        s = build_schedule("sigmoid", 50)
        y0, y1, e0, e1 = rng.standard_normal((4, 6, 6))
        lhs = q_sample(2 * y0 - y1, 17, 0.5 * e0 + e1, s)
        rhs = 2 * q_sample(y0, 17, 0.25 * e0, s) - q_sample(y1, 17, -e1, s)
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    @pytest.mark.parametrize("t", [5, 250, 900])
    def test_monte_carlo_moments(self, t, rng):
        s = build_schedule("cosine", 1000)
        y0 = rng.standard_normal(32)
        draws = np.stack([q_sample(y0, t, rng.standard_normal(32), s) for _ in range(10_000)])
        ab = s.alpha_bar[t - 1]
        var = draws.var(axis=0)
        assert np.all(np.abs(var / (1 - ab) - 1) < 0.05)
        se = math.sqrt((1 - ab) / 10_000)
        assert np.all(np.abs(draws.mean(axis=0) - math.sqrt(ab) * y0) < 5 * se)

    def test_errors(self):
        s = build_schedule("cosine", 10)
        with pytest.raises(ShapeError):
            q_sample(np.zeros(3), 2, np.zeros(4), s)
        with pytest.raises(ShapeError):
            q_sample(np.zeros(3), 11, np.zeros(3), s)


def test_ddim_timesteps():
    ts = ddim_timesteps(1000, 100)
    assert ts[0] == 1000 and ts[-1] == 10 and len(ts) == 100
    assert np.all(np.diff(ts) == -10)
    assert list(ddim_timesteps(10, 100)) == list(range(10, 0, -1))
