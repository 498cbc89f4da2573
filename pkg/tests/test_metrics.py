import math

import numpy as np
import pytest

from motionwavelet import metrics
from motionwavelet.errors import ShapeError
from oracles import min_ade, min_fde, pairwise_apd


@pytest.fixture
def pred_set(rng):
    return rng.standard_normal((10, 12, 9)), rng.standard_normal((12, 9))


class TestApd:
    def test_identical(self, rng):
        x = rng.standard_normal((6, 9))
        assert metrics.apd(np.stack([x] * 4)) == 0.0

    def test_single_sample(self, rng):
        assert metrics.apd(rng.standard_normal((1, 5, 3))) == 0.0

    def test_constant_offset(self, rng):
        x = rng.standard_normal((10, 15))
        c = 0.3
        assert metrics.apd(np.stack([x, x + c])) == pytest.approx(c * math.sqrt(10 * 15), abs=1e-12)

    def test_matches_pairwise_oracle(self, rng):
        x = rng.standard_normal((5, 7, 6))
        assert metrics.apd(x) == pytest.approx(pairwise_apd(x), abs=1e-12)


class TestAdeFde:
    def test_exact_match(self, pred_set):
        x, gt = pred_set
        x = x.copy()
        x[3] = gt
        assert metrics.ade(x, gt) == 0.0
        assert metrics.fde(x, gt) == 0.0

    def test_offset_norm(self, rng):
        gt = rng.standard_normal((8, 6))
        v = rng.standard_normal(6)
        c = 0.7
        v = c * v / np.linalg.norm(v)
        assert metrics.ade(gt + v, gt) == pytest.approx(c, abs=1e-12)
        assert metrics.fde(gt + v, gt) == pytest.approx(c, abs=1e-12)

    def test_matches_oracle(self, pred_set):
        x, gt = pred_set
        assert metrics.ade(x, gt) == pytest.approx(min_ade(x, gt), abs=1e-12)
        assert metrics.fde(x, gt) == pytest.approx(min_fde(x, gt), abs=1e-12)

    def test_empty(self):
        with pytest.raises(ShapeError):
            metrics.ade(np.zeros((0, 3, 3)), np.zeros((3, 3)))

    def test_duplicate_never_increases(self, pred_set):
        x, gt = pred_set
        more = np.concatenate([x, x[:2]])
        assert metrics.ade(more, gt) <= metrics.ade(x, gt)
        assert metrics.fde(more, gt) <= metrics.fde(x, gt)

    def test_permutation_invariance(self, pred_set, rng):
        x, gt = pred_set
        perm = rng.permutation(len(x))
        for fn in (metrics.ade, metrics.fde):
            assert fn(x[perm], gt) == fn(x, gt)
        assert metrics.apd(x[perm]) == pytest.approx(metrics.apd(x), abs=1e-12)


class TestMultiModal:
    def test_singleton(self, pred_set):
        x, gt = pred_set
        assert metrics.mmade(x, [gt]) == metrics.ade(x, gt)
        assert metrics.mmfde(x, [gt]) == metrics.fde(x, gt)

    def test_duplicates(self, pred_set, rng):
        x, gt = pred_set
        other = rng.standard_normal(gt.shape)
        a = metrics.mmade(x, [gt, other])
        assert metrics.mmade(x, [gt, other, gt, other]) == pytest.approx(a, abs=1e-12)

    def test_nested_loop_oracle(self, pred_set, rng):
        x, _ = pred_set
        mm = [rng.standard_normal((12, 9)) for _ in range(4)]
        want_ade = sum(min_ade(x, g) for g in mm) / len(mm)
        want_fde = sum(min_fde(x, g) for g in mm) / len(mm)
        assert metrics.mmade(x, mm) == pytest.approx(want_ade, abs=1e-12)
        assert metrics.mmfde(x, mm) == pytest.approx(want_fde, abs=1e-12)

    def test_empty(self, pred_set):
        with pytest.raises(ShapeError):
            metrics.mmade(pred_set[0], [])

    def test_grouping(self):
        hist = [np.array([[0.0, 0.0]]), np.array([[0.1, 0.0]]), np.array([[5.0, 5.0]])]
        fut = [np.full((2, 2), i, dtype=float) for i in range(3)]
        groups = metrics.multimodal_groups(hist, fut, tau=0.5)
        assert [len(g) for g in groups] == [2, 2, 1]
        assert groups[2][0][0, 0] == 2.0


def test_all_non_negative(pred_set):
    x, gt = pred_set
    vals = metrics.evaluate_set(x, gt, [gt])
    assert all(v >= 0 for v in vals.values())
