import numpy as np
import pytest

import cvikit.kselect as kselect
from cvikit.cluster import default_config
from cvikit.exceptions import InvalidKError, NoComputableKError, NoComputableClassError
from cvikit.kselect import predict_k
from cvikit.metrics import CviResult
from cvikit.data import Direction
from cvikit.synth import blobs


def three_blobs():
    return blobs(n_clusters=3, n_per_cluster=30, std=1.0, spread=60.0, seed=2)


class TestSweep:
    def test_ch_peaks_at_generative_k(self):
        data = three_blobs()
        p = predict_k(data.points, default_config("kmeans", 6, seed=0), "ch",
                      (2, 3, 4, 5, 6), true_c=3)
        assert p.k_hat == 3 and p.success is True

    def test_singleton_sweep_is_forced(self):
        data = three_blobs()
        p = predict_k(data.points, default_config("kmeans", 4, seed=0), "db", (4,), true_c=3)
        assert p.k_hat == 4 and p.success is False

    def test_order_invariance(self):
        data = three_blobs()
        cfg = default_config("kmeans", 6, seed=0)
        a = predict_k(data.points, cfg, "silhouette", (2, 3, 4, 5, 6))
        b = predict_k(data.points, cfg, "silhouette", (5, 3, 6, 2, 4))
        assert a.k_hat == b.k_hat

    def test_bad_k_values(self):
        data = three_blobs()
        cfg = default_config("kmeans", 6, seed=0)
        with pytest.raises(InvalidKError):
            predict_k(data.points, cfg, "ch", ())
        with pytest.raises(InvalidKError):
            predict_k(data.points, cfg, "ch", (1, 3))


class TestInjectedScores:
    def fake_compute(self, by_k, direction=Direction.MAX):
        def _compute(name, X, labeling, **kwargs):
            k = labeling.k
            if isinstance(by_k[k], Exception):
                raise by_k[k]
            return CviResult("CH", by_k[k], direction)
        return _compute

    def test_injected_peak_selects_true_c(self, monkeypatch):
        data = three_blobs()
        monkeypatch.setattr(kselect, "compute_cvi",
                            self.fake_compute({2: 0.1, 3: 0.9, 4: 0.5, 5: 0.2, 6: 0.1}))
        p = predict_k(data.points, default_config("kmeans", 6, seed=0), "ch",
                      (2, 3, 4, 5, 6), true_c=3)
        assert p.k_hat == 3 and p.success is True

    def test_ties_break_toward_smaller_k(self, monkeypatch):
        data = three_blobs()
        monkeypatch.setattr(kselect, "compute_cvi",
                            self.fake_compute({2: 0.5, 3: 0.5, 4: 0.5}))
        p = predict_k(data.points, default_config("kmeans", 4, seed=0), "ch", (2, 3, 4))
        assert p.k_hat == 2

    def test_min_direction_selects_smallest_score(self, monkeypatch):
        data = three_blobs()
        monkeypatch.setattr(kselect, "compute_cvi",
                            self.fake_compute({2: 5.0, 3: 1.0, 4: 2.0}, Direction.MIN))
        p = predict_k(data.points, default_config("kmeans", 4, seed=0), "db", (2, 3, 4))
        assert p.k_hat == 3

    def test_degenerate_k_skipped_with_warning(self, monkeypatch):
        data = three_blobs()
        boom = NoComputableClassError("degenerate")
        monkeypatch.setattr(kselect, "compute_cvi",
                            self.fake_compute({2: 0.2, 3: boom, 4: 0.1}))
        with pytest.warns(UserWarning, match="k=3 skipped"):
            p = predict_k(data.points, default_config("kmeans", 4, seed=0), "ch", (2, 3, 4))
        assert p.k_hat == 2
        assert np.isnan(p.scores[1])

    def test_all_k_degenerate(self, monkeypatch):
        data = three_blobs()
        boom = NoComputableClassError("degenerate")
        monkeypatch.setattr(kselect, "compute_cvi", self.fake_compute({2: boom, 3: boom}))
        with pytest.warns(UserWarning):
            with pytest.raises(NoComputableKError):
                predict_k(data.points, default_config("kmeans", 4, seed=0), "ch", (2, 3))
