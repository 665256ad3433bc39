import numpy as np
import pytest

from cvikit.cluster import (
    ClusteringConfig,
    GaussianMixtureEM,
    KMeans,
    WardLinkage,
    default_config,
    gmm_em,
    kmeans,
    make_clusterer,
    ward_linkage,
)
from cvikit.exceptions import InvalidInputError, InvalidKError
from cvikit.metrics import adjusted_rand_index
from cvikit.synth import blobs


def two_blobs(seed=7, n=50, spread=140.0):
    data = blobs(n_clusters=2, n_per_cluster=n, std=1.0, spread=spread, seed=seed)
    return data.points, data.true_labels


class TestConfig:
    def test_invariants(self):
        with pytest.raises(InvalidKError):
            ClusteringConfig(algorithm="kmeans", k=1)
        with pytest.raises(InvalidInputError):
            ClusteringConfig(algorithm="kmeans", k=2, n_init=0)
        with pytest.raises(InvalidInputError):
            ClusteringConfig(algorithm="kmeans", k=2, tol=0.0)
        with pytest.raises(InvalidInputError):
            ClusteringConfig(algorithm="dbscan", k=2)

    def test_defaults_per_algorithm(self):
        assert default_config("kmeans", 3).max_iter == 300
        assert default_config("gmm", 3).max_iter == 100

    def test_make_clusterer_types(self):
        assert isinstance(make_clusterer(default_config("kmeans", 2)), KMeans)
        assert isinstance(make_clusterer(default_config("ward", 2)), WardLinkage)
        assert isinstance(make_clusterer(default_config("gmm", 2)), GaussianMixtureEM)

    def test_get_params_roundtrip(self):
        est = KMeans(n_clusters=4, seed=9)
        params = est.get_params()
        assert params["n_clusters"] == 4 and params["seed"] == 9
        est.set_params(n_clusters=2)
        assert est.n_clusters == 2


class TestKMeans:
    def test_recovers_two_blobs(self):
        X, truth = two_blobs()
        lab = kmeans(X, default_config("kmeans", 2, seed=3))
        assert adjusted_rand_index(truth, lab) == 1.0

    def test_k_equals_n(self):
        X = np.arange(12.0).reshape(6, 2)
        est = KMeans(n_clusters=6, seed=0).fit(X)
        assert est.inertia_ == 0.0
        assert sorted(est.labels_.tolist()) == [0, 1, 2, 3, 4, 5]

    def test_deterministic(self):
        X, _ = two_blobs(seed=1)
        cfg = default_config("kmeans", 3, seed=11)
        a = kmeans(X, cfg)
        b = kmeans(X, cfg)
        assert np.array_equal(a.assignments, b.assignments)

    def test_n_below_k_rejected(self):
        with pytest.raises(InvalidKError):
            KMeans(n_clusters=5).fit(np.arange(8.0).reshape(4, 2))

    def test_no_empty_clusters_even_with_duplicates(self):
        X = np.zeros((10, 2))
        X[5:] = 1.0
        est = KMeans(n_clusters=4, seed=2).fit(X)
        assert np.bincount(est.labels_, minlength=4).min() >= 1

    def test_predict_matches_fit_labels(self):
        X, _ = two_blobs(seed=4)
        est = KMeans(n_clusters=2, seed=0).fit(X)
        assert np.array_equal(est.predict(X), est.labels_)


class TestWard:
    def test_forced_pairs(self):
        X = np.array([[0.0, 0], [0, 1], [50, 0], [50, 1]])
        lab = ward_linkage(X, 2)
        assert lab.assignments[0] == lab.assignments[1]
        assert lab.assignments[2] == lab.assignments[3]
        assert lab.assignments[0] != lab.assignments[2]

    def test_k_equals_n_singletons(self):
        X = np.arange(10.0).reshape(5, 2)
        lab = ward_linkage(X, 5)
        assert sorted(lab.assignments.tolist()) == [0, 1, 2, 3, 4]

    def test_three_blobs(self):
        data = blobs(n_clusters=3, n_per_cluster=14, std=1.0, spread=40.0, seed=5)
        lab = ward_linkage(data.points, 3)
        assert adjusted_rand_index(data.true_labels, lab) >= 0.9

    def test_deterministic(self):
        X, _ = two_blobs(seed=6)
        assert np.array_equal(ward_linkage(X, 4).assignments, ward_linkage(X, 4).assignments)


class TestGmmEm:
    def test_recovers_two_blobs(self):
        X, truth = two_blobs(seed=8)
        lab = gmm_em(X, default_config("gmm", 2, seed=1))
        assert adjusted_rand_index(truth, lab) == 1.0

    def test_k_one_rejected(self):
        with pytest.raises(InvalidKError):
            gmm_em(np.arange(8.0).reshape(4, 2), ClusteringConfig(algorithm="gmm", k=1))

    def test_log_likelihood_monotone(self):
        X, _ = two_blobs(seed=12)
        est = GaussianMixtureEM(n_clusters=2, seed=0, n_init=2).fit(X)
        assert np.all(np.diff(est.ll_trace_) >= -1e-9)

    def test_deterministic(self):
        X, _ = two_blobs(seed=13)
        cfg = default_config("gmm", 2, seed=42)
        assert np.array_equal(gmm_em(X, cfg).assignments, gmm_em(X, cfg).assignments)

    def test_labeling_has_no_empty_cluster(self):
        rng = np.random.default_rng(3)
        X = rng.standard_normal((40, 2))
        lab = gmm_em(X, default_config("gmm", 3, seed=3))
        assert np.bincount(lab.assignments, minlength=3).min() >= 1
