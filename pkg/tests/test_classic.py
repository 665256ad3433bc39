import math

import numpy as np
import pytest

from cvikit.exceptions import (
    DegenerateDivisionError,
    DegeneratePartitionError,
    InvalidPartitionError,
)
from cvikit.metrics import (
    calinski_harabasz,
    davies_bouldin,
    dunn_index,
    i_index,
    silhouette,
    wb_index,
)

MIRROR = np.array([[-1.0, 0], [-1, 1], [1, 0], [1, 1]])
MIRROR_LABELS = [0, 0, 1, 1]


def seeded_instance(seed=19, n=30, k=3):
    rng = np.random.default_rng(seed)
    points = rng.standard_normal((n, 2)) + rng.integers(0, 8, size=(n, 1))
    labels = rng.integers(0, k, n)
    labels[:k] = np.arange(k)
    return points, labels


# plain-loop recomputations straight from the definitions

def oracle_dunn(X, labels):
    inter = min(
        math.dist(X[i], X[j])
        for i in range(len(X))
        for j in range(len(X))
        if labels[i] != labels[j]
    )
    intra = max(
        math.dist(X[i], X[j])
        for i in range(len(X))
        for j in range(len(X))
        if i != j and labels[i] == labels[j]
    )
    return inter / intra


def oracle_scatter(X, labels):
    k = max(labels) + 1
    grand = X.mean(axis=0)
    within = between = 0.0
    for c in range(k):
        members = X[np.asarray(labels) == c]
        centroid = members.mean(axis=0)
        within += sum(math.dist(x, centroid) ** 2 for x in members)
        between += len(members) * math.dist(centroid, grand) ** 2
    return within, between


def oracle_db(X, labels):
    k = max(labels) + 1
    labels = np.asarray(labels)
    cents = [X[labels == c].mean(axis=0) for c in range(k)]
    spreads = [np.mean([math.dist(x, cents[c]) for x in X[labels == c]]) for c in range(k)]
    total = 0.0
    for i in range(k):
        total += max(
            (spreads[i] + spreads[j]) / math.dist(cents[i], cents[j])
            for j in range(k)
            if j != i
        )
    return total / k


def oracle_silhouette(X, labels):
    labels = np.asarray(labels)
    widths = []
    for i in range(len(X)):
        own = labels[i]
        co = [j for j in range(len(X)) if labels[j] == own and j != i]
        if not co:
            widths.append(0.0)
            continue
        a = np.mean([math.dist(X[i], X[j]) for j in co])
        b = min(
            np.mean([math.dist(X[i], X[j]) for j in range(len(X)) if labels[j] == c])
            for c in range(max(labels) + 1)
            if c != own
        )
        widths.append((b - a) / max(a, b))
    return float(np.mean(widths))


def oracle_i(X, labels, p=2.0):
    labels = np.asarray(labels)
    k = max(labels) + 1
    grand = X.mean(axis=0)
    cents = [X[labels == c].mean(axis=0) for c in range(k)]
    e1 = sum(math.dist(x, grand) for x in X)
    ek = sum(math.dist(X[i], cents[labels[i]]) for i in range(len(X)))
    dk = max(math.dist(cents[i], cents[j]) for i in range(k) for j in range(k) if i != j)
    return ((e1 / ek) * dk / k) ** p


class TestHandValues:
    def test_dunn_nine(self):
        X = np.array([[0.0, 0], [0, 1], [0, 10], [0, 11]])
        assert dunn_index(X, [0, 0, 1, 1]) == pytest.approx(9.0, rel=1e-12)

    def test_ch_eight(self):
        assert calinski_harabasz(MIRROR, MIRROR_LABELS) == pytest.approx(8.0, rel=1e-12)

    def test_db_tenth(self):
        X = np.array([[0.0, 0], [0, 1], [10, 0], [10, 1]])
        assert davies_bouldin(X, [0, 0, 1, 1]) == pytest.approx(0.1, rel=1e-12)

    def test_wb_half(self):
        assert wb_index(MIRROR, MIRROR_LABELS) == pytest.approx(0.5, rel=1e-12)

    def test_i_five(self):
        assert i_index(MIRROR, MIRROR_LABELS) == pytest.approx(5.0, rel=1e-12)

    def test_silhouette_tight_far_clusters(self):
        X = np.array([[0.0, 0], [0, 1], [100, 0], [100, 1]])
        got = silhouette(X, [0, 0, 1, 1])
        assert got > 0.9
        assert got == pytest.approx(oracle_silhouette(X, [0, 0, 1, 1]), abs=1e-12)

    def test_silhouette_maximal(self):
        X = np.array([[0.0, 0], [0, 0], [9, 9], [9, 9]])
        assert silhouette(X, [0, 0, 1, 1]) == 1.0


class TestOracles:
    def test_dunn(self):
        X, labels = seeded_instance()
        assert dunn_index(X, labels) == pytest.approx(oracle_dunn(X, labels), rel=1e-12)

    def test_ch(self):
        X, labels = seeded_instance()
        w, b = oracle_scatter(X, labels)
        n, k = len(X), max(labels) + 1
        expected = (b / (k - 1)) / (w / (n - k))
        assert calinski_harabasz(X, labels) == pytest.approx(expected, rel=1e-12)

    def test_db(self):
        X, labels = seeded_instance()
        assert davies_bouldin(X, labels) == pytest.approx(oracle_db(X, labels), rel=1e-12)

    def test_silhouette(self):
        X, labels = seeded_instance()
        assert silhouette(X, labels) == pytest.approx(oracle_silhouette(X, labels), rel=1e-12)

    def test_wb(self):
        X, labels = seeded_instance()
        w, b = oracle_scatter(X, labels)
        assert wb_index(X, labels) == pytest.approx((max(labels) + 1) * w / b, rel=1e-12)

    def test_i(self):
        X, labels = seeded_instance()
        assert i_index(X, labels) == pytest.approx(oracle_i(X, labels), rel=1e-12)

    def test_wb_ch_identity(self):
        # wb * ch == k (N - k) / (k - 1) on any non-degenerate instance
        for seed in range(20):
            X, labels = seeded_instance(seed=seed, n=25, k=4)
            n, k = len(X), max(labels) + 1
            product = wb_index(X, labels) * calinski_harabasz(X, labels)
            assert product == pytest.approx(k * (n - k) / (k - 1), rel=1e-10)


class TestDegenerateCases:
    def test_dunn_zero_diameter(self):
        X = np.array([[0.0, 0], [0, 0], [50, 50], [50, 50]])
        with pytest.raises(DegenerateDivisionError):
            dunn_index(X, [0, 0, 1, 1])

    def test_ch_zero_within(self):
        X = np.array([[0.0, 0], [0, 0], [0, 0], [50, 50], [50, 50]])
        with pytest.raises(DegenerateDivisionError):
            calinski_harabasz(X, [0, 0, 0, 1, 1])

    def test_db_coincident_centroids(self):
        X = np.array([[-1.0, 0], [1, 0], [0, -1], [0, 1]])
        with pytest.raises(DegenerateDivisionError):
            davies_bouldin(X, [0, 0, 1, 1])

    def test_wb_zero_between(self):
        X = np.array([[-1.0, 0], [1, 0], [0, -1], [0, 1], [0, 2], [0, -2]])
        with pytest.raises(DegenerateDivisionError):
            wb_index(X, [0, 0, 1, 1, 1, 1])

    def test_i_zero_within(self):
        X = np.array([[0.0, 0], [0, 0], [0, 0], [50, 50], [50, 50]])
        with pytest.raises(DegenerateDivisionError):
            i_index(X, [0, 0, 0, 1, 1])

    def test_single_cluster_rejected(self):
        X = np.arange(8.0).reshape(4, 2)
        with pytest.raises(InvalidPartitionError):
            dunn_index(X, [0, 0, 0, 0])

    def test_empty_cluster_rejected(self):
        X = np.arange(8.0).reshape(4, 2)
        with pytest.raises(DegeneratePartitionError):
            calinski_harabasz(X, [0, 0, 2, 2])

    def test_n_must_exceed_k(self):
        X = np.arange(8.0).reshape(4, 2)
        with pytest.raises(InvalidPartitionError):
            silhouette(X, [0, 1, 2, 3])


class TestSharedProperties:
    INDICES = (dunn_index, calinski_harabasz, davies_bouldin, silhouette, wb_index, i_index)

    def test_permutation_and_rigid_motion_invariance(self):
        X, labels = seeded_instance(seed=5)
        relabeled = np.array([1, 2, 0])[labels]
        theta = 1.1
        rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
        moved = X @ rot.T + np.array([3.0, -7.0])
        for index in self.INDICES:
            base = index(X, labels)
            assert index(X, relabeled) == pytest.approx(base, rel=1e-9)
            assert index(moved, labels) == pytest.approx(base, rel=1e-9)

    def test_direction_sanity_when_separating_clusters(self):
        rng = np.random.default_rng(13)
        local = rng.standard_normal((20, 2)) * 0.5
        labels = np.repeat([0, 1], 10)
        offsets = np.where(labels[:, None] == 0, -5.0, 5.0) * np.array([[1.0, 0.0]])
        near = local + offsets
        far = local + 10.0 * offsets
        for index in (dunn_index, calinski_harabasz, silhouette, i_index):
            assert index(far, labels) >= index(near, labels)
        for index in (davies_bouldin, wb_index):
            assert index(far, labels) <= index(near, labels)
