"""Six classical internal cluster validity indices.

Formulas follow the original references: Dunn (1974), Calinski-Harabasz
(1974), Davies-Bouldin (1979), Rousseeuw's silhouette (1987), the
Maulik-Bandyopadhyay I index (2002), and the Zhao-Franti WB index (2014).
Dunn, CH, silhouette and I are better when larger; DB and WB when
smaller.  Degenerate divisions raise typed errors rather than returning
NaN so callers can tell a bad clustering from an undefined index.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist, pdist

from ..exceptions import DegenerateDivisionError, InvalidPartitionError
from ..validation import check_labels, check_points

_CHUNK = 512


def _checked(points, labels) -> tuple[np.ndarray, np.ndarray, int]:
    X = check_points(points)
    arr, k = check_labels(labels, n=X.shape[0])
    if k < 2:
        raise InvalidPartitionError(f"need at least 2 clusters, got {k}")
    if X.shape[0] <= k:
        raise InvalidPartitionError(f"need more points ({X.shape[0]}) than clusters ({k})")
    return X, arr, k


def _centroids(X, arr, k) -> tuple[np.ndarray, np.ndarray]:
    counts = np.bincount(arr, minlength=k).astype(float)
    sums = np.zeros((k, X.shape[1]))
    np.add.at(sums, arr, X)
    return sums / counts[:, None], counts


def _point_to_cluster_mean_distances(X, arr, k) -> np.ndarray:
    """(N, k) matrix of each point's mean distance to each cluster's members.

    Own-cluster column excludes the point itself (mean over m-1 co-members);
    processed in row chunks to avoid a full N x N matrix.
    """
    n = X.shape[0]
    counts = np.bincount(arr, minlength=k).astype(float)
    onehot = np.zeros((n, k))
    onehot[np.arange(n), arr] = 1.0
    means = np.empty((n, k))
    for start in range(0, n, _CHUNK):
        block = slice(start, min(start + _CHUNK, n))
        sums = cdist(X[block], X) @ onehot
        denom = counts[None, :].repeat(block.stop - block.start, axis=0)
        rows = np.arange(block.stop - block.start)
        denom[rows, arr[block]] -= 1.0
        with np.errstate(invalid="ignore", divide="ignore"):
            means[block] = np.where(denom > 0, sums / np.maximum(denom, 1.0), 0.0)
    return means


def dunn_index(points, labels) -> float:
    """Minimum between-cluster point distance over maximum cluster diameter (max is best)."""
    X, arr, k = _checked(points, labels)
    groups = [X[arr == c] for c in range(k)]
    max_intra = 0.0
    for g in groups:
        if g.shape[0] >= 2:
            max_intra = max(max_intra, float(pdist(g).max()))
    if max_intra == 0.0:
        raise DegenerateDivisionError("every cluster has zero diameter")
    min_inter = np.inf
    for i in range(k):
        for j in range(i + 1, k):
            min_inter = min(min_inter, float(cdist(groups[i], groups[j]).min()))
    return min_inter / max_intra


def _scatter(X, arr, k) -> tuple[float, float, np.ndarray, np.ndarray]:
    """Within-cluster (W) and between-cluster (B) sums of squares."""
    centroids, counts = _centroids(X, arr, k)
    within = float(((X - centroids[arr]) ** 2).sum())
    global_mean = X.mean(axis=0)
    between = float((counts * ((centroids - global_mean) ** 2).sum(axis=1)).sum())
    return within, between, centroids, counts


def calinski_harabasz(points, labels) -> float:
    """Between/within variance ratio scaled by degrees of freedom (max is best)."""
    X, arr, k = _checked(points, labels)
    within, between, _, _ = _scatter(X, arr, k)
    if within == 0.0:
        raise DegenerateDivisionError("within-cluster scatter is zero")
    n = X.shape[0]
    return (between / (k - 1)) / (within / (n - k))


def wb_index(points, labels) -> float:
    """k times the within/between scatter ratio (min is best)."""
    X, arr, k = _checked(points, labels)
    within, between, _, _ = _scatter(X, arr, k)
    if between == 0.0:
        raise DegenerateDivisionError("between-cluster scatter is zero")
    return k * within / between


def davies_bouldin(points, labels) -> float:
    """Mean worst-pair ratio of cluster spreads to centroid separation (min is best)."""
    X, arr, k = _checked(points, labels)
    centroids, _ = _centroids(X, arr, k)
    spread = np.array([
        float(np.linalg.norm(X[arr == c] - centroids[c], axis=1).mean()) for c in range(k)
    ])
    sep = cdist(centroids, centroids)
    worst = np.empty(k)
    for i in range(k):
        ratios = []
        for j in range(k):
            if j == i:
                continue
            if sep[i, j] == 0.0:
                raise DegenerateDivisionError(f"clusters {i} and {j} have coincident centroids")
            ratios.append((spread[i] + spread[j]) / sep[i, j])
        worst[i] = max(ratios)
    return float(worst.mean())


def silhouette(points, labels) -> float:
    """Mean silhouette width over all points (max is best).

    For each point, a is the mean distance to its co-members and b the
    smallest mean distance to another cluster; the width is
    (b - a)/max(a, b).  Points in singleton clusters contribute 0.
    """
    X, arr, k = _checked(points, labels)
    counts = np.bincount(arr, minlength=k)
    means = _point_to_cluster_mean_distances(X, arr, k)
    n = X.shape[0]
    rows = np.arange(n)
    a = means[rows, arr]
    other = means.copy()
    other[rows, arr] = np.inf
    b = other.min(axis=1)
    denom = np.maximum(a, b)
    with np.errstate(invalid="ignore", divide="ignore"):
        widths = np.where(denom > 0, (b - a) / denom, 0.0)
    widths[counts[arr] == 1] = 0.0
    return float(widths.mean())


def i_index(points, labels, p: float = 2.0) -> float:
    """Maulik-Bandyopadhyay I index with exponent ``p`` (max is best)."""
    X, arr, k = _checked(points, labels)
    centroids, _ = _centroids(X, arr, k)
    e_total = float(np.linalg.norm(X - X.mean(axis=0), axis=1).sum())
    e_within = float(np.linalg.norm(X - centroids[arr], axis=1).sum())
    if e_within == 0.0:
        raise DegenerateDivisionError("within-cluster deviation is zero")
    d_max = float(pdist(centroids).max())
    return ((e_total / e_within) * d_max / k) ** p
