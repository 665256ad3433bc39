"""Reference clusterers: Lloyd k-means, Ward agglomeration, Gaussian-mixture EM.

All three follow the scikit-learn estimator protocol (``fit``,
``fit_predict``, ``get_params``) so they compose with pipelines and
model-selection tooling.  Randomness flows only from the explicit
``seed`` parameter; identical inputs and parameters give identical
labelings.  Restart seeds are derived with ``numpy.random.SeedSequence``
so restarts could run in parallel without changing the result; ties
between restarts keep the earliest one.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy.cluster.hierarchy import fcluster, linkage
from scipy.linalg import solve_triangular
from scipy.spatial.distance import cdist
from scipy.special import logsumexp
from sklearn.base import BaseEstimator, ClusterMixin

from .data import Labeling
from .exceptions import (
    DegeneratePartitionError,
    InvalidInputError,
    InvalidKError,
    NumericalFailureError,
)
from .validation import check_points, dense_remap

ALGORITHMS = ("kmeans", "ward", "gmm")


@dataclass(frozen=True)
class ClusteringConfig:
    """Parameters of one clusterer run; the harness's unit of configuration."""

    algorithm: str
    k: int
    seed: int = 0
    n_init: int = 10
    max_iter: int = 300
    tol: float = 1e-4

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise InvalidInputError(
                f"unknown algorithm {self.algorithm!r}; choose from {', '.join(ALGORITHMS)}"
            )
        if self.k < 2:
            raise InvalidKError(f"k must be at least 2, got {self.k}")
        if self.n_init < 1 or self.max_iter < 1:
            raise InvalidInputError("n_init and max_iter must be at least 1")
        if not self.tol > 0:
            raise InvalidInputError("tol must be positive")

    def with_k(self, k: int) -> "ClusteringConfig":
        return replace(self, k=k)


def default_config(algorithm: str, k: int, seed: int = 0) -> ClusteringConfig:
    """Per-algorithm defaults: n_init 10, max_iter 300 (k-means) / 100 (EM)."""
    max_iter = 100 if algorithm == "gmm" else 300
    return ClusteringConfig(algorithm=algorithm, k=k, seed=seed, max_iter=max_iter)


def _check_fit_inputs(X, k: int) -> np.ndarray:
    X = check_points(X)
    if k < 2:
        raise InvalidKError(f"need at least 2 clusters, got k={k}")
    if X.shape[0] < k:
        raise InvalidKError(f"cannot form {k} clusters from {X.shape[0]} points")
    return X


def _kmeanspp_centers(X, k, rng) -> np.ndarray:
    """D^2-weighted seeding; falls back to uniform choice once all D^2 are zero."""
    n = X.shape[0]
    centers = np.empty((k, X.shape[1]))
    centers[0] = X[int(rng.integers(n))]
    d2 = ((X - centers[0]) ** 2).sum(axis=1)
    for j in range(1, k):
        total = d2.sum()
        if total > 0.0:
            idx = int(rng.choice(n, p=d2 / total))
        else:
            idx = int(rng.integers(n))
        centers[j] = X[idx]
        np.minimum(d2, ((X - centers[j]) ** 2).sum(axis=1), out=d2)
    return centers


def _assign_and_repair(X, centers) -> tuple[np.ndarray, np.ndarray]:
    """Nearest-center assignment; empty centers reseed to the farthest point.

    Only points whose cluster keeps at least one member may move, so the
    repair always terminates with every cluster non-empty (k <= N).
    """
    sq = cdist(X, centers, metric="sqeuclidean")
    labels = sq.argmin(axis=1)
    nearest = sq[np.arange(X.shape[0]), labels]
    k = centers.shape[0]
    sizes = np.bincount(labels, minlength=k)
    while np.any(sizes == 0):
        j = int(np.flatnonzero(sizes == 0)[0])
        movable = sizes[labels] > 1
        candidates = np.flatnonzero(movable)
        far = int(candidates[np.argmax(nearest[candidates])])
        sizes[labels[far]] -= 1
        centers[j] = X[far]
        labels[far] = j
        nearest[far] = 0.0
        sizes[j] += 1
    return labels, nearest


def _lloyd(X, centers, max_iter, tol) -> tuple[np.ndarray, np.ndarray, float, int]:
    k = centers.shape[0]
    centers = centers.copy()
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        labels, _ = _assign_and_repair(X, centers)
        new_centers = np.empty_like(centers)
        for j in range(k):
            new_centers[j] = X[labels == j].mean(axis=0)
        shift = float(np.sqrt(((new_centers - centers) ** 2).sum(axis=1)).max())
        centers = new_centers
        if shift <= tol:
            break
    labels, nearest = _assign_and_repair(X, centers)
    return labels, centers, float(nearest.sum()), n_iter


class KMeans(BaseEstimator, ClusterMixin):
    """Lloyd's algorithm with D^2 seeding and best-of-``n_init`` selection.

    Empty clusters arising mid-iteration are repaired by reseeding the
    empty center at the point farthest from its assigned center.  The
    restart with the lowest within-cluster sum of squares wins.
    """

    def __init__(self, n_clusters=2, seed=0, n_init=10, max_iter=300, tol=1e-4):
        self.n_clusters = n_clusters
        self.seed = seed
        self.n_init = n_init
        self.max_iter = max_iter
        self.tol = tol

    def fit(self, X, y=None):
        X = _check_fit_inputs(X, self.n_clusters)
        best = None
        for child in np.random.SeedSequence(self.seed).spawn(self.n_init):
            rng = np.random.default_rng(child)
            centers = _kmeanspp_centers(X, self.n_clusters, rng)
            labels, centers, inertia, n_iter = _lloyd(X, centers, self.max_iter, self.tol)
            if best is None or inertia < best[0]:
                best = (inertia, labels, centers, n_iter)
        self.inertia_, self.labels_, self.cluster_centers_, self.n_iter_ = best
        return self

    def predict(self, X):
        X = check_points(X, min_rows=1)
        return cdist(X, self.cluster_centers_, metric="sqeuclidean").argmin(axis=1)


class WardLinkage(BaseEstimator, ClusterMixin):
    """Agglomerative clustering cut at ``n_clusters``, merging by minimum
    Ward variance increase (Lance-Williams recurrence, via scipy)."""

    def __init__(self, n_clusters=2):
        self.n_clusters = n_clusters

    def fit(self, X, y=None):
        X = _check_fit_inputs(X, self.n_clusters)
        merge_tree = linkage(X, method="ward")
        flat = fcluster(merge_tree, t=self.n_clusters, criterion="maxclust")
        labels, _ = dense_remap(flat.tolist())
        if int(labels.max()) + 1 != self.n_clusters:
            raise DegeneratePartitionError(
                f"linkage cut produced {int(labels.max()) + 1} clusters, wanted {self.n_clusters}"
            )
        self.labels_ = labels
        return self


def _log_gaussians(X, means, chols) -> np.ndarray:
    """Log density of every point under every component (Cholesky-parameterized)."""
    n, d = X.shape
    k = means.shape[0]
    out = np.empty((n, k))
    for j in range(k):
        dev = solve_triangular(chols[j], (X - means[j]).T, lower=True)
        log_det = np.log(np.diag(chols[j])).sum()
        out[:, j] = -0.5 * (d * np.log(2.0 * np.pi) + (dev**2).sum(axis=0)) - log_det
    return out


class GaussianMixtureEM(BaseEstimator, ClusterMixin):
    """Full-covariance Gaussian mixture fit by EM.

    Each restart initializes responsibilities from a seeded k-means run,
    regularizes every covariance by ``reg_scale`` times the mean feature
    variance, and stops when the log-likelihood gain drops below ``tol``.
    The restart with the highest final log-likelihood wins; labels are
    argmax responsibilities.  ``ll_trace_`` records the winning restart's
    per-iteration log-likelihood.
    """

    def __init__(self, n_clusters=2, seed=0, n_init=10, max_iter=100, tol=1e-4, reg_scale=1e-6):
        self.n_clusters = n_clusters
        self.seed = seed
        self.n_init = n_init
        self.max_iter = max_iter
        self.tol = tol
        self.reg_scale = reg_scale

    def _m_step(self, X, resp, reg):
        d = X.shape[1]
        k = self.n_clusters
        weights = resp.sum(axis=0)
        weights = np.maximum(weights, 10 * np.finfo(float).tiny)
        means = (resp.T @ X) / weights[:, None]
        covs = np.empty((k, d, d))
        chols = np.empty((k, d, d))
        for j in range(k):
            dev = X - means[j]
            covs[j] = (resp[:, j, None] * dev).T @ dev / weights[j] + reg * np.eye(d)
            try:
                chols[j] = np.linalg.cholesky(covs[j])
            except np.linalg.LinAlgError as exc:
                raise NumericalFailureError(
                    f"component {j} covariance is singular despite regularization"
                ) from exc
        return weights / X.shape[0], means, covs, chols

    def _run_once(self, X, seed, reg):
        init = KMeans(
            n_clusters=self.n_clusters, seed=seed, n_init=1, max_iter=self.max_iter, tol=self.tol
        ).fit(X)
        resp = np.zeros((X.shape[0], self.n_clusters))
        resp[np.arange(X.shape[0]), init.labels_] = 1.0
        weights, means, covs, chols = self._m_step(X, resp, reg)
        trace = []
        log_resp = None
        for _ in range(self.max_iter):
            joint = _log_gaussians(X, means, chols) + np.log(weights)[None, :]
            norm = logsumexp(joint, axis=1)
            ll = float(norm.sum())
            log_resp = joint - norm[:, None]
            trace.append(ll)
            if len(trace) > 1 and ll - trace[-2] < self.tol:
                break
            weights, means, covs, chols = self._m_step(X, np.exp(log_resp), reg)
        return trace[-1], np.exp(log_resp), weights, means, covs, trace

    def fit(self, X, y=None):
        X = _check_fit_inputs(X, self.n_clusters)
        reg = self.reg_scale * float(np.var(X, axis=0).mean())
        best = None
        for child in np.random.SeedSequence(self.seed).spawn(self.n_init):
            restart_seed = int(child.generate_state(1)[0])
            result = self._run_once(X, restart_seed, reg)
            if best is None or result[0] > best[0]:
                best = result
        ll, resp, weights, means, covs, trace = best
        labels = resp.argmax(axis=1)
        if np.bincount(labels, minlength=self.n_clusters).min() == 0:
            raise DegeneratePartitionError("a mixture component captured no points")
        self.log_likelihood_ = ll
        self.weights_ = weights
        self.means_ = means
        self.covariances_ = covs
        self.labels_ = labels
        self.ll_trace_ = tuple(trace)
        self.n_iter_ = len(trace)
        return self


def make_clusterer(cfg: ClusteringConfig):
    """Estimator instance for a config."""
    if cfg.algorithm == "kmeans":
        return KMeans(
            n_clusters=cfg.k, seed=cfg.seed, n_init=cfg.n_init, max_iter=cfg.max_iter, tol=cfg.tol
        )
    if cfg.algorithm == "ward":
        return WardLinkage(n_clusters=cfg.k)
    return GaussianMixtureEM(
        n_clusters=cfg.k, seed=cfg.seed, n_init=cfg.n_init, max_iter=cfg.max_iter, tol=cfg.tol
    )


def kmeans(points, cfg: ClusteringConfig) -> Labeling:
    est = KMeans(
        n_clusters=cfg.k, seed=cfg.seed, n_init=cfg.n_init, max_iter=cfg.max_iter, tol=cfg.tol
    ).fit(points)
    return Labeling(assignments=est.labels_, k=cfg.k)


def ward_linkage(points, k: int) -> Labeling:
    est = WardLinkage(n_clusters=k).fit(points)
    return Labeling(assignments=est.labels_, k=k)


def gmm_em(points, cfg: ClusteringConfig) -> Labeling:
    est = GaussianMixtureEM(
        n_clusters=cfg.k, seed=cfg.seed, n_init=cfg.n_init, max_iter=cfg.max_iter, tol=cfg.tol
    ).fit(points)
    return Labeling(assignments=est.labels_, k=cfg.k)


def run_config(points, cfg: ClusteringConfig) -> Labeling:
    if cfg.algorithm == "kmeans":
        return kmeans(points, cfg)
    if cfg.algorithm == "ward":
        return ward_linkage(points, cfg.k)
    return gmm_em(points, cfg)
