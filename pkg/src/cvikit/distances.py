"""Pairwise Euclidean distances and per-class distance multisets.

Distance multisets are materialized as sorted vectors: a class with m
members yields m(m-1)/2 within-class distances and m*(N-m) class-vs-rest
distances, O(N^2) in total.  Callers that must bound the cost on large
inputs subsample points first (see ``subsample_cap`` in
:func:`cvikit.metrics.dsi`).
"""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist, pdist

from .data import DistanceMultiset
from .exceptions import DegeneratePartitionError, InvalidInputError
from .validation import check_labels, check_points


def pairwise_distances(points) -> np.ndarray:
    """All N(N-1)/2 Euclidean distances, condensed row-major over pairs (i, j), i < j."""
    X = check_points(points, min_rows=2)
    return pdist(X, metric="euclidean")


def within_class_values(points: np.ndarray, member_mask: np.ndarray) -> np.ndarray:
    """Sorted distances between all pairs of masked points (no validation)."""
    members = points[member_mask]
    if members.shape[0] < 2:
        return np.empty(0, dtype=float)
    vals = pdist(members, metric="euclidean")
    vals.sort()
    return vals


def cross_class_values(points: np.ndarray, member_mask: np.ndarray) -> np.ndarray:
    """Sorted distances between masked points and all others (no validation)."""
    members = points[member_mask]
    others = points[~member_mask]
    if members.shape[0] == 0 or others.shape[0] == 0:
        return np.empty(0, dtype=float)
    vals = cdist(members, others, metric="euclidean").ravel()
    vals.sort()
    return vals


def _class_mask(points, labels, class_id: int) -> tuple[np.ndarray, np.ndarray]:
    X = check_points(points)
    arr, k = check_labels(labels, n=X.shape[0])
    if not 0 <= class_id < k:
        raise InvalidInputError(f"class_id {class_id} out of range for k={k}")
    return X, arr == class_id


def icd_set(points, labels, class_id: int) -> DistanceMultiset:
    """Within-class distance multiset for one class.

    A class with fewer than two members has no pairs; the result is then
    empty and flagged degenerate.
    """
    X, mask = _class_mask(points, labels, class_id)
    vals = within_class_values(X, mask)
    if vals.size == 0:
        return DistanceMultiset(values=vals, degenerate=True)
    return DistanceMultiset(values=vals)


def bcd_set(points, labels, class_id: int) -> DistanceMultiset:
    """Class-vs-rest distance multiset: one class against all other classes pooled."""
    X, mask = _class_mask(points, labels, class_id)
    n_members = int(mask.sum())
    if n_members == 0 or n_members == X.shape[0]:
        raise DegeneratePartitionError(
            f"class {class_id} or its complement is empty ({n_members} of {X.shape[0]} points)"
        )
    return DistanceMultiset(values=cross_class_values(X, mask))
