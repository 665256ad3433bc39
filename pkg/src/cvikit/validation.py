"""Input validation helpers shared by loaders, metrics and clusterers."""

from __future__ import annotations

import numpy as np

from .exceptions import (
    DegeneratePartitionError,
    InvalidInputError,
    InvalidValueError,
    TooSmallError,
)


def check_points(points, min_rows: int = 2) -> np.ndarray:
    """Return ``points`` as a validated float64 matrix of shape (N, d)."""
    X = np.asarray(points, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    if X.ndim != 2:
        raise InvalidInputError(f"points must be a 2-D matrix, got ndim={X.ndim}")
    if X.shape[0] < min_rows:
        raise TooSmallError(f"need at least {min_rows} points, got {X.shape[0]}")
    if X.shape[1] < 1:
        raise InvalidInputError("points must have at least one feature")
    if not np.all(np.isfinite(X)):
        raise InvalidValueError("points contain non-finite values")
    return X


def check_labels(labels, n: int | None = None) -> tuple[np.ndarray, int]:
    """Validate a cluster assignment vector and return ``(assignments, k)``.

    Accepts a plain integer array or anything exposing ``assignments``/``k``
    (a :class:`cvikit.data.Labeling`).  Ids must be exactly 0..k-1 with every
    id present; a missing id means an empty cluster.
    """
    expected_k = None
    if hasattr(labels, "assignments"):
        expected_k = getattr(labels, "k", None)
        labels = labels.assignments
    arr = np.asarray(labels)
    if arr.ndim != 1:
        raise InvalidInputError("labels must be a 1-D vector")
    if arr.size == 0:
        raise InvalidInputError("labels are empty")
    if not np.issubdtype(arr.dtype, np.integer):
        as_int = arr.astype(np.int64, copy=True)
        if not np.array_equal(as_int, arr):
            raise InvalidInputError("labels must be integers")
        arr = as_int
    else:
        arr = arr.astype(np.int64, copy=False)
    if n is not None and arr.size != n:
        raise InvalidInputError(f"expected {n} labels, got {arr.size}")
    if arr.min() < 0:
        raise InvalidInputError("labels must be non-negative")
    k = int(arr.max()) + 1
    if expected_k is not None and expected_k != k:
        if expected_k < k:
            raise InvalidInputError(f"label id {k - 1} out of range for k={expected_k}")
        k = int(expected_k)
    present = np.bincount(arr, minlength=k)
    if np.any(present == 0):
        missing = int(np.flatnonzero(present == 0)[0])
        raise DegeneratePartitionError(f"cluster {missing} is empty")
    return arr, k


def dense_remap(symbols) -> tuple[np.ndarray, dict]:
    """Map arbitrary label symbols to dense ids 0..c-1 in first-appearance order."""
    mapping: dict = {}
    out = np.empty(len(symbols), dtype=np.int64)
    for i, sym in enumerate(symbols):
        if sym not in mapping:
            mapping[sym] = len(mapping)
        out[i] = mapping[sym]
    return out, mapping


def standardize(points) -> np.ndarray:
    """Per-feature zero-mean unit-variance scaling; constant features pass through."""
    X = check_points(points)
    std = X.std(axis=0)
    std[std == 0.0] = 1.0
    return (X - X.mean(axis=0)) / std
