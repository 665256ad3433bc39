"""Adjusted Rand Index, the external ground-truth measure."""

from __future__ import annotations

import numpy as np

from ..exceptions import InvalidInputError
from ..validation import dense_remap


def _as_ids(labels) -> np.ndarray:
    if hasattr(labels, "assignments"):
        labels = labels.assignments
    arr = np.asarray(labels)
    if arr.ndim != 1:
        raise InvalidInputError("labels must be a 1-D vector")
    dense, _ = dense_remap(arr.tolist())
    return dense


def adjusted_rand_index(labels_true, labels_pred) -> float:
    """Chance-corrected pair-counting agreement between two partitions.

    Equals 1 exactly iff the partitions coincide up to relabeling.  The
    degenerate case where the expected index equals the maximum index
    (both partitions all singletons, or both a single cluster) is defined
    as 0 by convention.
    """
    u = _as_ids(labels_true)
    v = _as_ids(labels_pred)
    if u.size != v.size:
        raise InvalidInputError(f"label vectors differ in length ({u.size} vs {v.size})")
    if u.size < 2:
        raise InvalidInputError("need at least 2 points")

    r = int(u.max()) + 1
    s = int(v.max()) + 1
    contingency = np.zeros((r, s), dtype=np.int64)
    np.add.at(contingency, (u, v), 1)

    def pairs(x) -> int:
        x = np.asarray(x, dtype=np.int64)
        return int((x * (x - 1) // 2).sum())

    index = pairs(contingency)
    sum_a = pairs(contingency.sum(axis=1))
    sum_b = pairs(contingency.sum(axis=0))
    total = u.size * (u.size - 1) // 2
    expected = sum_a * sum_b / total
    max_index = 0.5 * (sum_a + sum_b)
    if max_index == expected:
        return 0.0
    return float((index - expected) / (max_index - expected))
