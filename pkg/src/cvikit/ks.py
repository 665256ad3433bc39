"""Exact two-sample Kolmogorov-Smirnov statistic.

The statistic is the supremum of |F_a(x) - F_b(x)| over the two empirical
CDFs.  Both CDFs are right-continuous step functions whose jumps all sit
at sample values, so the supremum is attained at some element of the
union; comparing the post-jump levels there is exact, ties included.
Sample sizes may differ.  No p-value is computed.
"""

from __future__ import annotations

import numpy as np

from .data import DistanceMultiset
from .exceptions import EmptySampleError, InvalidInputError


def _sorted_values(sample, side: str) -> np.ndarray:
    if isinstance(sample, DistanceMultiset):
        return sample.values
    vals = np.asarray(sample, dtype=float)
    if vals.ndim != 1:
        raise InvalidInputError(f"{side} sample must be 1-D")
    if vals.size and np.any(np.diff(vals) < 0):
        raise InvalidInputError(f"{side} sample must be sorted ascending")
    return vals


def ks_two_sample(a, b) -> float:
    """sup-norm distance between the empirical CDFs of two sorted samples.

    Accepts :class:`DistanceMultiset` or pre-sorted 1-D arrays; returns a
    value in [0, 1].  Raises ``EmptySampleError`` on an empty input.
    """
    va = _sorted_values(a, "first")
    vb = _sorted_values(b, "second")
    if va.size == 0 or vb.size == 0:
        raise EmptySampleError("both samples must be non-empty")
    union = np.concatenate([va, vb])
    union.sort()
    cdf_a = np.searchsorted(va, union, side="right") / va.size
    cdf_b = np.searchsorted(vb, union, side="right") / vb.size
    return float(np.abs(cdf_a - cdf_b).max())
