"""Distance-based separability scoring of a labeled partition.

Each class's sorted within-class distance multiset is compared with its
class-vs-rest multiset through the two-sample KS statistic; the score is
the unweighted mean of the per-class statistics.  Randomly labeled,
identically distributed classes drive the statistics toward zero as the
sample grows; compact, mutually distant clusters push them toward one.
Higher means better separated.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ..distances import cross_class_values, within_class_values
from ..exceptions import InvalidPartitionError, NoComputableClassError
from ..ks import ks_two_sample
from ..validation import check_labels, check_points


@dataclass(frozen=True)
class DsiScore:
    """Mean per-class KS separability in [0, 1], plus the per-class detail."""

    value: float
    per_class: tuple[float, ...]
    skipped_classes: tuple[int, ...]


def dsi(points, labels, *, subsample_cap: int | None = None, seed: int = 0) -> DsiScore:
    """Distance Separability Index of a labeling.

    Classes with fewer than two points have no within-class distances;
    they are excluded from the mean and reported in ``skipped_classes``
    with a warning.  ``subsample_cap`` (default off) bounds the O(N^2)
    distance cost by scoring a seeded uniform sample of at most that many
    points.
    """
    X = check_points(points)
    arr, k = check_labels(labels, n=X.shape[0])
    if k < 2:
        raise InvalidPartitionError(f"need at least 2 classes, got {k}")

    if subsample_cap is not None and X.shape[0] > subsample_cap:
        if subsample_cap < 2:
            raise InvalidPartitionError("subsample_cap must be at least 2")
        rng = np.random.default_rng(seed)
        idx = np.sort(rng.choice(X.shape[0], size=subsample_cap, replace=False))
        X = X[idx]
        arr = arr[idx]

    per_class: list[float] = []
    skipped: list[int] = []
    for c in range(k):
        mask = arr == c
        n_c = int(mask.sum())
        if n_c < 2 or n_c == X.shape[0]:
            skipped.append(c)
            continue
        icd = within_class_values(X, mask)
        bcd = cross_class_values(X, mask)
        per_class.append(ks_two_sample(icd, bcd))

    if not per_class:
        raise NoComputableClassError("every class is degenerate (fewer than 2 members)")
    if skipped:
        warnings.warn(
            f"classes {skipped} have fewer than 2 members and were excluded from the mean",
            stacklevel=2,
        )
    return DsiScore(
        value=float(np.mean(per_class)),
        per_class=tuple(per_class),
        skipped_classes=tuple(skipped),
    )


def dsi_score(points, labels, *, subsample_cap: int | None = None, seed: int = 0) -> float:
    """Scalar convenience wrapper around :func:`dsi`."""
    return dsi(points, labels, subsample_cap=subsample_cap, seed=seed).value
