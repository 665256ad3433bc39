"""Cluster-count prediction: sweep k, pick the CVI-optimal clustering."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .cluster import ClusteringConfig, run_config
from .data import Direction
from .exceptions import CvikitError, InvalidKError, NoComputableKError
from .metrics import CVI_REGISTRY, compute_cvi, resolve_cvi
from .validation import check_points

DEFAULT_K_VALUES = (2, 3, 4, 5, 6)


@dataclass(frozen=True)
class KPrediction:
    """Outcome of one sweep: per-k scores and the selected cluster count.

    ``scores`` aligns with ``k_values``; entries where clustering or the
    CVI degenerated are NaN and excluded from selection.  ``success`` is
    set only when the true class count was supplied.
    """

    cvi_name: str
    algorithm: str
    k_values: tuple[int, ...]
    scores: tuple[float, ...]
    k_hat: int
    success: bool | None = None


def predict_k(
    points,
    algorithm_cfg: ClusteringConfig,
    cvi: str,
    k_values=DEFAULT_K_VALUES,
    true_c: int | None = None,
    *,
    subsample_cap: int | None = None,
) -> KPrediction:
    """Cluster at every k in ``k_values`` and select the CVI-optimal k.

    Ties break toward the smaller k.  A k whose clustering or score is
    degenerate is skipped with a warning; if every k degenerates a
    ``NoComputableKError`` is raised.
    """
    X = check_points(points)
    k_values = tuple(int(k) for k in k_values)
    if not k_values:
        raise InvalidKError("k_values is empty")
    for k in k_values:
        if k < 2 or k > X.shape[0]:
            raise InvalidKError(f"swept k={k} must lie in 2..{X.shape[0]}")
    key = resolve_cvi(cvi)
    spec = CVI_REGISTRY[key]

    scores: list[float] = []
    for k in k_values:
        try:
            labeling = run_config(X, algorithm_cfg.with_k(k))
            result = compute_cvi(key, X, labeling, subsample_cap=subsample_cap,
                                 seed=algorithm_cfg.seed)
            scores.append(result.value)
        except CvikitError as exc:
            warnings.warn(f"k={k} skipped: {exc}", stacklevel=2)
            scores.append(float("nan"))

    usable = [(k, s) for k, s in zip(k_values, scores) if np.isfinite(s)]
    if not usable:
        raise NoComputableKError(f"no k in {k_values} produced a finite {spec.display_name} score")
    sign = 1.0 if spec.direction is Direction.MAX else -1.0
    k_hat, _ = max(sorted(usable), key=lambda pair: (sign * pair[1], -pair[0]))
    success = None if true_c is None else bool(k_hat == true_c)
    return KPrediction(
        cvi_name=spec.display_name,
        algorithm=algorithm_cfg.algorithm,
        k_values=k_values,
        scores=tuple(scores),
        k_hat=int(k_hat),
        success=success,
    )
