"""Cluster validity indices: the DSI, six classical internal CVIs, and ARI."""

from __future__ import annotations

from typing import Callable, NamedTuple

from ..data import Direction
from ..exceptions import InvalidInputError
from .classic import (
    calinski_harabasz,
    davies_bouldin,
    dunn_index,
    i_index,
    silhouette,
    wb_index,
)
from .dsi import DsiScore, dsi, dsi_score
from .external import adjusted_rand_index


class CviResult(NamedTuple):
    cvi_name: str
    value: float
    direction: Direction


class CviSpec(NamedTuple):
    display_name: str
    func: Callable
    direction: Direction


#: Internal CVIs by canonical key; display names are used in report tables.
CVI_REGISTRY: dict[str, CviSpec] = {
    "dunn": CviSpec("Dunn", dunn_index, Direction.MAX),
    "ch": CviSpec("CH", calinski_harabasz, Direction.MAX),
    "db": CviSpec("DB", davies_bouldin, Direction.MIN),
    "silhouette": CviSpec("Silhouette", silhouette, Direction.MAX),
    "wb": CviSpec("WB", wb_index, Direction.MIN),
    "i": CviSpec("I", i_index, Direction.MAX),
    "dsi": CviSpec("DSI", lambda X, y, **kw: dsi_score(X, y, **kw), Direction.MAX),
}

DEFAULT_CVIS = tuple(CVI_REGISTRY)

_ALIASES = {spec.display_name.lower(): key for key, spec in CVI_REGISTRY.items()}


def resolve_cvi(name: str) -> str:
    """Canonical registry key for a CVI name (case-insensitive)."""
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in CVI_REGISTRY:
        raise InvalidInputError(f"unknown CVI {name!r}; choose from {', '.join(CVI_REGISTRY)}")
    return key


def compute_cvi(name: str, points, labels, **kwargs) -> CviResult:
    """Evaluate one registered internal CVI on a labeling.

    ``subsample_cap`` and ``seed`` only apply to the separability index
    and are dropped for the others.
    """
    key = resolve_cvi(name)
    spec = CVI_REGISTRY[key]
    if key != "dsi":
        kwargs.pop("subsample_cap", None)
        kwargs.pop("seed", None)
    value = spec.func(points, labels, **kwargs)
    return CviResult(cvi_name=spec.display_name, value=float(value), direction=spec.direction)


__all__ = [
    "CVI_REGISTRY",
    "DEFAULT_CVIS",
    "CviResult",
    "CviSpec",
    "DsiScore",
    "adjusted_rand_index",
    "calinski_harabasz",
    "compute_cvi",
    "davies_bouldin",
    "dsi",
    "dsi_score",
    "dunn_index",
    "i_index",
    "resolve_cvi",
    "silhouette",
    "wb_index",
]
