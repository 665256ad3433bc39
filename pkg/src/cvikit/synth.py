"""Seeded synthetic labeled datasets: Gaussian blobs, rings, moons.

Blobs give compact convex clusters; rings (a radius of 0 degenerates to
a center blob) and moons give non-convex shapes on which centroid-based
indices and distribution-based ones disagree.
"""

from __future__ import annotations

import numpy as np

from .data import Dataset
from .exceptions import InvalidSynthSpecError

KINDS = ("blobs", "rings", "moons")


def _positive_int(value, what: str, minimum: int) -> int:
    try:
        ivalue = int(value)
    except (TypeError, ValueError):
        raise InvalidSynthSpecError(f"{what} must be an integer, got {value!r}") from None
    if ivalue < minimum:
        raise InvalidSynthSpecError(f"{what} must be at least {minimum}, got {ivalue}")
    return ivalue


def _nonnegative(value, what: str) -> float:
    try:
        fvalue = float(value)
    except (TypeError, ValueError):
        raise InvalidSynthSpecError(f"{what} must be a number, got {value!r}") from None
    if fvalue < 0:
        raise InvalidSynthSpecError(f"{what} must be non-negative, got {fvalue}")
    return fvalue


def blobs(
    n_clusters: int = 3,
    n_per_cluster: int = 50,
    std: float = 1.0,
    spread: float = 10.0,
    dim: int = 2,
    *,
    seed: int = 0,
    name: str = "blobs",
) -> Dataset:
    """Isotropic Gaussian clusters whose centers sit ``spread`` apart.

    Centers are placed evenly on a circle in the first two dimensions with
    chord length ``spread``, so every pair of centers is at least
    ``spread`` apart.
    """
    k = _positive_int(n_clusters, "n_clusters", 1)
    n = _positive_int(n_per_cluster, "n_per_cluster", 2)
    dim = _positive_int(dim, "dim", 2)
    std = _nonnegative(std, "std")
    spread = _nonnegative(spread, "spread")
    rng = np.random.default_rng(seed)
    centers = np.zeros((k, dim))
    if k > 1:
        radius = spread / (2.0 * np.sin(np.pi / k))
        angles = 2.0 * np.pi * np.arange(k) / k
        centers[:, 0] = radius * np.cos(angles)
        centers[:, 1] = radius * np.sin(angles)
    points = np.vstack([centers[c] + rng.normal(0.0, std, size=(n, dim)) for c in range(k)])
    labels = np.repeat(np.arange(k), n)
    return Dataset(points=points, true_labels=labels, name=name)


def rings(
    radii=(1.0, 3.0),
    n_per_ring: int = 100,
    noise: float = 0.05,
    *,
    seed: int = 0,
    name: str = "rings",
) -> Dataset:
    """Concentric noisy circles; a radius of 0 yields a central blob."""
    radii = tuple(_nonnegative(r, "radius") for r in radii)
    if not radii:
        raise InvalidSynthSpecError("radii must be non-empty")
    n = _positive_int(n_per_ring, "n_per_ring", 2)
    noise = _nonnegative(noise, "noise")
    rng = np.random.default_rng(seed)
    chunks = []
    for r in radii:
        theta = rng.uniform(0.0, 2.0 * np.pi, size=n)
        ring = np.column_stack([r * np.cos(theta), r * np.sin(theta)])
        chunks.append(ring + rng.normal(0.0, noise, size=(n, 2)))
    points = np.vstack(chunks)
    labels = np.repeat(np.arange(len(radii)), n)
    return Dataset(points=points, true_labels=labels, name=name)


def moons(
    n_per_moon: int = 100,
    noise: float = 0.05,
    *,
    seed: int = 0,
    name: str = "moons",
) -> Dataset:
    """Two interleaving half-circles."""
    n = _positive_int(n_per_moon, "n_per_moon", 2)
    noise = _nonnegative(noise, "noise")
    rng = np.random.default_rng(seed)
    t = np.linspace(0.0, np.pi, n)
    outer = np.column_stack([np.cos(t), np.sin(t)])
    inner = np.column_stack([1.0 - np.cos(t), 0.5 - np.sin(t)])
    points = np.vstack([outer, inner]) + rng.normal(0.0, noise, size=(2 * n, 2))
    labels = np.repeat(np.arange(2), n)
    return Dataset(points=points, true_labels=labels, name=name)


_GENERATORS = {"blobs": blobs, "rings": rings, "moons": moons}


def generate_synthetic(kind: str, seed: int = 0, name: str | None = None, **params) -> Dataset:
    """Dispatch on ``kind`` in {blobs, rings, moons}; invalid parameters raise."""
    if kind not in _GENERATORS:
        raise InvalidSynthSpecError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    gen = _GENERATORS[kind]
    kwargs = dict(params, seed=seed)
    if name is not None:
        kwargs["name"] = name
    try:
        return gen(**kwargs)
    except TypeError as exc:
        raise InvalidSynthSpecError(f"bad parameters for {kind}: {exc}") from None
