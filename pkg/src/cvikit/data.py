"""Core data types and canonical CSV formats.

Three on-disk formats are understood, all UTF-8 CSV with a header row:

* dataset CSV: feature columns named ``f0..f{d-1}`` holding decimal
  floats, plus an optional final ``label`` column of class symbols;
* score-matrix CSV: header ``validity,direction,<method1>,...``; the
  first data row must be the ``ARI`` ground truth with direction ``+``;
  every later row is one CVI, with direction ``+`` (max is best) or
  ``-`` (min is best);
* label CSV: a single ``cluster`` column of integer ids, one per point.

All types are immutable after construction and safe to share across
threads; the loaders are pure functions of file content.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .exceptions import (
    InvalidInputError,
    InvalidValueError,
    MalformedFileError,
    MissingGroundTruthError,
    TooSmallError,
)
from .validation import check_labels, check_points, dense_remap

LABEL_COLUMN = "label"
CLUSTER_COLUMN = "cluster"
ARI_NAME = "ARI"


class Direction(enum.Enum):
    """Which extreme of a score is optimal."""

    MAX = "+"
    MIN = "-"

    @classmethod
    def from_marker(cls, marker: str) -> "Direction":
        marker = marker.strip()
        if marker == "+":
            return cls.MAX
        if marker == "-":
            return cls.MIN
        raise InvalidValueError(f"unknown direction marker {marker!r} (expected '+' or '-')")


@dataclass(frozen=True)
class Dataset:
    """A point matrix with optional ground-truth class labels."""

    points: np.ndarray
    true_labels: np.ndarray | None = None
    name: str = ""

    def __post_init__(self):
        X = check_points(self.points)
        object.__setattr__(self, "points", X)
        if self.true_labels is not None:
            arr, _ = check_labels(self.true_labels, n=X.shape[0])
            object.__setattr__(self, "true_labels", arr)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]

    @property
    def n_classes(self) -> int | None:
        if self.true_labels is None:
            return None
        return int(self.true_labels.max()) + 1


@dataclass(frozen=True)
class Labeling:
    """A finished cluster assignment: dense ids 0..k-1, no empty clusters."""

    assignments: np.ndarray
    k: int

    def __post_init__(self):
        arr, k = check_labels(self.assignments)
        if k != self.k:
            raise InvalidInputError(f"assignments use {k} clusters, declared k={self.k}")
        object.__setattr__(self, "assignments", arr)

    @classmethod
    def from_assignments(cls, assignments) -> "Labeling":
        arr, k = check_labels(assignments)
        return cls(assignments=arr, k=k)

    def __len__(self) -> int:
        return self.assignments.size


@dataclass(frozen=True)
class DistanceMultiset:
    """A sorted multiset of non-negative pairwise distances.

    ``degenerate`` marks an empty set produced from a class too small to
    have any within-class pair; callers decide how to treat it.
    """

    values: np.ndarray
    degenerate: bool = False

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1:
            raise InvalidInputError("distance multiset must be 1-D")
        if vals.size:
            if not np.all(np.isfinite(vals)):
                raise InvalidValueError("distance multiset contains non-finite values")
            if vals[0] < 0:
                raise InvalidValueError("distances must be non-negative")
            if np.any(np.diff(vals) < 0):
                raise InvalidInputError("distance multiset must be sorted ascending")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class ScoreSequence:
    """One CVI's scores across clustering methods, with its optimum direction."""

    cvi_name: str
    scores: np.ndarray
    direction: Direction

    def __post_init__(self):
        vals = np.asarray(self.scores, dtype=float)
        if vals.ndim != 1 or vals.size < 2:
            raise InvalidInputError("score sequence needs at least two entries")
        if not np.all(np.isfinite(vals)):
            raise InvalidValueError(f"{self.cvi_name}: score sequence contains non-finite values")
        object.__setattr__(self, "scores", vals)

    def __len__(self) -> int:
        return self.scores.size


@dataclass(frozen=True)
class ScoreMatrix:
    """Scores of several CVIs across clustering methods, with the ARI truth row."""

    methods: tuple[str, ...]
    ari_row: ScoreSequence
    cvi_rows: tuple[ScoreSequence, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "methods", tuple(self.methods))
        object.__setattr__(self, "cvi_rows", tuple(self.cvi_rows))
        m = len(self.methods)
        if m < 2:
            raise InvalidInputError("score matrix needs at least two methods")
        if self.ari_row.direction is not Direction.MAX:
            raise InvalidInputError("ARI row must have direction '+'")
        for row in (self.ari_row, *self.cvi_rows):
            if len(row) != m:
                raise InvalidInputError(
                    f"row {row.cvi_name!r} has {len(row)} scores for {m} methods"
                )


@dataclass(frozen=True)
class RankSequence:
    """Quantized ranks of one score sequence; 1 marks the optimum."""

    ranks: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.ranks)
        if arr.ndim != 1 or arr.size < 2:
            raise InvalidInputError("rank sequence needs at least two entries")
        arr = arr.astype(np.int64, copy=False)
        n = arr.size
        if arr.min() < 1 or arr.max() > n - 1:
            raise InvalidInputError(f"ranks must lie in 1..{n - 1}")
        if not np.any(arr == 1):
            raise InvalidInputError("some entry must have rank 1")
        object.__setattr__(self, "ranks", arr)

    def __len__(self) -> int:
        return self.ranks.size


def _read_rows(path) -> list[list[str]]:
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as fh:
            rows = [row for row in csv.reader(fh) if row]
    except OSError as exc:
        raise MalformedFileError(f"cannot read {path}: {exc}") from exc
    except (csv.Error, UnicodeDecodeError) as exc:
        raise MalformedFileError(f"{path}: {exc}") from exc
    if not rows:
        raise MalformedFileError(f"{path}: empty file")
    return rows


def _parse_float(cell: str, path, context: str) -> float:
    try:
        value = float(cell)
    except ValueError as exc:
        raise MalformedFileError(f"{path}: {context}: cannot parse {cell!r} as float") from exc
    if not np.isfinite(value):
        raise InvalidValueError(f"{path}: {context}: non-finite value {cell!r}")
    return value


def load_dataset_csv(path, label_column: str | None = None) -> Dataset:
    """Load a canonical dataset CSV.

    When ``label_column`` is None the column named ``label`` is used if
    present; label symbols are remapped to dense ids 0..c-1 in
    first-appearance order.
    """
    path = Path(path)
    rows = _read_rows(path)
    header = [h.strip() for h in rows[0]]
    if label_column is not None:
        if label_column not in header:
            raise MalformedFileError(f"{path}: label column {label_column!r} not found")
        label_idx = header.index(label_column)
    elif LABEL_COLUMN in header:
        label_idx = header.index(LABEL_COLUMN)
    else:
        label_idx = None
    feature_idx = [i for i in range(len(header)) if i != label_idx]
    if not feature_idx:
        raise MalformedFileError(f"{path}: no feature columns")

    data_rows = rows[1:]
    if len(data_rows) < 2:
        raise TooSmallError(f"{path}: need at least 2 data rows, got {len(data_rows)}")
    points = np.empty((len(data_rows), len(feature_idx)), dtype=float)
    symbols: list[str] = []
    for r, row in enumerate(data_rows):
        if len(row) != len(header):
            raise MalformedFileError(f"{path}: row {r + 2} has {len(row)} cells, expected {len(header)}")
        for c, i in enumerate(feature_idx):
            points[r, c] = _parse_float(row[i], path, f"row {r + 2}, column {header[i]!r}")
        if label_idx is not None:
            symbols.append(row[label_idx].strip())

    labels = None
    if label_idx is not None:
        labels, _ = dense_remap(symbols)
    return Dataset(points=points, true_labels=labels, name=path.stem)


def save_dataset_csv(dataset: Dataset, path) -> Path:
    """Write a Dataset in canonical CSV form (floats at full round-trip precision)."""
    path = Path(path)
    header = [f"f{i}" for i in range(dataset.d)]
    if dataset.true_labels is not None:
        header.append(LABEL_COLUMN)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for i in range(dataset.n):
            row = [repr(float(v)) for v in dataset.points[i]]
            if dataset.true_labels is not None:
                row.append(str(int(dataset.true_labels[i])))
            writer.writerow(row)
    return path


def load_score_matrix(path) -> ScoreMatrix:
    """Load a score-matrix CSV; the first data row must be the ARI truth row."""
    path = Path(path)
    rows = _read_rows(path)
    header = [h.strip() for h in rows[0]]
    if len(header) < 4 or header[0].lower() != "validity" or header[1].lower() != "direction":
        raise MalformedFileError(f"{path}: expected header 'validity,direction,<method1>,...'")
    methods = tuple(header[2:])
    if len(rows) < 2:
        raise MissingGroundTruthError(f"{path}: no data rows (ARI row required)")

    sequences: list[ScoreSequence] = []
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise MalformedFileError(f"{path}: row {r} has {len(row)} cells, expected {len(header)}")
        name = row[0].strip()
        direction = Direction.from_marker(row[1])
        scores = [_parse_float(cell, path, f"row {r} ({name})") for cell in row[2:]]
        sequences.append(ScoreSequence(cvi_name=name, scores=np.array(scores), direction=direction))

    first = sequences[0]
    if first.cvi_name.upper() != ARI_NAME:
        raise MissingGroundTruthError(f"{path}: first data row must be {ARI_NAME}, got {first.cvi_name!r}")
    if first.direction is not Direction.MAX:
        raise MissingGroundTruthError(f"{path}: ARI row must have direction '+'")
    return ScoreMatrix(methods=methods, ari_row=first, cvi_rows=tuple(sequences[1:]), name=path.stem)


def save_score_matrix(matrix: ScoreMatrix, path) -> Path:
    """Write a score matrix at full precision (ingestible by :func:`load_score_matrix`)."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["validity", "direction", *matrix.methods])
        for row in (matrix.ari_row, *matrix.cvi_rows):
            writer.writerow([row.cvi_name, row.direction.value, *[repr(float(s)) for s in row.scores]])
    return path


def load_label_file(path) -> np.ndarray:
    """Load an external labeling (single 'cluster' column) as dense ids."""
    path = Path(path)
    rows = _read_rows(path)
    header = [h.strip() for h in rows[0]]
    if header != [CLUSTER_COLUMN]:
        raise MalformedFileError(f"{path}: expected single column {CLUSTER_COLUMN!r}, got {header}")
    ids = []
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != 1:
            raise MalformedFileError(f"{path}: row {r} has {len(row)} cells, expected 1")
        try:
            ids.append(int(row[0]))
        except ValueError as exc:
            raise MalformedFileError(f"{path}: row {r}: cannot parse {row[0]!r} as int") from exc
    if not ids:
        raise MalformedFileError(f"{path}: no label rows")
    dense, _ = dense_remap(ids)
    return dense
