"""Writer for the cvikit canonical dataset CSV.

The format is the file contract between this package and cvikit: a header
row with feature columns ``f0..f{d-1}`` holding decimal floats and a
final ``label`` column of class symbols.  Floats are written with
``repr`` so a reload parses them bit-exactly.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np


def write_canonical_csv(points, labels, path) -> Path:
    points = np.asarray(points, dtype=float)
    labels = list(labels)
    if points.ndim != 2 or points.shape[0] != len(labels):
        raise ValueError("points must be (N, d) with one label per row")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"f{i}" for i in range(points.shape[1])] + ["label"])
        for row, label in zip(points, labels):
            writer.writerow([repr(float(v)) for v in row] + [str(label)])
    return path
