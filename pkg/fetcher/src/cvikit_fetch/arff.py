"""ARFF to canonical CSV conversion.

Handles the common benchmark layout: numeric feature attributes plus one
nominal class attribute (named ``class`` when present, otherwise the last
nominal attribute).  Anything else, including missing values, is
rejected rather than guessed at.
"""

from __future__ import annotations

import io
import re
from pathlib import Path

import numpy as np
from scipy.io import arff as scipy_arff

from .canonical import write_canonical_csv
from .exceptions import MalformedArffError, UnsupportedAttributeError

_ATTRIBUTE = re.compile(r"^\s*@attribute\s+('[^']+'|\"[^\"]+\"|\S+)\s+(.+?)\s*$", re.IGNORECASE)


def _declared_attributes(text: str) -> list[tuple[str, str]]:
    """(name, kind) pairs from the header; kind is numeric/nominal/other."""
    attrs = []
    for line in text.splitlines():
        if line.strip().lower().startswith("@data"):
            break
        match = _ATTRIBUTE.match(line)
        if not match:
            continue
        name = match.group(1).strip("'\"")
        spec = match.group(2).strip()
        if spec.startswith("{"):
            kind = "nominal"
        elif spec.lower() in ("numeric", "real", "integer"):
            kind = "numeric"
        else:
            kind = spec.lower()
        attrs.append((name, kind))
    return attrs


def _pick_label_attribute(attrs: list[tuple[str, str]]) -> str:
    nominal = [name for name, kind in attrs if kind == "nominal"]
    for name in nominal:
        if name.lower() == "class":
            return name
    if nominal:
        return nominal[-1]
    raise UnsupportedAttributeError("no nominal class attribute found")


def convert_arff(path, out_path=None) -> Path:
    """Convert one ARFF file; returns the path of the CSV written."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedArffError(f"{path}: {exc}") from exc

    attrs = _declared_attributes(text)
    if not attrs:
        raise MalformedArffError(f"{path}: no @attribute declarations found")
    label_attr = _pick_label_attribute(attrs)
    feature_attrs = []
    for name, kind in attrs:
        if name == label_attr:
            continue
        if kind != "numeric":
            raise UnsupportedAttributeError(f"{path}: attribute {name!r} is {kind}, not numeric")
        feature_attrs.append(name)
    if not feature_attrs:
        raise UnsupportedAttributeError(f"{path}: no numeric feature attributes")

    try:
        data, _meta = scipy_arff.loadarff(io.StringIO(text))
    except (ValueError, NotImplementedError) as exc:
        raise MalformedArffError(f"{path}: {exc}") from exc

    points = np.column_stack([np.asarray(data[name], dtype=float) for name in feature_attrs])
    if not np.all(np.isfinite(points)):
        raise UnsupportedAttributeError(f"{path}: missing or non-finite feature values")
    labels = [v.decode() if isinstance(v, bytes) else str(v) for v in data[label_attr]]

    if out_path is None:
        out_path = path.with_suffix(".csv")
    return write_canonical_csv(points, labels, out_path)
