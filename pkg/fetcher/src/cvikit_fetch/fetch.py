"""Download the benchmark's real datasets and emit canonical CSVs.

Twelve datasets from three sources: scikit-learn built-ins, the UCI
repository, and zip archives hosted by UCI.  Every entry pins the
expected (rows, features, classes) shape; a mismatch is an integrity
failure, not a warning.  Raw downloads are cached, and a sha256 can be
pinned per file once computed (see ``pin_checksums``) so later runs can
verify the cache without the network.
"""

from __future__ import annotations

import hashlib
import io
import time
import zipfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np
import requests

from .canonical import write_canonical_csv
from .exceptions import FetchError, IntegrityError, InvalidNameError

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"
DEFAULT_CACHE = Path("data/_cache")


@dataclass(frozen=True)
class RemoteFile:
    url: str
    sha256: str | None = None  # pinned once known; None means "not pinned yet"

    @property
    def filename(self) -> str:
        return self.url.rsplit("/", 1)[1]


@dataclass(frozen=True)
class DatasetSpec:
    name: str
    title: str
    expected_shape: tuple[int, int, int]  # (rows, features, classes)
    builder: Callable
    files: tuple[RemoteFile, ...] = field(default=())


def _parse_delimited(text: str, *, class_index: int, delimiter: str | None = ",",
                     drop_columns: tuple[int, ...] = ()) -> tuple[np.ndarray, list[str]]:
    rows = []
    labels = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        cells = line.split(delimiter) if delimiter else line.split()
        skip = {class_index % len(cells), *(d % len(cells) for d in drop_columns)}
        rows.append([float(c) for i, c in enumerate(cells) if i not in skip])
        labels.append(cells[class_index].strip())
    return np.asarray(rows, dtype=float), labels


def _from_sklearn(loader_name: str):
    def build(_raw, cache_dir):
        from sklearn import datasets as sk_datasets

        bundle = getattr(sk_datasets, loader_name)()
        return np.asarray(bundle.data, dtype=float), [str(t) for t in bundle.target]

    return build


def _olivetti(_raw, cache_dir):
    from sklearn import datasets as sk_datasets

    try:
        bundle = sk_datasets.fetch_olivetti_faces(data_home=str(cache_dir))
    except Exception as exc:  # download layer raises many types
        raise FetchError(f"olivetti faces download failed: {exc}") from exc
    return np.asarray(bundle.data, dtype=float), [str(t) for t in bundle.target]


def _concat_delimited(*, class_index, delimiter=",", drop_columns=()):
    def build(raw: dict[str, bytes], cache_dir):
        text = "\n".join(raw[name].decode("utf-8") for name in sorted(raw))
        return _parse_delimited(text, class_index=class_index, delimiter=delimiter,
                                drop_columns=drop_columns)

    return build


def _vertebral(raw: dict[str, bytes], cache_dir):
    archive = zipfile.ZipFile(io.BytesIO(raw["vertebral_column_data.zip"]))
    text = archive.read("column_3C.dat").decode("utf-8")
    return _parse_delimited(text, class_index=-1, delimiter=None)


REGISTRY: dict[str, DatasetSpec] = {
    spec.name: spec
    for spec in (
        DatasetSpec("iris", "Iris plants", (150, 4, 3), _from_sklearn("load_iris")),
        DatasetSpec(
            "digits", "Optical recognition of handwritten digits", (5620, 64, 10),
            _concat_delimited(class_index=-1),
            (RemoteFile(f"{UCI}/optdigits/optdigits.tra"),
             RemoteFile(f"{UCI}/optdigits/optdigits.tes")),
        ),
        DatasetSpec("wine", "Wine recognition", (178, 13, 3), _from_sklearn("load_wine")),
        DatasetSpec("cancer", "Breast cancer Wisconsin (diagnostic)", (569, 30, 2),
                    _from_sklearn("load_breast_cancer")),
        DatasetSpec("faces", "Olivetti faces", (400, 4096, 40), _olivetti),
        DatasetSpec(
            "vertebral", "Vertebral column", (310, 6, 3), _vertebral,
            (RemoteFile(f"{UCI}/00212/vertebral_column_data.zip"),),
        ),
        DatasetSpec(
            "haberman", "Haberman's survival", (306, 3, 2),
            _concat_delimited(class_index=-1),
            (RemoteFile(f"{UCI}/haberman/haberman.data"),),
        ),
        DatasetSpec(
            "sonar", "Sonar, mines vs. rocks", (208, 60, 2),
            _concat_delimited(class_index=-1),
            (RemoteFile(f"{UCI}/undocumented/connectionist-bench/sonar/sonar.all-data"),),
        ),
        DatasetSpec(
            "tae", "Teaching assistant evaluation", (151, 5, 3),
            _concat_delimited(class_index=-1),
            (RemoteFile(f"{UCI}/tae/tae.data"),),
        ),
        DatasetSpec(
            "thy", "Thyroid disease (new-thyroid)", (215, 5, 3),
            _concat_delimited(class_index=0),
            (RemoteFile(f"{UCI}/thyroid-disease/new-thyroid.data"),),
        ),
        DatasetSpec(
            "vehicle", "Vehicle silhouettes", (946, 18, 4),
            _concat_delimited(class_index=-1, delimiter=None),
            tuple(RemoteFile(f"{UCI}/statlog/vehicle/xa{c}.dat") for c in "abcdefghi"),
        ),
        DatasetSpec(
            "zoo", "Zoo", (101, 16, 7),
            _concat_delimited(class_index=-1, drop_columns=(0,)),
            (RemoteFile(f"{UCI}/zoo/zoo.data"),),
        ),
    )
}

DATASET_NAMES = tuple(REGISTRY)


def _sha256(blob: bytes) -> str:
    return hashlib.sha256(blob).hexdigest()


def _download(remote: RemoteFile, cache_dir: Path, *, retries: int = 3, timeout: float = 30.0) -> bytes:
    cached = cache_dir / remote.filename
    if cached.exists():
        blob = cached.read_bytes()
        if remote.sha256 and _sha256(blob) != remote.sha256:
            raise IntegrityError(f"{cached}: cached file does not match the pinned sha256")
        return blob
    last = None
    for attempt in range(retries):
        try:
            response = requests.get(remote.url, timeout=timeout)
            response.raise_for_status()
            blob = response.content
            break
        except requests.RequestException as exc:
            last = exc
            time.sleep(min(0.5 * 2.0**attempt, 2.0))
    else:
        raise FetchError(f"could not download {remote.url} after {retries} attempts: {last}")
    if remote.sha256 and _sha256(blob) != remote.sha256:
        raise IntegrityError(f"{remote.url}: downloaded file does not match the pinned sha256")
    cache_dir.mkdir(parents=True, exist_ok=True)
    cached.write_bytes(blob)
    return blob


def fetch_real(name: str, out_dir="data/real", cache_dir=DEFAULT_CACHE) -> Path:
    """Fetch one dataset by name and write ``<out_dir>/<name>.csv``.

    Raises ``InvalidNameError`` for unknown names, ``FetchError`` when the
    source is unreachable, and ``IntegrityError`` when a checksum or the
    (rows, features, classes) shape disagrees with the pinned expectation.
    """
    spec = REGISTRY.get(name)
    if spec is None:
        raise InvalidNameError(f"unknown dataset {name!r}; choose from {', '.join(REGISTRY)}")
    cache_dir = Path(cache_dir)
    raw = {remote.filename: _download(remote, cache_dir) for remote in spec.files}
    try:
        points, labels = spec.builder(raw, cache_dir)
    except (ValueError, KeyError, zipfile.BadZipFile) as exc:
        raise IntegrityError(f"{name}: cannot parse source data: {exc}") from exc

    got = (points.shape[0], points.shape[1], len(set(labels)))
    if got != spec.expected_shape:
        raise IntegrityError(
            f"{name}: got rows/features/classes {got}, expected {spec.expected_shape}"
        )
    return write_canonical_csv(points, labels, Path(out_dir) / f"{name}.csv")


def fetch_all(out_dir="data/real", cache_dir=DEFAULT_CACHE) -> dict[str, Path | Exception]:
    """Fetch every registered dataset; failures are collected, not raised."""
    results: dict[str, Path | Exception] = {}
    for name in REGISTRY:
        try:
            results[name] = fetch_real(name, out_dir=out_dir, cache_dir=cache_dir)
        except Exception as exc:
            results[name] = exc
    return results


def pin_checksums(cache_dir=DEFAULT_CACHE) -> dict[str, str]:
    """sha256 of every cached raw file, for committing into the registry."""
    cache_dir = Path(cache_dir)
    out = {}
    for spec in REGISTRY.values():
        for remote in spec.files:
            cached = cache_dir / remote.filename
            if cached.exists():
                out[remote.filename] = _sha256(cached.read_bytes())
    return out
