"""Acquisition scripts for the clustering benchmark's real datasets.

Downloads the twelve real datasets (scikit-learn built-ins, UCI, and
zip archives) and converts ARFF benchmark files, emitting the canonical
dataset CSV consumed by the cvikit CLI.
"""

__version__ = "0.1.0"

from .arff import convert_arff
from .canonical import write_canonical_csv
from .exceptions import (
    FetchError,
    FetchToolError,
    IntegrityError,
    InvalidNameError,
    MalformedArffError,
    UnsupportedAttributeError,
)
from .fetch import DATASET_NAMES, REGISTRY, fetch_all, fetch_real, pin_checksums

__all__ = [
    "DATASET_NAMES",
    "FetchError",
    "FetchToolError",
    "IntegrityError",
    "InvalidNameError",
    "MalformedArffError",
    "REGISTRY",
    "UnsupportedAttributeError",
    "convert_arff",
    "fetch_all",
    "fetch_real",
    "pin_checksums",
    "write_canonical_csv",
]
