"""Typed errors raised across the package.

Each error carries a short machine-readable ``code``; the CLI prints it as
``error[<code>]: <message>`` and exits nonzero.
"""


class CvikitError(Exception):
    """Base class for all cvikit errors."""

    code = "error"


class MalformedFileError(CvikitError):
    code = "malformed-file"


class InvalidValueError(CvikitError):
    code = "invalid-value"


class TooSmallError(CvikitError):
    code = "too-small"


class MissingGroundTruthError(CvikitError):
    code = "missing-ground-truth"


class EmptySampleError(CvikitError):
    code = "empty-sample"


class InvalidPartitionError(CvikitError):
    code = "invalid-partition"


class DegeneratePartitionError(CvikitError):
    code = "degenerate-partition"


class NoComputableClassError(CvikitError):
    code = "no-computable-class"


class DegenerateDivisionError(CvikitError):
    code = "divide-degenerate"


class InvalidInputError(CvikitError):
    code = "invalid-input"


class InvalidKError(CvikitError):
    code = "invalid-k"


class NumericalFailureError(CvikitError):
    code = "numerical-failure"


class NoComputableKError(CvikitError):
    code = "no-computable-k"


class InvalidSynthSpecError(CvikitError):
    code = "invalid-spec"
