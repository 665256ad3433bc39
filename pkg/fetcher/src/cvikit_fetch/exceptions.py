"""Typed errors for the acquisition scripts."""


class FetchToolError(Exception):
    code = "error"


class InvalidNameError(FetchToolError):
    code = "invalid-name"


class FetchError(FetchToolError):
    """Download failed after retries; retrying later may succeed."""

    code = "fetch-error"


class IntegrityError(FetchToolError):
    """Checksum or shape mismatch against the pinned expectation."""

    code = "integrity-error"


class UnsupportedAttributeError(FetchToolError):
    code = "unsupported-attribute"


class MalformedArffError(FetchToolError):
    code = "malformed-file"
