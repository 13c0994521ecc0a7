"""Exception types shared across the toolkit.

Input validation failures raise plain ValueError; the classes below cover
failures that are about object *state* or run conditions rather than bad
arguments.
"""


class CertideldError(Exception):
    """Base class for toolkit-specific errors."""


class ConsumedRegisterError(CertideldError):
    """A single-use quantum register was measured or taken twice."""


class PhaseError(CertideldError):
    """A protocol message arrived in the wrong phase, or a phase was replayed."""


class DecryptionError(CertideldError):
    """Inner ciphertext failed authentication or could not be parsed."""


class ExtractionError(CertideldError):
    """The binding extractor was given a malformed commitment message."""


class ResourceLimitError(CertideldError):
    """Requested enumeration exceeds the exact-simulation dimension budget."""


class ReportFormatError(CertideldError):
    """A report file is malformed or missing required fields."""
