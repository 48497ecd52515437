"""Exception types shared across the package.

Each error carries a ``category`` used by the service and CLI to map
failures onto exit codes: config -> 2, network -> 3, data -> 4.
"""


class BibliometryError(Exception):
    """Base class for package errors."""

    category = "data"


class ConfigError(BibliometryError):
    """Invalid or incomplete run configuration."""

    category = "config"


class PreconditionError(BibliometryError):
    """A stage was asked to run without its required inputs."""


class InsufficientDataError(BibliometryError):
    """Not enough data points in scope to compute a metric."""


class InvalidDistributionError(BibliometryError):
    """Proportion vector is negative somewhere or does not sum to 1."""


class AuthorNotFoundError(BibliometryError):
    """Author id does not resolve in the corpus."""


class ListingParseError(BibliometryError):
    """Malformed listing document."""

    def __init__(self, message, byte_offset=None):
        super().__init__(message)
        self.byte_offset = byte_offset


class SchemaError(BibliometryError):
    """Provider payload missing or mistyping a required field."""

    def __init__(self, message, field_path=None):
        super().__init__(message)
        self.field_path = field_path


class TransientFetchError(BibliometryError):
    """Fetch kept failing after all retries (rate limit or server errors)."""

    category = "network"
