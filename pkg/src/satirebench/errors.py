"""Exception hierarchy shared across the package."""


class SatireBenchError(Exception):
    """Base class for all domain failures raised by this package."""


class CorpusError(SatireBenchError):
    """Bad corpus file, row, or dataset-level invariant violation."""


class TemplateError(SatireBenchError):
    """Missing or malformed prompt template."""


class BackendError(SatireBenchError):
    """Chat-completion backend failure (non-retryable or attempts exhausted)."""


class ReplayMissError(BackendError):
    """Strict replay backend got a request with no recorded response."""


class StoreError(SatireBenchError):
    """Run store or recording store write/read failure."""


class ConfigError(SatireBenchError):
    """Invalid run configuration."""
