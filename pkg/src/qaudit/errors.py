"""Exception hierarchy shared across the toolkit.

The CLI maps these onto process exit codes: configuration and validation
problems exit 2, everything else that goes wrong at runtime exits 1.
"""

from __future__ import annotations


class QAuditError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(QAuditError):
    """Input data violates a documented invariant."""


class ConfigError(QAuditError):
    """A run configuration or builtin name is invalid."""


class ParseError(ValidationError):
    """Contract expression failed to parse.

    ``offset`` is the 1-based byte offset where the expected token would
    start; ``expected`` names the token class the parser wanted.
    """

    def __init__(self, message: str, offset: int, expected: str | None = None):
        super().__init__(message)
        self.offset = offset
        self.expected = expected


class DomainError(QAuditError):
    """A statistic was requested outside its mathematical domain
    (e.g. a satisfaction vector of an empty edge set)."""


class MetricUndefinedError(QAuditError):
    """Metric has no defined value on the given inputs
    (e.g. average precision with no positive labels anywhere)."""


class IngestError(ValidationError):
    """Strict-mode ingestion failed; carries the per-row error report."""

    def __init__(self, message: str, errors: list):
        super().__init__(message)
        self.errors = errors


class DivergenceError(QAuditError):
    """Training produced a non-finite loss."""
