"""Utility functions and helpers for knotfloer."""

from .logging import logger, Logger
from .errors import (
    KnotFloerError,
    KfcSyntaxError,
    ComplexValidationError,
    DomainError,
    NotAKnotComplexError,
    ReconstructionError,
    VerificationError,
)
from .helpers import (
    format_rational,
    parse_rational,
    parse_int,
    content_lines,
    read_text_file,
    safe_file_write,
)

__all__ = [
    "logger",
    "Logger",
    "KnotFloerError",
    "KfcSyntaxError",
    "ComplexValidationError",
    "DomainError",
    "NotAKnotComplexError",
    "ReconstructionError",
    "VerificationError",
    "format_rational",
    "parse_rational",
    "parse_int",
    "content_lines",
    "read_text_file",
    "safe_file_write",
]
