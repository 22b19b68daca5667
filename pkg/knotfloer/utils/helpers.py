"""Helper utility functions for knotfloer."""

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Optional, Tuple, Union

from .errors import DomainError, KfcSyntaxError
from .logging import logger

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


def format_rational(value: Union[Fraction, int]) -> str:
    """Render a rational as `p/q`, or as a bare integer when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str, line_number: Optional[int] = None) -> Fraction:
    """Parse `p/q` or an integer. Decimals are refused: everything stays exact.

    Args:
        text: Token to parse
        line_number: Source line, reported in the error when given

    Returns:
        The parsed value in lowest terms
    """
    token = text.strip()
    if not _RATIONAL_PATTERN.match(token):
        message = f"expected a rational 'p/q' or an integer, got '{text}'"
        if line_number is None:
            raise DomainError(message)
        raise KfcSyntaxError(line_number, message)
    numerator, _, denominator = token.partition("/")
    if denominator and int(denominator) == 0:
        message = f"zero denominator in '{text}'"
        if line_number is None:
            raise DomainError(message)
        raise KfcSyntaxError(line_number, message)
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def parse_int(text: str, line_number: int, minimum: Optional[int] = None) -> int:
    """Parse an integer token from an input file."""
    token = text.strip()
    if not re.match(r"^[+-]?\d+$", token):
        raise KfcSyntaxError(line_number, f"expected an integer, got '{text}'")
    value = int(token)
    if minimum is not None and value < minimum:
        raise KfcSyntaxError(line_number, f"expected an integer >= {minimum}, got {value}")
    return value


def content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield (line_number, stripped_line), skipping blank and `#` comment lines."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def read_text_file(file_path: Path) -> str:
    """Read a UTF-8 input file, turning OS errors into domain errors."""
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as e:
        raise DomainError(f"could not read {file_path}: {e}") from e
    logger.debug(f"Read {len(text)} characters from {file_path}")
    return text


def safe_file_write(file_path: Path, content: str, description: Optional[str] = None) -> bool:
    """Safely write content to a file with error handling."""
    desc = description or f"file {file_path}"
    try:
        file_path.write_text(content, encoding="utf-8")
        logger.system(f"Generated {desc}")
        return True
    except OSError as e:
        logger.error(f"Failed to write {desc}: {e}")
        return False
