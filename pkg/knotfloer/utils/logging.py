"""Colour-coded logging for knotfloer.

Messages go to standard error with a `[timestamp] [Level]: ` header; standard
output carries command results only.
"""

import datetime
import sys
from typing import Dict, List, Optional, TextIO, Tuple

from ..constants import (
    CLR_BOLD_BLUE,
    CLR_BOLD_CYAN,
    CLR_BOLD_GREEN,
    CLR_BOLD_MAGENTA,
    CLR_BOLD_RED,
    CLR_BOLD_WHITE,
    CLR_BOLD_YELLOW,
    CLR_BLUE,
    CLR_CYAN,
    CLR_GREEN,
    CLR_MAGENTA,
    CLR_RED,
    CLR_RESET,
    CLR_WHITE,
    CLR_YELLOW,
)

# (header colour, body colour) per level
LEVEL_COLORS: Dict[str, Tuple[str, str]] = {
    "System": (CLR_CYAN, CLR_BOLD_CYAN),
    "Complex": (CLR_GREEN, CLR_BOLD_GREEN),
    "Upsilon": (CLR_MAGENTA, CLR_BOLD_MAGENTA),
    "Tau": (CLR_MAGENTA, CLR_BOLD_MAGENTA),
    "Bound": (CLR_BLUE, CLR_BOLD_BLUE),
    "Grading": (CLR_BLUE, CLR_BOLD_BLUE),
    "Verify": (CLR_GREEN, CLR_BOLD_GREEN),
    "Warning": (CLR_YELLOW, CLR_BOLD_YELLOW),
    "Error": (CLR_RED, CLR_BOLD_RED),
    "Debug": (CLR_WHITE, CLR_BOLD_WHITE),
}


def format_record(level: str, message: str, timestamp: str) -> List[str]:
    """Render one message as coloured lines.

    Continuation lines are indented to the width of the uncoloured header.
    """
    header_color, body_color = LEVEL_COLORS.get(level, (CLR_WHITE, CLR_BOLD_WHITE))
    plain_header = f"[{timestamp}] [{level}]: "
    lines = message.splitlines() or [""]
    rendered = [f"{header_color}{plain_header}{CLR_RESET}{body_color}{lines[0]}{CLR_RESET}"]
    indent = " " * len(plain_header)
    rendered.extend(f"{indent}{body_color}{line}{CLR_RESET}" for line in lines[1:])
    return rendered


class Logger:
    """Level-based logger; `Debug` is dropped unless enabled."""

    def __init__(self, debug_enabled: bool = False, stream: Optional[TextIO] = None):
        self.debug_enabled = debug_enabled
        self._stream = stream

    @property
    def stream(self) -> TextIO:
        # resolved per call so redirected stderr is honoured
        return self._stream if self._stream is not None else sys.stderr

    def set_debug(self, enabled: bool) -> None:
        """Enable or disable debug logging."""
        self.debug_enabled = enabled

    def log_message(self, level: str, message: str) -> None:
        if level == "Debug" and not self.debug_enabled:
            return
        timestamp = datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        stream = self.stream
        for line in format_record(level, message, timestamp):
            print(line, file=stream)
        stream.flush()

    def system(self, message: str) -> None:
        self.log_message("System", message)

    def complex(self, message: str) -> None:
        """Parsing, validation and fixture construction."""
        self.log_message("Complex", message)

    def upsilon(self, message: str) -> None:
        self.log_message("Upsilon", message)

    def tau(self, message: str) -> None:
        self.log_message("Tau", message)

    def bound(self, message: str) -> None:
        self.log_message("Bound", message)

    def grading(self, message: str) -> None:
        """Cobordism grading computations and their input files."""
        self.log_message("Grading", message)

    def verify(self, message: str) -> None:
        self.log_message("Verify", message)

    def warning(self, message: str) -> None:
        self.log_message("Warning", message)

    def error(self, message: str) -> None:
        self.log_message("Error", message)

    def debug(self, message: str) -> None:
        self.log_message("Debug", message)


# Global logger instance; the application applies the debug setting
logger = Logger()
