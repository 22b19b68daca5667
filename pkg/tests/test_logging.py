"""Tests for the colour-coded logger."""

import io

from knotfloer.constants import CLR_BOLD_MAGENTA, CLR_RESET
from knotfloer.utils.logging import LEVEL_COLORS, Logger, format_record

STAMP = "2026-01-01 00:00:00"


def test_continuation_lines_are_indented():
    first, second = format_record("Tau", "tau = 1\nover 3 generators", STAMP)
    header = f"[{STAMP}] [Tau]: "
    assert header in first
    assert first.endswith(f"{CLR_BOLD_MAGENTA}tau = 1{CLR_RESET}")
    assert second == f"{' ' * len(header)}{CLR_BOLD_MAGENTA}over 3 generators{CLR_RESET}"


def test_empty_message_keeps_the_header():
    assert len(format_record("System", "", STAMP)) == 1


def test_unknown_level_uses_default_colours():
    (line,) = format_record("Custom", "x", STAMP)
    assert "[Custom]: " in line
    assert "Custom" not in LEVEL_COLORS


def test_debug_is_gated():
    stream = io.StringIO()
    log = Logger(stream=stream)
    log.debug("hidden")
    assert stream.getvalue() == ""
    log.set_debug(True)
    log.debug("shown")
    assert "shown" in stream.getvalue()


def test_default_stream_is_stderr(capsys):
    Logger().bound("M_t ready")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "[Bound]: " in captured.err
