"""Helpers for the line-oriented text interfaces.

All floating-point output uses 17 significant digits (round-trippable
doubles) with negative zero normalised to zero, so dumps diff stably
across platforms.
"""

from __future__ import annotations

from collections.abc import Iterator


def format_float(x: float) -> str:
    """17-significant-digit scientific form; ``-0`` comes out as ``0``."""
    return f"{float(x) + 0.0:.16e}"


def format_value(x) -> str:
    """Integers verbatim, everything else through :func:`format_float`."""
    if isinstance(x, (int,)) or (hasattr(x, "dtype") and x.dtype.kind in "iu"):
        return str(int(x))
    return format_float(x)


def content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield ``(lineno, stripped_line)`` skipping blanks and ``#`` comments.

    Line numbers are 1-based; ``#`` starts a comment anywhere on a line.
    """
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line
