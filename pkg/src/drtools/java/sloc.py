"""Comment-aware source-line counting.

A line counts iff it carries at least one token outside comments: blank
lines and comment-only lines count 0, a code line with a trailing comment
counts 1, and comment markers inside string literals are code. All LOC
figures in the tool (project SLOC, type SLOC, method MLOC) come from this
one scanner so every context counts lines the same way.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .lexer import END_LINE, LINE, Token, tokenize


def code_lines(tokens: list[Token]) -> list[int]:
    """Sorted 1-based physical line numbers that contain code."""
    lines: set[int] = set()
    for tok in tokens:
        start, end = tok[LINE], tok[END_LINE]
        if end == start:
            lines.add(start)
        else:
            lines.update(range(start, end + 1))
    return sorted(lines)


def count_sloc(source_text: str) -> int:
    """Number of non-blank, non-comment lines in ``source_text``."""
    tokens, _ = tokenize(source_text)
    return len(code_lines(tokens))


def count_sloc_diagnostics(source_text: str) -> tuple[int, list[tuple[int, str]]]:
    """Like :func:`count_sloc` but also returns scanner diagnostics."""
    tokens, diagnostics = tokenize(source_text)
    return len(code_lines(tokens)), diagnostics


class LineIndex:
    """Counts code lines within inclusive line spans of one file."""

    def __init__(self, tokens: list[Token]):
        self._lines = code_lines(tokens)

    def count(self) -> int:
        return len(self._lines)

    def count_span(self, first_line: int, last_line: int) -> int:
        """Code lines in the inclusive physical-line range [first, last]."""
        if last_line < first_line:
            return 0
        lo = bisect_left(self._lines, first_line)
        hi = bisect_right(self._lines, last_line)
        return hi - lo
