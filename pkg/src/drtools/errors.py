"""Exception types and the diagnostic record shared across the tool."""

from __future__ import annotations

from dataclasses import dataclass


class DrToolsError(Exception):
    """Base class for all tool-specific errors."""


class ModelError(DrToolsError):
    """Raised when a source model would become inconsistent (e.g. duplicate types)."""


class ConfigError(DrToolsError):
    """Raised for invalid configuration: threshold files, sort specs, bad options."""


@dataclass(frozen=True)
class Diagnostic:
    """A non-fatal problem found while analyzing a file.

    Diagnostics are reported on stderr as ``path:line: message`` and never
    abort an analysis run.
    """

    path: str
    line: int
    message: str

    def __str__(self) -> str:
        return f"{self.path}:{self.line}: {self.message}"
