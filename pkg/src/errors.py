"""Exception hierarchy for the rotating-vacuum toolkit.

Library code raises these; only the CLI turns them into exit codes.
"""

from __future__ import annotations

from typing import Any, Optional, Sequence


class RotvacError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RotvacError, ValueError):
    """A physics input lies outside the domain of the formula being evaluated."""


class ConfigError(RotvacError, ValueError):
    """A run configuration or regulator specification is invalid."""


class SingularPointError(RotvacError, ArithmeticError):
    """A logarithmic factor of the structure function vanishes at the requested point."""

    def __init__(self, message: str, factor: Optional[complex] = None):
        super().__init__(message)
        self.factor = factor


class ConvergenceError(RotvacError, RuntimeError):
    """An extrapolation ladder failed to show decreasing residuals."""

    def __init__(self, message: str, residuals: Sequence[float] = (), table: Any = None):
        super().__init__(message)
        self.residuals = list(residuals)
        self.table = table


class OutputError(RotvacError, OSError):
    """An output file could not be written."""

    def __init__(self, path: str, reason: str):
        super().__init__(f"Cannot write output '{path}': {reason}")
        self.path = path
