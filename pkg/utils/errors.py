"""Exception types shared by the library and the CLI."""

from typing import Any, Optional


class RidgewalkError(Exception):
    """Base class for all ridgewalk errors."""


class ConfigError(RidgewalkError, ValueError):
    """Invalid run configuration or invalid constructor arguments."""


class NumericalError(RidgewalkError, ArithmeticError):
    """
    A numerical routine failed in a way that cannot be reported as data.

    Args:
        message: Human-readable description
        partial: Whatever was computed before the failure (e.g. converged eigenvalues)
    """

    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial


class ArtifactWriteError(RidgewalkError, OSError):
    """An output artifact could not be written."""
