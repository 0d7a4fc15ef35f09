"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ScaleLawError(Exception):
    """Base class for all errors raised by scalelaw."""


class ArgumentError(ScaleLawError, ValueError):
    """Malformed arguments: wrong lengths, empty vectors, bad shapes."""


class DomainError(ScaleLawError, ValueError):
    """An input lies outside the domain of a functional form (e.g. x <= 0)."""


class ConfigurationError(ScaleLawError, ValueError):
    """A FormSpec and a parameter collection do not match structurally."""


class ParameterError(ScaleLawError, ValueError):
    """Parameter values for which a form is undefined."""


class NotRepresentableError(ScaleLawError, ValueError):
    """A kernel cannot be expressed in the requested alternative form."""


class DataLoadError(ScaleLawError, ValueError):
    """A dataset file could not be parsed; message names row and column."""


class SplitError(ScaleLawError, ValueError):
    """A split left the training side empty."""


class FitError(ScaleLawError, RuntimeError):
    """Every seed of a fit diverged."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class SolverError(ScaleLawError, RuntimeError):
    """The compute-optimal solver did not reach a stationary point."""

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best
