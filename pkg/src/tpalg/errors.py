"""Exception hierarchy shared by the kernel and the command line."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for every error raised by tpalg."""


class DimensionError(AlgebraError, ValueError):
    """Tensor or matrix extents do not fit together."""


class ArgumentError(AlgebraError, ValueError):
    """An argument is malformed (bad permutation, bad split, wrong shape)."""


class ConfigurationError(AlgebraError, ValueError):
    """An object lacks a product or map that the requested check needs."""


class PreconditionError(AlgebraError):
    """An input fails a mathematical precondition.

    ``reports`` carries the failing identity reports when the precondition is
    itself an identity check, so callers can show the witnesses.
    """

    def __init__(self, message: str, reports=()):
        super().__init__(message)
        self.reports = tuple(reports)
