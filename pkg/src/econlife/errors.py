"""Exceptions shared across the package."""


class NumericError(RuntimeError):
    """An iterative numerical procedure failed to converge."""
