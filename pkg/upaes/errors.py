"""
Exception types raised across the upaes package.
"""


class PaesLabError(Exception):
    """Base class for every error raised by upaes."""


class DimensionError(PaesLabError, ValueError):
    """Raised when vector lengths or genotype lengths do not match."""


class ConfigError(PaesLabError, ValueError):
    """Raised for invalid benchmark, archiver, run or sweep parameters."""


class RangeError(PaesLabError, ValueError):
    """Raised when a value lies outside the range an operation accepts."""


class InstanceTooLargeError(PaesLabError, ValueError):
    """Raised when an exact oracle refuses an instance that is too large to enumerate."""


class InvariantViolation(PaesLabError, RuntimeError):
    """Raised when a debug-mode invariant check fails. Always a programming error."""
