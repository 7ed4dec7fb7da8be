"""Exception types raised across the package."""


class NfeError(Exception):
    """Base class for all errors raised by :mod:`nfeseq`."""


class IndexOverflow(NfeError, OverflowError):
    """A Fibonacci index exceeds the configured magnitude limit."""


class ParseError(NfeError, ValueError):
    """A textual value could not be parsed."""


class DomainError(NfeError, ValueError):
    """An operation was asked to work outside its value domain."""


class ResolutionError(NfeError, ValueError):
    """Requested geometry resolution exceeds the configured caps."""


class IoError(NfeError, OSError):
    """Output could not be written."""
