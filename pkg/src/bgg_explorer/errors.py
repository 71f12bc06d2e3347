"""Exception hierarchy shared by all modules."""


class BGGError(Exception):
    """Base class for all errors raised by bgg_explorer."""


class ConfigurationError(BGGError, ValueError):
    """Invalid Cartan type, crossing, real form preset or similar setup."""


class DomainError(BGGError, ValueError):
    """An argument lies outside the domain of an operation."""


class ConsistencyError(BGGError, RuntimeError):
    """An internal invariant failed; indicates a bug, never bad input."""


class GuardError(BGGError, RuntimeError):
    """A size guard refused a computation that would explode."""
