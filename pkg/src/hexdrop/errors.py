"""Exception types raised by hexdrop."""


class HexdropError(Exception):
    """Base class for all hexdrop errors."""


class DomainError(HexdropError, ValueError):
    """An argument lies outside the domain of a distribution function."""


class ConfigError(HexdropError, ValueError):
    """A network or cell description is semantically invalid."""


class ParityError(ConfigError):
    """A lattice index (m, n) whose parities differ, so it is not a cell centre."""


class ParseError(ConfigError):
    """Malformed config text. ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class BinningError(HexdropError):
    """A point could not be assigned to any bin of a partition."""
