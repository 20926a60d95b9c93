"""Exception hierarchy shared by the library and the CLI."""


class HexaringError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class FormatError(HexaringError, ValueError):
    """Malformed text input (vectors, matrices, HCode files)."""

    exit_code = 2


class PreconditionError(HexaringError, ValueError):
    """A theorem hypothesis or operation precondition does not hold."""

    exit_code = 3


class CapExceededError(HexaringError):
    """A brute-force or enumeration size cap would be exceeded."""

    exit_code = 4
