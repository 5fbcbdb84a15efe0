class FFDigitsError(Exception):
    """Base class for errors raised by ffdigits."""


class CapExceeded(FFDigitsError):
    """A size limit (field cardinality, DFT length, sweep size) would be exceeded."""


class LevelMismatch(FFDigitsError, TypeError):
    """Operands live at different levels of a field tower."""


class PreconditionError(FFDigitsError, ValueError):
    """Arguments violate an operation's stated hypothesis."""
