"""Exception hierarchy shared by all modules."""


class QsqrtError(Exception):
    """Base class for every error raised by this package."""


class CircuitError(QsqrtError):
    pass


class InvalidWidthError(CircuitError, ValueError):
    pass


class QubitIndexError(CircuitError, IndexError):
    pass


class OperandError(CircuitError, ValueError):
    pass


class LevelError(CircuitError, ValueError):
    pass


class NetlistParseError(CircuitError, ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class WidthMismatchError(QsqrtError, ValueError):
    pass


class CapacityError(QsqrtError, ValueError):
    """Dense simulation requested above the supported qubit count."""


class DomainError(QsqrtError, ValueError):
    """An argument lies outside the domain of the construction or formula."""
