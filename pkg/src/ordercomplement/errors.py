"""Exception hierarchy shared by the library and the CLI."""


class OrderComplementError(Exception):
    pass


class PosetError(OrderComplementError, ValueError):
    """Input does not describe a valid finite poset."""


class CycleError(PosetError):
    def __init__(self, message, pair_index=None):
        super().__init__(message)
        self.pair_index = pair_index


class DuplicateNameError(PosetError):
    pass


class UnknownLabelError(PosetError):
    pass


class ParseError(PosetError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class InvalidPermutation(OrderComplementError, ValueError):
    pass


class IndexOutOfRange(OrderComplementError, IndexError):
    pass


class SizeGuardError(OrderComplementError, ValueError):
    """Raised before starting an exponential computation on too large an input."""


class DimensionMismatch(OrderComplementError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass
