"""Exception hierarchy shared by the workbench."""


class KUError(ValueError):
    """Base class for every error raised by kuwork."""


class SizeMismatch(KUError):
    pass


class CapExceeded(KUError):
    """An exhaustive enumeration was asked for beyond its size cap."""


class ParseError(KUError):
    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
