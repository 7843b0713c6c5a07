"""Exception types shared across the toolkit."""


class GbgcError(Exception):
    """Base class for all toolkit errors."""


class GraphValidationError(GbgcError, ValueError):
    """A structural contract was violated (bad index, empty ball, bad partition, ...)."""


class DatasetFormatError(GbgcError, ValueError):
    """An input file could not be parsed; message carries file and line context."""

    def __init__(self, message: str, path=None, line: int | None = None):
        if path is not None:
            where = f"{path}:{line}" if line is not None else str(path)
            message = f"{where}: {message}"
        super().__init__(message)
        self.path = path
        self.line = line
