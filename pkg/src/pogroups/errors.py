class InputError(ValueError):
    """Malformed input: wrong dimensions, non-integer data where integers are required."""


class DomainError(ValueError):
    """Well-formed input outside an operation's domain (e.g. a non-linear stack)."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None, token=None):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        where = f"{line}:{column}: " if line is not None else ""
        tok = f" (at {token!r})" if token is not None else ""
        super().__init__(f"{where}{message}{tok}")
