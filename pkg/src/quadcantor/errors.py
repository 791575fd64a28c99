"""Exception types shared across the package."""


class FieldError(ValueError):
    """Invalid field parameter or operands from different fields."""


class ParseError(ValueError):
    """Malformed element text; ``token`` names the offending piece."""

    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


class PreconditionError(ValueError):
    """An operation's mathematical precondition does not hold."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, message: str, estimate: int, cap: int):
        super().__init__(message)
        self.estimate = estimate
        self.cap = cap
