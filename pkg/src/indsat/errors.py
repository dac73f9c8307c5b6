"""Exception types shared across the package."""


class ContractError(ValueError):
    """A documented precondition of an operation was violated."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ResourceLimitError(RuntimeError):
    """A configured search or size budget was exceeded."""

    def __init__(self, message: str, limit: int | None = None):
        super().__init__(message)
        self.limit = limit
