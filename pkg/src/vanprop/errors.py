class InputError(ValueError):
    """Malformed or out-of-domain input (bad permutation, bad parameters)."""


class ResourceLimitError(RuntimeError):
    """A configured size limit (table size, element cap) would be exceeded."""

    def __init__(self, what: str, requested: int, limit: int):
        super().__init__(f"{what} {requested} exceeds the configured limit {limit}")
        self.requested = requested
        self.limit = limit


class VerificationError(AssertionError):
    """An internal cross-check between two independent routes disagreed."""
