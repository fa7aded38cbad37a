"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class TelescopingError(PreconditionError):
    """A covector is not a difference derivative of the stated polynomial."""


class DegreeOverflowError(PreconditionError):
    """A polynomial lies outside the degree range a functional determines."""


class NotAnnihilatingError(PreconditionError):
    """A functional does not annul the required truncated ideal piece.

    ``generator`` is the first truncated generator with a nonzero pairing.
    """

    def __init__(self, message, generator=None, value=None):
        super().__init__(message)
        self.generator = generator
        self.value = value


class ColumnCapExceeded(ValueError):
    """A truncated space would exceed the configured column cap."""
