class AbacusError(Exception):
    """Base class for library errors."""


class ValidationError(AbacusError, ValueError):
    """Malformed input: bad text, bad parameters, out-of-range cells."""


class PreconditionError(AbacusError, ValueError):
    """Well-formed input that the requested operation does not accept."""


class PropertyViolation(AbacusError, AssertionError):
    """An internal consistency check failed. Carries a witness."""

    def __init__(self, prop, witness):
        self.prop = prop
        self.witness = witness
        super().__init__(f"{prop}: {witness}")
