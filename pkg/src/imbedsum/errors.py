"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class CapExceeded(RuntimeError):
    """An enumeration or closure would exceed its configured size cap."""


class VerificationError(AssertionError):
    """A brute-force cross-check disagreed with a computed result."""
