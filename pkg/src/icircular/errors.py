"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class GuardError(RuntimeError):
    """An exhaustive search refused an instance larger than its guard."""
