"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the region where an operation is defined."""


class ResolutionError(RuntimeError):
    """A discretization is too coarse to deliver a trustworthy answer."""
