"""Exception taxonomy shared by all weylab modules."""


class WeylabError(Exception):
    """Base class for weylab errors."""


class ConfigurationError(WeylabError):
    """Unsupported type label or malformed configuration."""


class DomainError(WeylabError, ValueError):
    """Input outside the mathematical domain of an operation."""


class CapabilityError(WeylabError):
    """Request exceeds a configured size cap (Weyl group order, weight diagram, ...)."""


class ScaleError(WeylabError):
    """Subdivision scale N below the type-dependent threshold."""
