"""Error taxonomy shared across the package.

Every failure mode callers are expected to handle gets its own class so suite
runners can record errors as data instead of aborting.
"""


class MagHardyError(Exception):
    """Base class for all package-specific errors."""


class OriginError(MagHardyError, ValueError):
    """A geometric quantity was requested at the origin where it is undefined."""


class DomainError(MagHardyError, ValueError):
    """Structural parameter out of range (bad radii, lambda <= 0, n_phi too small, ...)."""


class SingularWeightError(MagHardyError, ValueError):
    """Weight evaluation on the degenerate set {x = 0} with a negative radial power."""


class NonFiniteError(MagHardyError, ArithmeticError):
    """An integrand evaluated to NaN or infinity at a quadrature node."""


class AdmissibilityError(MagHardyError, ValueError):
    """Theorem preconditions on exponents/parameters are not satisfied."""


class RealnessError(MagHardyError, TypeError):
    """A real-only verifier received a function with a nonzero imaginary part."""


class ConfigError(MagHardyError, ValueError):
    """Malformed suite configuration (unknown keys, missing fields, bad types)."""
