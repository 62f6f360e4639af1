"""Exception types raised across the package."""


class QVirasoroError(Exception):
    """Base class for package errors."""


class MixedScalarError(QVirasoroError, TypeError):
    """Exact and numeric scalars (or two different numeric q) were combined."""


class ConstraintError(QVirasoroError, ValueError):
    """An index constraint of an identity was violated."""


class VanishingAngleError(QVirasoroError, ZeroDivisionError):
    """``<n>`` vanishes (numerically) on a mode that must be divided by it."""


class DivergentSeriesError(QVirasoroError, ValueError):
    """A Neumann series was requested on a mode where it does not converge."""


class ConfigError(QVirasoroError, ValueError):
    """Invalid simulation configuration."""


class StabilityError(QVirasoroError, RuntimeError):
    """A simulated coefficient became non-finite or exceeded the blow-up bound."""

    def __init__(self, message, step=None, partial=None):
        super().__init__(message)
        self.step = step
        self.partial = partial
