"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments outside the mathematical domain of an operation."""


class RangeError(ArithmeticError):
    """Unscaled evaluation outside the overflow/underflow-safe region."""


class NoConvergenceError(RuntimeError):
    """An iteration or quadrature failed to reach the requested tolerance."""


class AccuracyLossError(RuntimeError):
    """An asymptotic expansion is not yet accurate at this argument."""


class OutOfValidityError(RuntimeError):
    """Arguments outside the declared validity region of a method."""
