"""Exception types shared by every evaluator in the package."""


class DomainError(ValueError):
    """An argument or parameter lies outside the region where a function is defined."""


class ConvergenceError(ArithmeticError):
    """An iterative method (quadrature, root finder, ODE stepper) ran out of budget."""


class OverflowSignal(OverflowError):
    """A result is too large (or a denominator too small) to be represented."""
