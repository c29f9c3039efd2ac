"""Exception hierarchy shared by every module of the package."""


class KarmarkarError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(KarmarkarError, ValueError):
    pass


class DomainError(KarmarkarError, ValueError):
    pass


class RankDeficient(KarmarkarError):
    """The stacked constraint matrix does not have full row rank.

    ``dependent_rows`` holds the indices of rows that are (numerically)
    combinations of earlier rows, when known. ``report`` is set by
    :func:`karmarkar.problem.validate` so callers can still print the
    other checks.
    """

    def __init__(self, message, dependent_rows=(), report=None):
        super().__init__(message)
        self.dependent_rows = tuple(dependent_rows)
        self.report = report


class NotOnSimplex(KarmarkarError, ValueError):
    pass


class ZeroDenominator(KarmarkarError, ArithmeticError):
    pass


class NotInterior(KarmarkarError, ValueError):
    pass


class NotFeasible(KarmarkarError, ValueError):
    pass


class NonpositiveObjective(KarmarkarError, ArithmeticError):
    """c'x <= 0, so the log potential is undefined.

    The solver treats this as convergence: the optimum is zero by
    assumption, so the iterate has reached or crossed it.
    """

    def __init__(self, message, objective):
        super().__init__(message)
        self.objective = objective


class PreconditionViolated(KarmarkarError, ValueError):
    pass


class ConstantObjective(KarmarkarError):
    """The projected gradient vanishes: cost is constant on the feasible set."""

    def __init__(self, message, gradient_norm=0.0):
        super().__init__(message)
        self.gradient_norm = gradient_norm


class NumericalBreakdown(KarmarkarError, ArithmeticError):
    pass


class TooLarge(KarmarkarError, ValueError):
    pass


class EmptyFeasibleSet(KarmarkarError):
    pass


class ProblemFormatError(KarmarkarError, ValueError):
    """A problem file could not be parsed; the message names the field."""
