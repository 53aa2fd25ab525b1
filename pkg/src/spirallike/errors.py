"""Exception hierarchy shared by all modules."""


class SpirallikeError(ValueError):
    """Base class for every error raised by this package."""


class ConstraintError(SpirallikeError):
    """Parameters violate 0 < alpha < 1, |lambda| < pi*alpha/2 or a similar range."""


class OriginError(SpirallikeError):
    """An operation that needs a nonzero point received the origin."""


class RidgeError(SpirallikeError):
    """The log-radius derivative is undefined at the requested angle."""


class SingularityError(SpirallikeError):
    """Evaluation at a pole or branch zero of Q."""


class QuadratureError(SpirallikeError):
    """Quadrature did not reach the requested tolerance.

    ``estimate`` holds the last value computed and ``error`` the last
    difference between successive refinements.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class DegenerateMapError(SpirallikeError):
    """A sampled map vanished away from the origin."""


class UnboundedOrderError(SpirallikeError):
    """The log-radius derivative is unbounded, so no finite order exists."""
