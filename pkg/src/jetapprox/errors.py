"""Exception and warning types shared across the toolkit."""


class JetApproxError(Exception):
    """Base class for all toolkit errors."""


class InvalidParamsError(JetApproxError, ValueError):
    """Arguments violate a documented precondition."""


class PoleEvaluationError(JetApproxError, ZeroDivisionError):
    """A rational function was evaluated exactly at one of its pole centers."""


class ResidueObstructionError(JetApproxError):
    """Antidifferentiation hit a nonzero order-1 coefficient; the primitive
    would need a logarithm, which the representation does not admit."""


class CurveNotClosedError(JetApproxError):
    """A closed curve was required."""


class AmbiguousWindingError(JetApproxError):
    """The winding integral did not land near an integer."""


class NoConvergenceError(JetApproxError):
    """Adaptive quadrature exhausted its bisection depth without meeting the
    requested tolerance."""


class PoleTooCloseError(JetApproxError):
    """A multiplier pole lies inside the clearance band of the curve."""


class DegenerateChordError(JetApproxError):
    """Chord between two curve points has zero length."""


class NotDifferentiableError(JetApproxError):
    """The oracle kind does not support exact differentiation."""


class InsufficientSamplesError(JetApproxError):
    """Too few sample points for the requested least-squares basis."""


class UncoveredPointError(JetApproxError):
    """Point lies in no disk of the piecewise-polynomial system."""


class NonTerminationError(JetApproxError):
    """Disk radius search underflowed; input points are too close to
    distinguish."""


class JetConsistencyError(JetApproxError):
    """A jet failed the integration-by-parts screening and the caller asked
    for strict gating."""


class IllConditionedWarning(UserWarning):
    """Least-squares basis was rank deficient; the computed fit is still
    returned."""


class JetConsistencyWarning(UserWarning):
    """A jet failed the integration-by-parts screening; processing
    continued."""
