"""Exception types shared across the package."""


class GaussRatioError(Exception):
    """Base class for all errors raised by this package."""


class ParameterPole(GaussRatioError):
    """A hypergeometric parameter sits at a pole (c a non-positive integer)."""


class PoleError(GaussRatioError):
    """A gamma/Pochhammer ratio is evaluated at a true pole."""


class NonConvergence(GaussRatioError):
    """A series, continued fraction, or transform ladder failed to converge."""


class DegenerateExtrapolation(GaussRatioError):
    """The boundary-value extrapolation ladder stagnated above tolerance."""


class UndefinedB(GaussRatioError):
    """The boundary constant is undefined (gamma pole in its numerator)."""


class DegenerateParams(GaussRatioError):
    """A prefactor or series parameter of the polynomial identity is at a pole."""


class SeriesTruncationError(GaussRatioError):
    """Guard coefficients of a truncated polynomial identity failed to vanish."""


class LadderDegeneracy(GaussRatioError):
    """An elementary contiguous relation has an identically vanishing coefficient."""


class DenominatorZero(GaussRatioError):
    """The denominator 2F1 vanishes (or nearly so) at the evaluation point."""


class NoConvergence(NonConvergence):
    """Continued-fraction evaluation exceeded the allowed depth."""


class IllConditioned(GaussRatioError):
    """Floating-point determinants lost all significant digits; use rational inputs."""


class MalformedFraction(GaussRatioError):
    """A continued fraction does not satisfy the invariants required here."""


class TailUndecided(GaussRatioError):
    """Sign pattern of a continued-fraction tail could not be certified or probed."""


class DegeneratePoints(GaussRatioError):
    """Pick-matrix sample points are degenerate (repeated or not in the upper half-plane)."""


class PreconditionFailed(GaussRatioError):
    """A named hypothesis of an integral representation does not hold."""

    def __init__(self, condition: str, message: str = ""):
        self.condition = condition
        super().__init__(message or f"precondition failed: {condition}")


class InapplicableParameters(PreconditionFailed):
    """Parameters violate a worked example's stated applicability conditions."""


class QuadratureStall(GaussRatioError):
    """Adaptive quadrature could not reach the requested tolerance."""


class NearCutPole(GaussRatioError):
    """The Cauchy kernel is singular on the quadrature node set."""


class UnclassifiedAsymptotics(GaussRatioError):
    """A mixed degenerate case at infinity is not covered by the implemented case list."""
