"""Exception hierarchy shared by all ranklab modules."""


class RanklabError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(RanklabError):
    """Vector/matrix/polynomial shapes do not line up."""


class NonInvertibleDenominator(RanklabError):
    """A rational entry has a denominator divisible by the chosen prime."""


class DegenerateParams(RanklabError):
    """Parametrization input violates a family invariant (zero/dependent vectors)."""


class NoKnownEquation(RanklabError):
    """No defining hypersurface equation is shipped for this (family, s) pair."""


class UnknownCase(RanklabError):
    """Secant dimension not covered by table policy and too large to sample."""


class SamplingFailed(RanklabError):
    """Random parameter sampling kept hitting degenerate configurations."""


class AllZero(RanklabError):
    """All tangent-element coefficients vanish."""


class ExcludedParameter(RanklabError):
    """Supplied free parameter hits an excluded value for the selected case."""


class GuardViolated(RanklabError):
    """Parameters do not satisfy the guard of the requested decomposition case."""


class ProportionalPoints(RanklabError):
    """The two points defining a line are proportional (no line)."""


class NoSecondaryIntersection(RanklabError):
    """The restricted equation vanishes only at the variety point of the line."""


class WitnessNotFound(RanklabError):
    """No secondary intersection found within the try budget (inconclusive)."""


class PrecondViolated(RanklabError):
    """Operation precondition violated (e.g. the point lies on the hypersurface)."""


class NotAHypersurface(RanklabError):
    """The variety itself is not a hypersurface in its ambient space."""


class ConfigError(RanklabError):
    """Bad CLI configuration or malformed data file."""
