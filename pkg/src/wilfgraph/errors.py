"""Exception types shared across the package."""


class WilfgraphError(Exception):
    """Base class for all package-specific errors."""


class EmptyGenerators(WilfgraphError):
    """A semigroup construction received no positive generators."""


class NonCoprimeGenerators(WilfgraphError):
    """gcd of the generators exceeds 1, so the complement is infinite."""


class InvalidTruncation(WilfgraphError):
    """Truncation point of a truncated semigroup must be positive."""


class NotAMember(WilfgraphError):
    """An operation requiring a semigroup element was given a non-member."""


class InconsistentDepths(WilfgraphError):
    """An edge of an associated graph violates the depth-sum lower bound."""


class NotEdgeMaximal(WilfgraphError):
    """A graph assumed edge-maximal for its matching number is not."""


class Infeasible(WilfgraphError):
    """No loopy graph exists with the requested parameters."""


class TooLarge(WilfgraphError):
    """Graph exceeds the size supported by canonical labeling."""


class WindowTooSmall(WilfgraphError):
    """No Sidon offset sequence of the requested length fits the window."""


class RealizationFailed(WilfgraphError):
    """A realization plan failed its post-construction verification."""


class WilfCounterexample(WilfgraphError):
    """|P||L| < c was observed; carries a full dump of the offending semigroup."""
