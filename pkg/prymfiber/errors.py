"""Exception hierarchy for prymfiber."""


class PrymError(Exception):
    """Base class for all prymfiber errors."""


class InputError(PrymError):
    """Input could not be parsed or does not match the graph schema."""


class DomainError(PrymError, ValueError):
    """Input is well-formed but violates a mathematical precondition."""


class NotStable(DomainError):
    """Graph is not the dual graph of a stable curve."""


class NotEulerian(DomainError):
    """Edge subset has a vertex of odd valency."""


class CapExceeded(DomainError):
    """Exhaustive enumeration would exceed the configured cap."""


class BadT(DomainError):
    """Twisting exponent t below the standing bound t >= 10."""


class TooManyComponents(DomainError):
    """Subcurve lattice too large for exhaustive certification."""


class HypothesisNotMet(DomainError):
    """Graph does not satisfy the hypothesis of the corollary checks."""


class Disconnected(DomainError):
    """Monodromy data yields a disconnected double cover."""


class SplitInvalid(DomainError):
    """Monodromy data violates the split/connected rules."""


class SpaceTooLarge(DomainError):
    """Search bounds admit too many candidates."""
