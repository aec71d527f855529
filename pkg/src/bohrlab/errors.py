"""Exception hierarchy."""


class BohrError(Exception):
    """Base class for all library errors."""


class DomainError(BohrError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class NonzeroConstantTerm(BohrError, ValueError):
    """Composition was requested with an inner series whose constant term is not zero."""


class ZeroOutsideDisk(BohrError, ValueError):
    """A Blaschke factor was requested with a zero of modulus >= 1."""


class UnknownStyle(BohrError, ValueError):
    pass


class DominationHypothesisViolated(BohrError):
    """Sampled |g'| exceeded k|h'| beyond tolerance."""


class HypothesisViolation(BohrError, ValueError):
    """Parameters do not satisfy a theorem's hypotheses."""


class BracketFailure(BohrError):
    """Equation values at the bracket endpoints share a sign."""


class NoConvergence(BohrError):
    pass
