"""Exception hierarchy shared by every module."""


class LRFacesError(Exception):
    """Base class for all library errors."""


class ParseError(LRFacesError, ValueError):
    """Malformed textual input (weights, partitions, subsets)."""


class PreconditionError(LRFacesError, ValueError):
    """Inputs are well formed but violate an operation's precondition."""


class RankMismatch(PreconditionError):
    pass


class BoundExceeded(PreconditionError):
    """A configured size bound (oracle rank, table size, sweep size) was hit."""


class TheoremViolation(LRFacesError, AssertionError):
    """Two independently computed quantities disagree where a theorem says
    they must not. Carries the offending data for a counterexample dump."""

    def __init__(self, message, data=None):
        super().__init__(message)
        self.data = data
