"""Exception hierarchy shared by every module."""


class GraphSemigroupError(Exception):
    """Base class for all library errors."""


class InputError(GraphSemigroupError, ValueError):
    """Malformed or out-of-range input."""


class BadParameter(InputError):
    pass


class LengthMismatch(InputError):
    pass


class BadDegree(InputError):
    pass


class NotEffective(InputError):
    pass


class DisconnectedGraph(InputError):
    pass


class EnumerationCapExceeded(GraphSemigroupError):
    """An exhaustive search would exceed the configured enumeration cap.

    Raised instead of returning a partial answer.
    """

    def __init__(self, what, needed, cap):
        super().__init__(f"{what}: {needed} items exceeds cap {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


class TheoremViolation(GraphSemigroupError, AssertionError):
    """A proved statement failed on a concrete instance; this indicates a bug."""
