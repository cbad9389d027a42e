"""Exception types shared across the package."""


class SignedSpectraError(Exception):
    """Base class for all package errors."""


class BadVertex(SignedSpectraError):
    pass


class SelfLoop(SignedSpectraError):
    pass


class DuplicateEdge(SignedSpectraError):
    pass


class BadParts(SignedSpectraError):
    pass


class BadParam(SignedSpectraError):
    pass


class BadInput(SignedSpectraError):
    pass


class NotBipartite(SignedSpectraError):
    pass


class NotSymmetric(SignedSpectraError):
    pass


class BadPartition(SignedSpectraError):
    pass


class Incomparable(SignedSpectraError):
    pass


class TooLarge(SignedSpectraError):
    pass


class NumericDomain(SignedSpectraError):
    pass


class ShiftNoOp(SignedSpectraError):
    """Raised when a shift has no private neighbors to move."""


class FormatError(SignedSpectraError):
    """Malformed signed-graph text input; message names the offending line."""
