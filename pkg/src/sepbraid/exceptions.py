"""Exception hierarchy shared by the engines and the command line."""


class BraidError(Exception):
    """Base class for every error raised by :mod:`sepbraid`."""


class InputError(BraidError, ValueError):
    """Malformed input data (bad JSON, wrong sizes, invalid rationals)."""


class ContractViolation(BraidError):
    """A documented precondition or internal invariant does not hold."""


class SepError(ContractViolation):
    """A separation query could not be answered (overlapping tubes, bad path)."""

    def __init__(self, message, pair=None, time=None):
        super().__init__(message)
        self.pair = pair
        self.time = time


class EmptyIntersectionError(ContractViolation):
    """Two arrangement cells that were expected to meet are disjoint."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ClosureError(BraidError):
    """The closure permutation is inconsistent with the computed cover."""


class NonGenericPathError(BraidError, ValueError):
    """The exact oracle was given a path with simultaneous or degenerate crossings."""

    def __init__(self, message, time=None, pairs=()):
        super().__init__(message)
        self.time = time
        self.pairs = tuple(pairs)
