"""Exception types raised across the package."""


class BlowupError(Exception):
    """Base class for all errors raised by this package."""


class GraphSizeError(BlowupError, ValueError):
    """Graph order exceeds what the bitset kernel supports."""


class Graph6ParseError(BlowupError, ValueError):
    """Malformed graph6 input.

    :param message: human readable description
    :param offset: byte offset of the first offending character

    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ParameterError(BlowupError, ValueError):
    """A parameter violates the hypothesis of the requested operation."""


class ResourceLimitError(BlowupError, RuntimeError):
    """Exhaustive search refused because its guard would be exceeded.

    :param message: human readable description
    :param estimate: rough size of the refused search space, if known

    """

    def __init__(self, message: str, estimate: int | None = None):
        if estimate is not None:
            message = f"{message} (estimated search space ~{estimate:.3g})"
        super().__init__(message)
        self.estimate = estimate


class FamilyInvariantError(BlowupError, RuntimeError):
    """A graph family violates an invariant an upstream step guarantees."""


class UnknownTheoremError(BlowupError, KeyError):
    """Requested verification key is not in the theorem registry."""
