"""Exception types shared across the package."""


class LastSquaresError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LastSquaresError):
    """Input text does not match the expected grammar.

    Attributes:
        offset: byte offset of the first offending character.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class EmptyBoard(LastSquaresError):
    """An arrangement must cover at least one cell."""


class FirstCellNotBlack(LastSquaresError):
    """Domino-family boards must start with a black square."""


class LastCellBlack(LastSquaresError):
    """Square-family boards must not end with a black square."""


class SizeLimitExceeded(LastSquaresError):
    """Requested enumeration exceeds the configured size guard."""


class RangeError(LastSquaresError):
    """Arguments outside the domain of the requested quantity."""


class NonIntegralResult(LastSquaresError):
    """An exact rational that must reduce to an integer did not."""


class ParityMismatch(LastSquaresError):
    """The requested exceptional arrangement requires the other parity of r."""


class NotPlusClass(LastSquaresError):
    """The map is defined on plus-class arrangements only."""


class InternalInvariantViolation(LastSquaresError):
    """A structural guarantee failed; indicates a bug, not bad input."""
