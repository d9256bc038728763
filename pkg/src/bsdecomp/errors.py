"""Exception hierarchy shared across the package."""


class BsdecompError(Exception):
    """Base class for all domain errors raised by this package."""


class LengthMismatch(BsdecompError):
    """Two sequences that must have equal length do not."""


class EmptyColumn(BsdecompError):
    """A diagram column in 0..width has no entries."""


class NotADegreeSequence(BsdecompError):
    """A tuple that must be strictly increasing is not."""


class NonPositiveDegree(BsdecompError):
    """A generator degree was < 1."""


class UnsupportedCodimension(BsdecompError):
    """A closed form was requested outside codimension 1..3."""


class RequiresStrictDegrees(BsdecompError):
    """The first-elimination predicate needs strictly increasing degrees."""


class SizeExceeded(BsdecompError):
    """A shuffle enumeration would exceed the configured cap."""


class NotInCone(BsdecompError):
    """The greedy algorithm cannot decompose the diagram.

    Carries the partial decomposition and the residual at the point of
    failure, since the failure point is diagnostic.
    """

    def __init__(self, message, partial=None, residual=None):
        super().__init__(message)
        self.partial = partial
        self.residual = residual


class BettiFormatError(BsdecompError):
    """A BETTI/1 document failed to parse; `line` is 1-based."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
