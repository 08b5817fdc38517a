"""Exception types raised by the pipeline."""


class FoxPolyError(Exception):
    """Base class for all errors raised by this package."""


class WordParseError(FoxPolyError, ValueError):
    def __init__(self, message, char="", position=0):
        super().__init__(message)
        self.char = char
        self.position = position


class NotCyclicallyReducedError(FoxPolyError, ValueError):
    pass


class RankMismatchError(FoxPolyError, ValueError):
    pass


class CharacterError(FoxPolyError, ValueError):
    """A pair of values does not define a usable character."""


class ClassificationError(FoxPolyError):
    """The presentation is outside the cases the construction covers."""

    def __init__(self, message, kind):
        super().__init__(message)
        self.kind = kind


class TorsionError(FoxPolyError):
    """Splitting complexity requested for a group with torsion."""
