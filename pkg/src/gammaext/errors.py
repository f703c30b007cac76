"""Exception hierarchy shared by every module of the package."""


class MatroidError(Exception):
    """Base class for all errors raised by gammaext."""


class DimensionError(MatroidError, ValueError):
    """Matrix shapes do not fit together."""


class LoopError(MatroidError):
    """A zero column (loop) was found where a loopless matroid is required."""

    def __init__(self, label):
        super().__init__(f"element {label!r} is a loop")
        self.label = label


class ColoopError(MatroidError):
    """An element lies in every basis where a coloopless matroid is required."""

    def __init__(self, label):
        super().__init__(f"element {label!r} is a coloop")
        self.label = label


class LabelError(MatroidError, KeyError):
    """Duplicate, unknown or colliding ground-set labels."""

    def __str__(self):
        return str(self.args[0]) if self.args else "label error"


class EmptyError(MatroidError, ValueError):
    """An operation received an empty set where a non-empty one is needed."""


class DependentError(MatroidError, ValueError):
    """A set that must be independent is dependent."""


class SizeError(MatroidError, ValueError):
    """The ground set exceeds the bound of an exhaustive search."""


class ParseError(MatroidError, ValueError):
    """Malformed matrix file; ``line`` is 1-based."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class HeaderError(ParseError):
    pass


class EntryError(ParseError):
    pass


class LabelLineError(ParseError):
    pass
