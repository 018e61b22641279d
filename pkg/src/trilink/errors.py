"""Exception types raised by trilink."""


class TrilinkError(ValueError):
    """Base class for all trilink errors."""


class DegenerateInput(TrilinkError):
    """Two points of a triple coincide (within tolerance)."""


class UnknownPreset(TrilinkError):
    pass


class ParseError(TrilinkError):
    """A link document could not be parsed; ``location`` says where."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class DisjointnessViolation(TrilinkError):
    """Two link components come closer than the configured tolerance."""

    def __init__(self, message, pair=None, params=None, distance=None):
        self.pair = pair
        self.params = params
        self.distance = distance
        super().__init__(message)


class NotARotation(TrilinkError):
    pass


class CorrespondenceMismatch(TrilinkError):
    """Gauss-integral and subtorus-degree values disagree for some slot."""

    def __init__(self, message, entry=None):
        self.entry = entry
        super().__init__(message)


class NotNullHomologous(TrilinkError):
    """The triple linking formulas need all pairwise linking numbers to vanish."""


class GridTooLarge(TrilinkError):
    pass
