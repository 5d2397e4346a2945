class VertexworkError(Exception):
    pass


class ParameterError(VertexworkError, ValueError):
    """A parameter record violates one of its bounds; the message names the bound."""


class NumericalError(VertexworkError, RuntimeError):
    pass


class BracketError(NumericalError):
    """The function has no sign change on the requested bracket."""


class PoleError(NumericalError):
    """The resolvent factor ``(k+1)I + (k-1)U`` is singular, i.e. ``k`` is a pole of the S-matrix."""
